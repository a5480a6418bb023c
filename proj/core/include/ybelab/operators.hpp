#ifndef YBELAB_OPERATORS_HPP
#define YBELAB_OPERATORS_HPP

#include "ybelab/algebra.hpp"

#include <utility>

namespace ybe {

/// Evaluation context for operator identities: algebra A, an A-bimodule
/// k-algebra R (zero product allowed), weight lambda and masses kappa, mu.
struct OperatorContext {
    Algebra algebra;
    BimoduleKAlgebra module;
    Scalar weight;
    Scalar kappa;
    Scalar mu;

    OperatorContext(Algebra a, BimoduleKAlgebra r, Scalar lambda, Scalar k, Scalar m)
        : algebra(std::move(a)), module(std::move(r)), weight(std::move(lambda)),
          kappa(std::move(k)), mu(std::move(m)) {}

    static OperatorContext regular(const Algebra& a, Scalar lambda, Scalar k, Scalar m);
    static OperatorContext regular_zero_product(const Algebra& a, Scalar lambda,
                                                Scalar k, Scalar m);

    FieldSpec field() const { return algebra.field(); }
    int dimA() const { return algebra.dim(); }
    int dimR() const { return module.dim(); }
};

/// A bilinear product table on R's underlying space; associativity is not
/// assumed, it is usually the object under test.
struct ProductTable {
    Cube table;
    std::string provenance;  // star_alpha | diamond_plus | ... | dual_product

    int dim() const { return table.dim(); }
    Vec mul_basis(int i, int j) const;
    Vec mul(const Vec& u, const Vec& v) const;
    Report validate_associative() const { return validate_algebra(table); }
    bool operator==(const ProductTable& o) const { return table == o.table; }
};

/// P(x)P(y) = P(P(x)y) + P(xP(y)) + lambda P(xy); identity id "eq:rbo".
Report rota_baxter_residual(const Algebra& a, const LinearMap& p, const Scalar& lambda);

/// a(u)a(v) = a(l(a(u))v) + a(u r(a(v))) + lambda a(u o v); id "eq:aop".
Report o_operator_residual(const OperatorContext& ctx, const LinearMap& alpha);

/// kappa(l(b(u))v - u r(b(v))) = 0 and mu(l(b(u o v))w - u r(b(v o w))) = 0;
/// with check_hom also b(l(x)u) = x.b(u), b(u r(x)) = b(u).x.
/// Ids "eq:ksy", "eq:mueq", "eq:bimoho".
Report balanced_residual(const OperatorContext& ctx, const LinearMap& beta,
                         bool check_hom);

/// a(u)a(v) - a(l(a(u))v + u r(a(v)) + lambda u o v)
///   = kappa b(u)b(v) + mu b(u o v); id "eq:gmybe". The balanced-homomorphism
/// gate on beta is enforced unless bypass_gate.
Report extended_o_residual(const OperatorContext& ctx, const LinearMap& alpha,
                           const LinearMap& beta, bool bypass_gate = false);

/// u *_a v = l(a(u))v + u r(a(v)) + lambda u o v.
ProductTable star_product(const OperatorContext& ctx, const LinearMap& alpha);

/// first: associativity of *_a by exhaustive triples; second: the criterion
/// l(a(u)a(v) - a(u*v))w = u r(a(v)a(w) - a(v*w)) on all triples.
/// Computed by independent code paths.
std::pair<bool, bool> assoc_criterion_check(const OperatorContext& ctx,
                                            const LinearMap& alpha);

/// u d± v = lambda u o v -+ 2 l(b(u))v. Gate: beta balanced homomorphism of
/// mass (-1, ±lambda).
std::pair<ProductTable, ProductTable> diamond_products(const OperatorContext& ctx,
                                                       const LinearMap& beta,
                                                       bool bypass_gate = false);

/// Splits d± into symmetrizer/antisymmetrizer (needs 1/2) and asserts, for
/// each sign, the equivalence between the extended identity at mass
/// (-1, ±lambda) and d± being a weight-1 relative operator against (R, d±).
Report verify_ansatz(const OperatorContext& ctx, const LinearMap& delta_plus,
                     const LinearMap& delta_minus);

/// b(x)b(y) = b(xb(y)) = b(b(x)y); id "averaging".
Report check_averaging(const Algebra& a, const LinearMap& beta);
/// b(x)b(y) + b^2(xy) = b(xb(y) + b(x)y); id "nijenhuis".
Report check_nijenhuis(const Algebra& a, const LinearMap& beta);

/// For both signs: the shifted identity
///   a(x)a(y) - a(a(x)y + xa(y) + lambda xy) = (-1 ± lambda) xy
/// holds iff a ± id is Rota-Baxter of weight lambda -+ 2. The report asserts
/// the boolean equality for each sign (ids "co:mop:+", "co:mop:-").
Report shift_equivalence(const Algebra& a, const LinearMap& alpha, const Scalar& lambda);

/// Weight normalization helper (never applied implicitly): (1/lambda) alpha.
LinearMap rescale(const LinearMap& alpha, const Scalar& lambda);

}  // namespace ybe

#endif
