#ifndef YBELAB_TENSORS_HPP
#define YBELAB_TENSORS_HPP

#include "ybelab/operators.hpp"

#include <tuple>
#include <vector>

namespace ybe {

/// r = sum t(i,j) e_i (x) e_j in A (x) A.
struct Tensor2 {
    Algebra algebra;
    Matrix t;

    Tensor2() = default;
    Tensor2(Algebra a, Matrix m) : algebra(std::move(a)), t(std::move(m)) {}
    static Tensor2 zero(const Algebra& a) {
        return Tensor2(a, Matrix(a.field(), a.dim(), a.dim()));
    }

    int dim() const { return algebra.dim(); }
    bool is_symmetric() const { return t == t.transposed(); }
    bool is_skew() const { return t == -t.transposed(); }
    bool is_zero() const { return t.is_zero(); }
    bool operator==(const Tensor2& o) const { return t == o.t; }

    Tensor2 operator+(const Tensor2& o) const { return Tensor2(algebra, t + o.t); }
    Tensor2 operator-(const Tensor2& o) const { return Tensor2(algebra, t - o.t); }
    Tensor2 scaled(const Scalar& c) const { return Tensor2(algebra, t.scaled(c)); }
};

/// u = sum u(i,j,k) e_i (x) e_j (x) e_k in A (x) A (x) A.
struct Tensor3 {
    Algebra algebra;
    Cube u;

    Tensor3() = default;
    Tensor3(Algebra a, Cube c) : algebra(std::move(a)), u(std::move(c)) {}
    static Tensor3 zero(const Algebra& a) { return Tensor3(a, Cube(a.field(), a.dim())); }

    bool is_zero() const { return u.is_zero(); }
    bool operator==(const Tensor3& o) const { return u == o.u; }
};

/// <v, F_r(u)> = <u (x) v, r>: F_r(e*_i) = sum_j t(i,j) e_j.
LinearMap tensor_as_map(const Tensor2& r);
Tensor2 map_as_tensor(const Algebra& a, const LinearMap& f);

/// r^t(i,j) = t(j,i).
Tensor2 transpose_t(const Tensor2& r);

/// (skew part, symmetric part) = ((r - r^t)/2, (r + r^t)/2); needs 1/2.
std::pair<Tensor2, Tensor2> sym_skew_split(const Tensor2& r);

/// r12 r13 + r13 r23 - r23 r12, by closed bilinear expansion (non-unital safe).
Tensor3 aybe_residual(const Tensor2& r);

/// r13 r12 - r12 r23 + r23 r13 (the alternative form, = AYBE in A^op).
Tensor3 aayb_residual(const Tensor2& r);

/// sigma_13: u(i,j,k) -> u(k,j,i).
Tensor3 switch13(const Tensor3& u);

/// LHS(aybe) - eps * (r13 + r31)(r23 + r32), fully expanded.
Tensor3 eaybe_residual(const Tensor2& r, const Scalar& eps);

/// One tensor per basis x: (id (x) id (x) L(x) - R(x) (x) id (x) id) applied
/// to the aybe residual; a solution iff all are zero.
std::vector<Tensor3> gaybe_residual(const Tensor2& r);
bool gaybe_pass(const Tensor2& r);

/// For symmetric s, three independently computed booleans:
/// invariant / balanced on (A*,R*,L*) / bimodule homomorphism on (A*,R*,L*).
std::tuple<bool, bool, bool> invariance_tri_check(const Tensor2& s);

/// r(a*) r(b*) = r(R*(r(a*))b* - a* L*(r^t(b*))); id "eq:aybeform".
Report operator_form_residual(const Tensor2& r);

/// Delta(x) = (id (x) L(x) - R(x) (x) id) r, as a map A -> A (x) A with the
/// target coordinate (i,j) flattened to i*n+j.
LinearMap coproduct(const Tensor2& r);

/// Product on A* computed both as Delta* and as
/// a* . b* = R*(r(a*))b* - L*(r^t(b*))a*; the two tables are asserted equal
/// (a mismatch throws std::logic_error) before the table is returned.
ProductTable dual_product(const Tensor2& r);

/// P(x) = sum t(i,j) e_i x e_j.
LinearMap aguiar_map(const Tensor2& r);

/// a* (.)± b* = -+2 R*(beta(a*)) b* on A*. Gate: beta symmetric + invariant.
std::pair<ProductTable, ProductTable> beta_circle_products(const Tensor2& beta,
                                                           bool bypass_gate = false);

/// Weight-1 relative-operator residuals of r against (A*, (.)+, R*, L*) and of
/// -r^t against (A*, (.)-, R*, L*); ids "eq:opweight1" / "eq:topweight1".
/// Needs 1/2 (symmetric-part split).
Report circle_weight1_residuals(const Tensor2& r);

}  // namespace ybe

#endif
