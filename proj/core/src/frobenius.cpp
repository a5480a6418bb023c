#include "ybelab/frobenius.hpp"

#include <stdexcept>

namespace ybe {

Scalar BilinearForm::eval(const Vec& x, const Vec& y) const {
    int n = algebra.dim();
    Scalar out = Scalar::zero(algebra.field());
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j)
            if (!bmat.at(i, j).is_zero()) out += x[i] * bmat.at(i, j) * y[j];
    }
    return out;
}

Report validate_frobenius(const BilinearForm& b, bool require_symmetric) {
    const Algebra& a = b.algebra;
    int n = a.dim();
    FieldSpec f = a.field();
    Report report;
    report.record("nondegenerate", b.nondegenerate());

    IdentityAccumulator inv("invariant");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec eij = a.mul_basis(i, j);
            for (int k = 0; k < n; ++k) {
                Scalar lhs = b.eval(eij, basis_vec(f, n, k));
                Scalar rhs = b.eval(basis_vec(f, n, i), a.mul_basis(j, k));
                inv.observe({i, j, k}, Vec{lhs - rhs});
            }
        }
    inv.emit(report);

    if (require_symmetric) {
        IdentityAccumulator sym("symmetric");
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                sym.observe({i, j}, Vec{b.bmat.at(i, j) - b.bmat.at(j, i)});
        sym.emit(report);
    }
    return report;
}

LinearMap phi(const BilinearForm& b) {
    if (!b.nondegenerate()) throw std::invalid_argument("bilinear form is degenerate");
    int n = b.algebra.dim();
    return LinearMap(n, n, b.bmat.transposed());
}

Report phi_intertwining(const BilinearForm& b) {
    const Algebra& a = b.algebra;
    int n = a.dim();
    Matrix pm = phi(b).mat;
    Report report;
    IdentityAccumulator one("eq:invariant1");
    IdentityAccumulator two("eq:invariant2");
    for (int y = 0; y < n; ++y) {
        Matrix ly = a.left_mult_matrix(y);
        Matrix ry = a.right_mult_matrix(y);
        // phi(x R(y)) = phi(x) L*(y) and R*(y) phi(z) = phi(L(y) z)
        Matrix d1 = pm * ry - ly.transposed() * pm;
        Matrix d2 = ry.transposed() * pm - pm * ly;
        for (int j = 0; j < n; ++j) {
            Vec c1 = zero_vec(a.field(), n), c2 = zero_vec(a.field(), n);
            for (int i = 0; i < n; ++i) {
                c1[i] = d1.at(i, j);
                c2[i] = d2.at(i, j);
            }
            one.observe({y, j}, c1);
            two.observe({y, j}, c2);
        }
    }
    one.emit(report);
    two.emit(report);
    return report;
}

BilinearForm form_from_invariant_tensor(const Tensor2& s) {
    auto [inv, bal, hom] = invariance_tri_check(s);  // throws if not symmetric
    if (!inv) throw std::invalid_argument("tensor is not invariant");
    auto b = s.t.inverse();
    if (!b) throw std::invalid_argument("tensor coefficient matrix is singular");
    return BilinearForm(s.algebra, std::move(*b));
}

AdjointVerdict adjoint_check(const LinearMap& f, const BilinearForm& b) {
    if (f.source_dim != b.algebra.dim() || f.target_dim != b.algebra.dim())
        throw std::invalid_argument("operator dimension mismatch");
    // B(f(x), y) has matrix F^T B; B(x, f(y)) has matrix B F.
    Matrix lhs = f.mat.transposed() * b.bmat;
    Matrix rhs = b.bmat * f.mat;
    AdjointVerdict v;
    v.self_adjoint = lhs == rhs;
    v.skew_adjoint = lhs == -rhs;
    return v;
}

LinearMap transport(const LinearMap& f, const BilinearForm& b) {
    LinearMap p = phi(b);
    Matrix inv = *p.mat.inverse();
    return LinearMap(f.source_dim, f.target_dim, f.mat * inv);
}

Report verify_frobenius_equivalence(const LinearMap& alpha, const LinearMap& beta,
                                    const BilinearForm& b, const Scalar& kappa) {
    const Algebra& a = b.algebra;
    FieldSpec f = a.field();
    Scalar zero = Scalar::zero(f), one = Scalar::one(f);

    Report report;
    report.merge("gate-", validate_frobenius(b, true));
    if (!report.pass) return report;

    AdjointVerdict vb = adjoint_check(beta, b);
    report.record("gate-beta-self-adjoint", vb.self_adjoint);
    if (!vb.self_adjoint) return report;

    LinearMap alpha_t = transport(alpha, b);
    LinearMap beta_t = transport(beta, b);

    OperatorContext ctx_a = OperatorContext::regular_zero_product(a, zero, kappa, zero);
    Bimodule dual = dual_bimodule(regular_bimodule(a));
    OperatorContext ctx_d(a, BimoduleKAlgebra::with_zero_product(dual), zero, kappa, zero);

    // balanced-homomorphism transfer
    bool hom_a = balanced_residual(OperatorContext::regular_zero_product(a, zero, one, zero),
                                   beta, true).pass;
    bool hom_d = balanced_residual(
                     OperatorContext(a, BimoduleKAlgebra::with_zero_product(dual), zero,
                                     one, zero),
                     beta_t, true)
                     .pass;
    report.record("le:frosy", hom_a == hom_d);

    bool item1_a = extended_o_residual(ctx_a, alpha, beta).pass;
    bool item1_d = extended_o_residual(ctx_d, alpha_t, beta_t).pass;
    report.record("thm:equivalence:1", item1_a == item1_d);

    AdjointVerdict va = adjoint_check(alpha, b);
    report.record("gate-alpha-skew-adjoint", va.skew_adjoint);
    if (!va.skew_adjoint) return report;

    Scalar four = one + one + one + one;
    if (four.is_zero()) throw FieldError("mass (kappa+1)/4 needs 1/4: refuse p=2");
    Scalar eps = (kappa + one) * four.inverse();

    Tensor2 r_plus = map_as_tensor(a, alpha_t + beta_t);
    Tensor2 r_minus = map_as_tensor(a, alpha_t - beta_t);
    report.record("thm:equivalence:2a:+",
                  eaybe_residual(r_plus, eps).is_zero() == item1_a);
    report.record("thm:equivalence:2a:-",
                  eaybe_residual(r_minus, eps).is_zero() == item1_a);

    if (kappa == -one) {
        report.record("thm:equivalence:2b:+",
                      aybe_residual(r_plus).is_zero() == item1_a);
        report.record("thm:equivalence:2b:-",
                      aybe_residual(r_minus).is_zero() == item1_a);
    }
    if (kappa.is_zero()) {
        bool rb = rota_baxter_residual(a, alpha, zero).pass;
        bool aybe = aybe_residual(map_as_tensor(a, alpha_t)).is_zero();
        report.record("co:equivalence1", aybe == rb);
    }
    return report;
}

}  // namespace ybe
