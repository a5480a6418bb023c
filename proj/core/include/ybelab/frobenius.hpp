#ifndef YBELAB_FROBENIUS_HPP
#define YBELAB_FROBENIUS_HPP

#include "ybelab/tensors.hpp"

namespace ybe {

/// B(e_i, e_j) = bmat(i, j).
struct BilinearForm {
    Algebra algebra;
    Matrix bmat;

    BilinearForm() = default;
    BilinearForm(Algebra a, Matrix b) : algebra(std::move(a)), bmat(std::move(b)) {}

    bool symmetric() const { return bmat == bmat.transposed(); }
    bool nondegenerate() const { return bmat.inverse().has_value(); }
    Scalar eval(const Vec& x, const Vec& y) const;
};

/// Checks nondegeneracy, invariance B(xy, z) = B(x, yz), and (optionally)
/// symmetry. A singular bmat is a failed check, not an exception.
Report validate_frobenius(const BilinearForm& b, bool require_symmetric);

/// phi: A -> A* with <phi(x), y> = B(x, y); matrix is bmat transposed under
/// the dual-basis convention e*_i(e_j) = delta_ij. Requires nondegeneracy.
LinearMap phi(const BilinearForm& b);

/// phi intertwines (A, L, R) with (A*, R*, L*):
/// phi(x R(y)) = phi(x) L*(y) and R*(y) phi(z) = phi(L(y) z).
/// Ids "eq:invariant1" / "eq:invariant2".
Report phi_intertwining(const BilinearForm& b);

/// From a symmetric invariant invertible tensor s: Bmat = (coefficient
/// matrix)^-1; the result is symmetric Frobenius. Throws on gate failure.
BilinearForm form_from_invariant_tensor(const Tensor2& s);

/// Independent flags (the zero map is both).
struct AdjointVerdict {
    bool self_adjoint = false;
    bool skew_adjoint = false;
};
AdjointVerdict adjoint_check(const LinearMap& f, const BilinearForm& b);

/// f composed with phi^-1, as a map A* -> A.
LinearMap transport(const LinearMap& f, const BilinearForm& b);

/// Equivalence chain over a symmetric Frobenius form: the operator identity
/// for (alpha, beta) at mass kappa holds on (A, L, R) iff it holds for their
/// transports on (A*, R*, L*); with alpha skew-adjoint, additionally the
/// transported tensors solve the extended equation of mass (kappa+1)/4
/// (AYBE when kappa = -1; weight-0 Rota-Baxter when kappa = 0) exactly when
/// the operator identity holds. Gates (form, beta self-adjoint) reported.
Report verify_frobenius_equivalence(const LinearMap& alpha, const LinearMap& beta,
                                    const BilinearForm& b, const Scalar& kappa);

}  // namespace ybe

#endif
