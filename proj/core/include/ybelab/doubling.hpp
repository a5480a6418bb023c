#ifndef YBELAB_DOUBLING_HPP
#define YBELAB_DOUBLING_HPP

#include "ybelab/tensors.hpp"

namespace ybe {

/// The semidirect double A (x|_ V* over the dual actions, basis ordered
/// [A-block | V*-block].
struct DoubleContext {
    Algebra a;
    BimoduleKAlgebra v;
    Bimodule dual;  // (V*, r*, l*)
    Algebra hat;

    int dim_a() const { return a.dim(); }
    int dim_v() const { return v.dim(); }
    int dim_hat() const { return hat.dim(); }
    int a_index(int i) const { return i; }
    int vstar_index(int i) const { return a.dim() + i; }
};

DoubleContext hat_algebra(const Algebra& a, const BimoduleKAlgebra& v);

/// gamma: V -> A identified with sum_i gamma(v_i) (x) v*_i, living in the
/// A (x) V* corner of the double's coefficient table.
Tensor2 hom_as_hat_tensor(const DoubleContext& ctx, const LinearMap& gamma);

/// (gamma + gamma^21, gamma - gamma^21): symmetric and skew lifts.
std::pair<Tensor2, Tensor2> tilde_pm(const DoubleContext& ctx, const LinearMap& gamma);

/// base: beta balanced bimodule homomorphism on (V, l, r);
/// lifted: the symmetric lift of beta balanced on the double's dual regular
/// bimodule, decided by an independent tensor-side path.
std::pair<bool, bool> lifted_balanced_check(const DoubleContext& ctx,
                                            const LinearMap& beta);

/// Asserts: [alpha extended operator with modification beta of mass kappa on
/// (V, l, r)] iff [skew lift of alpha extended operator with modification
/// (symmetric lift of beta) of mass kappa on the double's dual]. Id
/// "thm:skewgm".
Report verify_skewgm(const DoubleContext& ctx, const LinearMap& alpha,
                     const LinearMap& beta, const Scalar& kappa);

/// Boolean-equality assertions in the double of the regular bimodule:
/// (ii) weight-0 operator identity vs the skew lift solving the associative
/// Yang-Baxter equation; (iv) the kappa = -1 shifted identity vs
/// (skew lift) +- (id + id^21); (v) weight lambda != 0 vs both
/// (2/lambda)(skew lift) + 2 id and (2/lambda)(skew lift) - 2 id^21.
/// Ids "co:motoaybe1:ii", "co:motoaybe1:iv:+/-", "co:motoaybe1:v".
Report double_aybe_tests(const Algebra& a, const LinearMap& p, const Scalar& lambda);

/// c0: the induced product on V is associative-compatible
/// (l(defect(u,v))w = u r(defect(v,w))); c1-c3: the three mixed
/// compatibility equations in (u, v, x); lifted: the skew lift solves the
/// generalized equation in the double. The theorem asserts
/// lifted == (c0 && c1 && c2 && c3).
struct GaybeLiftVerdict {
    bool c0 = false, c1 = false, c2 = false, c3 = false, lifted = false;
    bool conditions() const { return c0 && c1 && c2 && c3; }
    bool consistent() const { return lifted == conditions(); }
};
GaybeLiftVerdict gaybe_lift_conditions(const DoubleContext& ctx, const LinearMap& alpha);

/// For an extended operator alpha (gate: the full identity for
/// (alpha, beta) in ctx must pass, else std::invalid_argument): asserts
/// [skew lift of alpha solves the generalized equation in the double] ==
/// [the three lambda-scaled compatibility conditions]. Ids
/// "eq:lambdakmucon1..3", "co:motoaybe2:i".
Report gaybe_o_conditions(const OperatorContext& ctx, const LinearMap& alpha,
                          const LinearMap& beta);

}  // namespace ybe

#endif
