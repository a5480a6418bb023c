#include "ybelab/doubling.hpp"

#include <stdexcept>

namespace ybe {

DoubleContext hat_algebra(const Algebra& a, const BimoduleKAlgebra& v) {
    DoubleContext ctx;
    ctx.a = a;
    ctx.v = v;
    ctx.dual = dual_bimodule(v.module);
    ctx.hat = semidirect_sum(a, BimoduleKAlgebra::with_zero_product(ctx.dual), true);
    return ctx;
}

Tensor2 hom_as_hat_tensor(const DoubleContext& ctx, const LinearMap& gamma) {
    if (gamma.source_dim != ctx.dim_v() || gamma.target_dim != ctx.dim_a())
        throw std::invalid_argument("map dimension mismatch");
    Matrix t(ctx.hat.field(), ctx.dim_hat(), ctx.dim_hat());
    for (int i = 0; i < ctx.dim_v(); ++i)
        for (int j = 0; j < ctx.dim_a(); ++j)
            t.at(ctx.a_index(j), ctx.vstar_index(i)) = gamma.mat.at(j, i);
    return Tensor2(ctx.hat, std::move(t));
}

std::pair<Tensor2, Tensor2> tilde_pm(const DoubleContext& ctx, const LinearMap& gamma) {
    Tensor2 t = hom_as_hat_tensor(ctx, gamma);
    return {t + transpose_t(t), t - transpose_t(t)};
}

std::pair<bool, bool> lifted_balanced_check(const DoubleContext& ctx,
                                            const LinearMap& beta) {
    FieldSpec f = ctx.a.field();
    OperatorContext base_ctx(ctx.a, BimoduleKAlgebra::with_zero_product(ctx.v.module),
                             Scalar::zero(f), Scalar::one(f), Scalar::zero(f));
    bool base = balanced_residual(base_ctx, beta, true).pass;

    Tensor2 sym = tilde_pm(ctx, beta).first;
    auto [inv, bal, hom] = invariance_tri_check(sym);
    (void)inv;
    return {bal && hom, base};
}

Report verify_skewgm(const DoubleContext& ctx, const LinearMap& alpha,
                     const LinearMap& beta, const Scalar& kappa) {
    FieldSpec f = ctx.a.field();
    Scalar zero = Scalar::zero(f);

    OperatorContext base_ctx(ctx.a, ctx.v, zero, kappa, zero);
    bool base = extended_o_residual(base_ctx, alpha, beta).pass;

    auto [alpha_sym, alpha_skew] = tilde_pm(ctx, alpha);
    (void)alpha_sym;
    Tensor2 beta_sym = tilde_pm(ctx, beta).first;
    Bimodule hat_dual = dual_bimodule(regular_bimodule(ctx.hat));
    OperatorContext hat_ctx(ctx.hat, BimoduleKAlgebra::with_zero_product(hat_dual),
                            zero, kappa, zero);
    bool lifted = extended_o_residual(hat_ctx, tensor_as_map(alpha_skew),
                                      tensor_as_map(beta_sym))
                      .pass;

    Report report;
    report.record("thm:skewgm", base == lifted);
    return report;
}

Report double_aybe_tests(const Algebra& a, const LinearMap& p, const Scalar& lambda) {
    int n = a.dim();
    FieldSpec f = a.field();
    DoubleContext dc = hat_algebra(a, BimoduleKAlgebra{regular_bimodule(a), a.constants()});
    Tensor2 p_skew = tilde_pm(dc, p).second;
    Tensor2 id_t = hom_as_hat_tensor(dc, LinearMap::identity(f, n));

    Report report;
    // (ii) weight-0 identity vs skew lift solving the Yang-Baxter equation
    bool rb0 = rota_baxter_residual(a, p, Scalar::zero(f)).pass;
    report.record("co:motoaybe1:ii", rb0 == aybe_residual(p_skew).is_zero());

    // (iv) P(x)P(y) - P(P(x)y + xP(y)) = -xy vs the +-(id + id^21) shifts
    bool myb = true;
    for (int i = 0; i < n && myb; ++i)
        for (int j = 0; j < n && myb; ++j) {
            Vec pi = p.apply_basis(i), pj = p.apply_basis(j);
            Vec inner = add(a.mul(pi, basis_vec(f, n, j)), a.mul(basis_vec(f, n, i), pj));
            Vec res = add(sub(a.mul(pi, pj), p.apply(inner)), a.mul_basis(i, j));
            if (!is_zero(res)) myb = false;
        }
    Tensor2 id_sym = id_t + transpose_t(id_t);
    report.record("co:motoaybe1:iv:+",
                  myb == aybe_residual(p_skew + id_sym).is_zero());
    report.record("co:motoaybe1:iv:-",
                  myb == aybe_residual(p_skew - id_sym).is_zero());

    // (v) weight-lambda identity vs the pair of rescaled shifted lifts
    if (lambda.is_zero())
        throw std::invalid_argument("weight must be nonzero for the rescaled lift test");
    Scalar two = Scalar::one(f) + Scalar::one(f);
    bool rbl = rota_baxter_residual(a, p, lambda).pass;
    Tensor2 core = p_skew.scaled(two * lambda.inverse());
    bool z1 = aybe_residual(core + id_t.scaled(two)).is_zero();
    bool z2 = aybe_residual(core - transpose_t(id_t).scaled(two)).is_zero();
    report.record("co:motoaybe1:v", rbl == (z1 && z2));
    return report;
}

// defect(u, v) = alpha(u) alpha(v) - alpha(l(alpha(u))v + u r(alpha(v)))
static Vec lift_defect(const DoubleContext& ctx, const LinearMap& alpha, const Vec& u,
                       const Vec& v) {
    const Bimodule& m = ctx.v.module;
    Vec au = alpha.apply(u), av = alpha.apply(v);
    Vec star = add(m.left_action(au).apply(v), m.right_action(av).apply(u));
    return sub(ctx.a.mul(au, av), alpha.apply(star));
}

GaybeLiftVerdict gaybe_lift_conditions(const DoubleContext& ctx, const LinearMap& alpha) {
    const Bimodule& m = ctx.v.module;
    int nv = ctx.dim_v(), na = ctx.dim_a();
    FieldSpec f = ctx.a.field();
    GaybeLiftVerdict out;

    out.c0 = true;
    for (int i = 0; i < nv && out.c0; ++i)
        for (int j = 0; j < nv && out.c0; ++j)
            for (int k = 0; k < nv && out.c0; ++k) {
                Vec dij = lift_defect(ctx, alpha, basis_vec(f, nv, i), basis_vec(f, nv, j));
                Vec djk = lift_defect(ctx, alpha, basis_vec(f, nv, j), basis_vec(f, nv, k));
                if (!equal(m.left_action(dij).apply(basis_vec(f, nv, k)),
                           m.right_action(djk).apply(basis_vec(f, nv, i))))
                    out.c0 = false;
            }

    out.c1 = out.c2 = out.c3 = true;
    for (int i = 0; i < nv; ++i)
        for (int j = 0; j < nv; ++j)
            for (int x = 0; x < na; ++x) {
                Vec u = basis_vec(f, nv, i), v = basis_vec(f, nv, j);
                Vec ex = basis_vec(f, na, x);
                Vec d = lift_defect(ctx, alpha, u, v);
                if (out.c1 &&
                    !equal(lift_defect(ctx, alpha, u, m.left[x].apply(v)),
                           lift_defect(ctx, alpha, m.right[x].apply(u), v)))
                    out.c1 = false;
                if (out.c2 &&
                    !equal(lift_defect(ctx, alpha, u, m.right[x].apply(v)),
                           ctx.a.mul(d, ex)))
                    out.c2 = false;
                if (out.c3 &&
                    !equal(lift_defect(ctx, alpha, m.left[x].apply(u), v),
                           ctx.a.mul(ex, d)))
                    out.c3 = false;
            }

    out.lifted = gaybe_pass(tilde_pm(ctx, alpha).second);
    return out;
}

Report gaybe_o_conditions(const OperatorContext& ctx, const LinearMap& alpha,
                          const LinearMap& beta) {
    Report gate = extended_o_residual(ctx, alpha, beta);
    if (!gate.pass)
        throw std::invalid_argument("extended operator gate fails: " + gate.text());

    const Bimodule& m = ctx.module.module;
    int nr = ctx.dimR(), na = ctx.dimA();
    FieldSpec f = ctx.field();
    Report report;

    IdentityAccumulator con1("eq:lambdakmucon1");
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j)
            for (int k = 0; k < nr; ++k) {
                Vec lhs = m.left_action(alpha.apply(ctx.module.mul_basis(i, j)))
                              .apply(basis_vec(f, nr, k));
                Vec rhs = m.right_action(alpha.apply(ctx.module.mul_basis(j, k)))
                              .apply(basis_vec(f, nr, i));
                con1.observe({i, j, k}, scale(ctx.weight, sub(lhs, rhs)));
            }
    con1.emit(report);

    IdentityAccumulator con2("eq:lambdakmucon2");
    IdentityAccumulator con3("eq:lambdakmucon3");
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j)
            for (int x = 0; x < na; ++x) {
                Vec ex = basis_vec(f, na, x);
                Vec uv = alpha.apply(ctx.module.mul_basis(i, j));
                Vec lhs2 = alpha.apply(
                    ctx.module.mul(basis_vec(f, nr, i), m.right[x].apply(basis_vec(f, nr, j))));
                con2.observe({i, j, x},
                             scale(ctx.weight, sub(lhs2, ctx.algebra.mul(uv, ex))));
                Vec lhs3 = alpha.apply(
                    ctx.module.mul(m.left[x].apply(basis_vec(f, nr, i)), basis_vec(f, nr, j)));
                con3.observe({i, j, x},
                             scale(ctx.weight, sub(lhs3, ctx.algebra.mul(ex, uv))));
            }
    con2.emit(report);
    con3.emit(report);

    bool conditions = report.find("eq:lambdakmucon1")->pass &&
                      report.find("eq:lambdakmucon2")->pass &&
                      report.find("eq:lambdakmucon3")->pass;
    DoubleContext dc = hat_algebra(ctx.algebra, ctx.module);
    bool lifted = gaybe_pass(tilde_pm(dc, alpha).second);
    report.record("co:motoaybe2:i", lifted == conditions);
    return report;
}

}  // namespace ybe
