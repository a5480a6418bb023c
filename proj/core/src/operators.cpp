#include "ybelab/operators.hpp"

#include <stdexcept>

namespace ybe {

OperatorContext OperatorContext::regular(const Algebra& a, Scalar lambda, Scalar k,
                                         Scalar m) {
    BimoduleKAlgebra r{regular_bimodule(a), a.constants()};
    return OperatorContext(a, std::move(r), std::move(lambda), std::move(k), std::move(m));
}

OperatorContext OperatorContext::regular_zero_product(const Algebra& a, Scalar lambda,
                                                      Scalar k, Scalar m) {
    return OperatorContext(a, BimoduleKAlgebra::with_zero_product(regular_bimodule(a)),
                           std::move(lambda), std::move(k), std::move(m));
}

Vec ProductTable::mul_basis(int i, int j) const {
    int m = dim();
    Vec r = zero_vec(table.field(), m);
    for (int k = 0; k < m; ++k) r[k] = table.at(i, j, k);
    return r;
}

Vec ProductTable::mul(const Vec& u, const Vec& v) const {
    int m = dim();
    Vec r = zero_vec(table.field(), m);
    for (int i = 0; i < m; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (int k = 0; k < m; ++k)
                if (!table.at(i, j, k).is_zero()) r[k] += uv * table.at(i, j, k);
        }
    }
    return r;
}

Report rota_baxter_residual(const Algebra& a, const LinearMap& p, const Scalar& lambda) {
    if (p.source_dim != a.dim() || p.target_dim != a.dim())
        throw std::invalid_argument("operator dimension mismatch");
    int n = a.dim();
    FieldSpec f = a.field();
    Report report;
    IdentityAccumulator acc("eq:rbo");
    for (int i = 0; i < n; ++i) {
        Vec pi = p.apply_basis(i);
        Vec ei = basis_vec(f, n, i);
        for (int j = 0; j < n; ++j) {
            Vec pj = p.apply_basis(j);
            Vec ej = basis_vec(f, n, j);
            Vec res = sub(a.mul(pi, pj),
                          add(add(p.apply(a.mul(pi, ej)), p.apply(a.mul(ei, pj))),
                              scale(lambda, p.apply(a.mul_basis(i, j)))));
            acc.observe({i, j}, res);
        }
    }
    acc.emit(report);
    return report;
}

// a(u)a(v) - a(l(a(u))v + u r(a(v)) + lambda u o v) evaluated at basis (i,j).
static Vec o_op_lhs(const OperatorContext& ctx, const LinearMap& alpha, int i, int j) {
    const Bimodule& m = ctx.module.module;
    FieldSpec f = ctx.field();
    Vec ui = basis_vec(f, ctx.dimR(), i);
    Vec vj = basis_vec(f, ctx.dimR(), j);
    Vec au = alpha.apply_basis(i);
    Vec av = alpha.apply_basis(j);
    Vec inner = add(add(m.left_action(au).apply(vj), m.right_action(av).apply(ui)),
                    scale(ctx.weight, ctx.module.mul_basis(i, j)));
    return sub(ctx.algebra.mul(au, av), alpha.apply(inner));
}

Report o_operator_residual(const OperatorContext& ctx, const LinearMap& alpha) {
    if (alpha.source_dim != ctx.dimR() || alpha.target_dim != ctx.dimA())
        throw std::invalid_argument("operator dimension mismatch");
    Report report;
    IdentityAccumulator acc("eq:aop");
    for (int i = 0; i < ctx.dimR(); ++i)
        for (int j = 0; j < ctx.dimR(); ++j)
            acc.observe({i, j}, o_op_lhs(ctx, alpha, i, j));
    acc.emit(report);
    return report;
}

Report balanced_residual(const OperatorContext& ctx, const LinearMap& beta,
                         bool check_hom) {
    if (beta.source_dim != ctx.dimR() || beta.target_dim != ctx.dimA())
        throw std::invalid_argument("operator dimension mismatch");
    const Bimodule& m = ctx.module.module;
    FieldSpec f = ctx.field();
    int nr = ctx.dimR(), na = ctx.dimA();
    Report report;

    IdentityAccumulator ksy("eq:ksy");
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            Vec lhs = m.left_action(beta.apply_basis(i)).apply(basis_vec(f, nr, j));
            Vec rhs = m.right_action(beta.apply_basis(j)).apply(basis_vec(f, nr, i));
            ksy.observe({i, j}, scale(ctx.kappa, sub(lhs, rhs)));
        }
    ksy.emit(report);

    IdentityAccumulator mueq("eq:mueq");
    for (int i = 0; i < nr && mueq.pass(); ++i)
        for (int j = 0; j < nr && mueq.pass(); ++j)
            for (int k = 0; k < nr && mueq.pass(); ++k) {
                Vec lhs = m.left_action(beta.apply(ctx.module.mul_basis(i, j)))
                              .apply(basis_vec(f, nr, k));
                Vec rhs = m.right_action(beta.apply(ctx.module.mul_basis(j, k)))
                              .apply(basis_vec(f, nr, i));
                mueq.observe({i, j, k}, scale(ctx.mu, sub(lhs, rhs)));
            }
    mueq.emit(report);

    if (check_hom) {
        IdentityAccumulator hom("eq:bimoho");
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < nr; ++j) {
                Vec u = basis_vec(f, nr, j);
                Vec bu = beta.apply_basis(j);
                hom.observe({i, j}, sub(beta.apply(m.left[i].apply(u)),
                                        ctx.algebra.mul(basis_vec(f, na, i), bu)));
                hom.observe({i, j}, sub(beta.apply(m.right[i].apply(u)),
                                        ctx.algebra.mul(bu, basis_vec(f, na, i))));
            }
        hom.emit(report);
    }
    return report;
}

Report extended_o_residual(const OperatorContext& ctx, const LinearMap& alpha,
                           const LinearMap& beta, bool bypass_gate) {
    if (alpha.source_dim != ctx.dimR() || alpha.target_dim != ctx.dimA())
        throw std::invalid_argument("operator dimension mismatch");
    Report report;
    if (!bypass_gate) report.merge("gate-", balanced_residual(ctx, beta, true));
    IdentityAccumulator acc("eq:gmybe");
    for (int i = 0; i < ctx.dimR(); ++i)
        for (int j = 0; j < ctx.dimR(); ++j) {
            Vec rhs = add(scale(ctx.kappa, ctx.algebra.mul(beta.apply_basis(i),
                                                           beta.apply_basis(j))),
                          scale(ctx.mu, beta.apply(ctx.module.mul_basis(i, j))));
            acc.observe({i, j}, sub(o_op_lhs(ctx, alpha, i, j), rhs));
        }
    acc.emit(report);
    return report;
}

ProductTable star_product(const OperatorContext& ctx, const LinearMap& alpha) {
    const Bimodule& m = ctx.module.module;
    FieldSpec f = ctx.field();
    int nr = ctx.dimR();
    Cube t(f, nr);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            Vec v = add(add(m.left_action(alpha.apply_basis(i)).apply(basis_vec(f, nr, j)),
                            m.right_action(alpha.apply_basis(j)).apply(basis_vec(f, nr, i))),
                        scale(ctx.weight, ctx.module.mul_basis(i, j)));
            for (int k = 0; k < nr; ++k) t.at(i, j, k) = v[k];
        }
    return ProductTable{std::move(t), "star_alpha"};
}

std::pair<bool, bool> assoc_criterion_check(const OperatorContext& ctx,
                                            const LinearMap& alpha) {
    ProductTable star = star_product(ctx, alpha);
    bool assoc = star.validate_associative().pass;

    const Bimodule& m = ctx.module.module;
    FieldSpec f = ctx.field();
    int nr = ctx.dimR();
    // defect d(i,j) = a(u_i)a(u_j) - a(u_i * u_j)
    std::vector<Vec> defect(static_cast<size_t>(nr) * nr);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j)
            defect[static_cast<size_t>(i) * nr + j] =
                sub(ctx.algebra.mul(alpha.apply_basis(i), alpha.apply_basis(j)),
                    alpha.apply(star.mul_basis(i, j)));
    bool criterion = true;
    for (int i = 0; i < nr && criterion; ++i)
        for (int j = 0; j < nr && criterion; ++j)
            for (int k = 0; k < nr && criterion; ++k) {
                Vec lhs = m.left_action(defect[static_cast<size_t>(i) * nr + j])
                              .apply(basis_vec(f, nr, k));
                Vec rhs = m.right_action(defect[static_cast<size_t>(j) * nr + k])
                              .apply(basis_vec(f, nr, i));
                if (!is_zero(sub(lhs, rhs))) criterion = false;
            }
    return {assoc, criterion};
}

std::pair<ProductTable, ProductTable> diamond_products(const OperatorContext& ctx,
                                                       const LinearMap& beta,
                                                       bool bypass_gate) {
    FieldSpec f = ctx.field();
    if (!bypass_gate) {
        Scalar minus_one = -Scalar::one(f);
        for (int sign : {+1, -1}) {
            Scalar mu = sign > 0 ? ctx.weight : -ctx.weight;
            OperatorContext gate_ctx(ctx.algebra, ctx.module, ctx.weight, minus_one, mu);
            Report g = balanced_residual(gate_ctx, beta, true);
            if (!g.pass)
                throw std::invalid_argument("modification gate fails: " + g.text());
        }
    }
    const Bimodule& m = ctx.module.module;
    int nr = ctx.dimR();
    Scalar two = Scalar::one(f) + Scalar::one(f);
    Cube plus(f, nr), minus(f, nr);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            Vec base = scale(ctx.weight, ctx.module.mul_basis(i, j));
            Vec twist = scale(two, m.left_action(beta.apply_basis(i))
                                       .apply(basis_vec(f, nr, j)));
            Vec vp = sub(base, twist);
            Vec vm = add(base, twist);
            for (int k = 0; k < nr; ++k) {
                plus.at(i, j, k) = vp[k];
                minus.at(i, j, k) = vm[k];
            }
        }
    return {ProductTable{std::move(plus), "diamond_plus"},
            ProductTable{std::move(minus), "diamond_minus"}};
}

Report verify_ansatz(const OperatorContext& ctx, const LinearMap& delta_plus,
                     const LinearMap& delta_minus) {
    FieldSpec f = ctx.field();
    if (!f.has_half()) throw FieldError("symmetrizer split needs 1/2: refuse p=2");
    Scalar half = (Scalar::one(f) + Scalar::one(f)).inverse();
    LinearMap alpha = (delta_plus + delta_minus).scaled(half);
    LinearMap beta = (delta_plus - delta_minus).scaled(half);

    Report report;
    Scalar minus_one = -Scalar::one(f);
    auto diamonds = diamond_products(ctx, beta, true);
    for (int sign : {+1, -1}) {
        bool sign_plus = sign > 0;
        Scalar mu = sign_plus ? ctx.weight : -ctx.weight;
        OperatorContext ext_ctx(ctx.algebra, ctx.module, ctx.weight, minus_one, mu);
        report.merge("gate-", balanced_residual(ext_ctx, beta, true));
        bool lhs = extended_o_residual(ext_ctx, alpha, beta, true)
                       .find("eq:gmybe")->pass;

        const ProductTable& dia = sign_plus ? diamonds.first : diamonds.second;
        BimoduleKAlgebra twisted{ctx.module.module, dia.table};
        OperatorContext o_ctx(ctx.algebra, std::move(twisted), Scalar::one(f),
                              Scalar::zero(f), Scalar::zero(f));
        bool rhs = o_operator_residual(o_ctx, sign_plus ? delta_plus : delta_minus)
                       .find("eq:aop")->pass;
        report.record(std::string("thm:ansatz:") + (sign_plus ? "+" : "-"), lhs == rhs);
    }
    return report;
}

Report check_averaging(const Algebra& a, const LinearMap& beta) {
    int n = a.dim();
    FieldSpec f = a.field();
    Report report;
    IdentityAccumulator acc("averaging");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec bb = a.mul(beta.apply_basis(i), beta.apply_basis(j));
            acc.observe({i, j}, sub(bb, beta.apply(a.mul(basis_vec(f, n, i),
                                                         beta.apply_basis(j)))));
            acc.observe({i, j}, sub(bb, beta.apply(a.mul(beta.apply_basis(i),
                                                         basis_vec(f, n, j)))));
        }
    acc.emit(report);
    return report;
}

Report check_nijenhuis(const Algebra& a, const LinearMap& beta) {
    int n = a.dim();
    FieldSpec f = a.field();
    Report report;
    IdentityAccumulator acc("nijenhuis");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec lhs = add(a.mul(beta.apply_basis(i), beta.apply_basis(j)),
                          beta.apply(beta.apply(a.mul_basis(i, j))));
            Vec rhs = beta.apply(add(a.mul(basis_vec(f, n, i), beta.apply_basis(j)),
                                     a.mul(beta.apply_basis(i), basis_vec(f, n, j))));
            acc.observe({i, j}, sub(lhs, rhs));
        }
    acc.emit(report);
    return report;
}

Report shift_equivalence(const Algebra& a, const LinearMap& alpha, const Scalar& lambda) {
    int n = a.dim();
    FieldSpec f = a.field();
    Scalar one = Scalar::one(f), two = Scalar::one(f) + Scalar::one(f);
    Report report;
    for (int sign : {+1, -1}) {
        Scalar s = sign > 0 ? one : -one;
        Scalar kappa_hat = -one + s * lambda;
        bool shifted_ok = true;
        for (int i = 0; i < n && shifted_ok; ++i)
            for (int j = 0; j < n && shifted_ok; ++j) {
                Vec ai = alpha.apply_basis(i), aj = alpha.apply_basis(j);
                Vec inner = add(add(a.mul(ai, basis_vec(f, n, j)),
                                    a.mul(basis_vec(f, n, i), aj)),
                                scale(lambda, a.mul_basis(i, j)));
                Vec res = sub(sub(a.mul(ai, aj), alpha.apply(inner)),
                              scale(kappa_hat, a.mul_basis(i, j)));
                if (!is_zero(res)) shifted_ok = false;
            }
        LinearMap shifted(n, n, alpha.mat + Matrix::identity(f, n).scaled(s));
        bool rb_ok = rota_baxter_residual(a, shifted, lambda - s * two).pass;
        report.record(std::string("co:mop:") + (sign > 0 ? "+" : "-"),
                      shifted_ok == rb_ok);
    }
    return report;
}

LinearMap rescale(const LinearMap& alpha, const Scalar& lambda) {
    if (lambda.is_zero()) throw std::invalid_argument("cannot rescale by zero weight");
    return alpha.scaled(lambda.inverse());
}

}  // namespace ybe
