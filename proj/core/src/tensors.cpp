#include "ybelab/tensors.hpp"

#include <stdexcept>

namespace ybe {

LinearMap tensor_as_map(const Tensor2& r) {
    return LinearMap(r.dim(), r.dim(), r.t.transposed());
}

Tensor2 map_as_tensor(const Algebra& a, const LinearMap& f) {
    if (f.source_dim != a.dim() || f.target_dim != a.dim())
        throw std::invalid_argument("tensor/map dimension mismatch");
    return Tensor2(a, f.mat.transposed());
}

Tensor2 transpose_t(const Tensor2& r) { return Tensor2(r.algebra, r.t.transposed()); }

std::pair<Tensor2, Tensor2> sym_skew_split(const Tensor2& r) {
    FieldSpec f = r.algebra.field();
    if (!f.has_half()) throw FieldError("symmetrizer split needs 1/2: refuse p=2");
    Scalar half = (Scalar::one(f) + Scalar::one(f)).inverse();
    Tensor2 rt = transpose_t(r);
    return {(r - rt).scaled(half), (r + rt).scaled(half)};
}

Tensor3 aybe_residual(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    Cube out(a.field(), n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r.t.at(p, q).is_zero()) continue;
            for (int s = 0; s < n; ++s)
                for (int w = 0; w < n; ++w) {
                    Scalar c = r.t.at(p, q) * r.t.at(s, w);
                    if (c.is_zero()) continue;
                    for (int k = 0; k < n; ++k) {
                        // r12 r13: (e_p e_s) (x) e_q (x) e_w
                        if (!a.c(p, s, k).is_zero())
                            out.at(k, q, w) += c * a.c(p, s, k);
                        // r13 r23: e_p (x) e_s (x) (e_q e_w)
                        if (!a.c(q, w, k).is_zero())
                            out.at(p, s, k) += c * a.c(q, w, k);
                        // - r23 r12: - e_s (x) (e_p e_w) (x) e_q
                        if (!a.c(p, w, k).is_zero())
                            out.at(s, k, q) -= c * a.c(p, w, k);
                    }
                }
        }
    return Tensor3(a, std::move(out));
}

Tensor3 aayb_residual(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    Cube out(a.field(), n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r.t.at(p, q).is_zero()) continue;
            for (int s = 0; s < n; ++s)
                for (int w = 0; w < n; ++w) {
                    Scalar c = r.t.at(p, q) * r.t.at(s, w);
                    if (c.is_zero()) continue;
                    for (int k = 0; k < n; ++k) {
                        // r13 r12: (e_p e_s) (x) e_w (x) e_q
                        if (!a.c(p, s, k).is_zero())
                            out.at(k, w, q) += c * a.c(p, s, k);
                        // - r12 r23: - e_p (x) (e_q e_s) (x) e_w
                        if (!a.c(q, s, k).is_zero())
                            out.at(p, k, w) -= c * a.c(q, s, k);
                        // r23 r13: e_s (x) e_p (x) (e_q e_w)
                        if (!a.c(q, w, k).is_zero())
                            out.at(s, p, k) += c * a.c(q, w, k);
                    }
                }
        }
    return Tensor3(a, std::move(out));
}

Tensor3 switch13(const Tensor3& u) {
    int n = u.algebra.dim();
    Cube out(u.algebra.field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) out.at(i, j, k) = u.u.at(k, j, i);
    return Tensor3(u.algebra, std::move(out));
}

Tensor3 eaybe_residual(const Tensor2& r, const Scalar& eps) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    Tensor3 res = aybe_residual(r);
    if (eps.is_zero()) return res;
    // (r13 + r31)(r23 + r32) expanded over coefficient pairs
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) {
            if (r.t.at(p, q).is_zero()) continue;
            for (int s = 0; s < n; ++s)
                for (int w = 0; w < n; ++w) {
                    Scalar c = eps * r.t.at(p, q) * r.t.at(s, w);
                    if (c.is_zero()) continue;
                    for (int k = 0; k < n; ++k) {
                        if (!a.c(q, w, k).is_zero())
                            res.u.at(p, s, k) -= c * a.c(q, w, k);  // a (x) a' (x) bb'
                        if (!a.c(q, s, k).is_zero())
                            res.u.at(p, w, k) -= c * a.c(q, s, k);  // a (x) b' (x) ba'
                        if (!a.c(p, w, k).is_zero())
                            res.u.at(q, s, k) -= c * a.c(p, w, k);  // b (x) a' (x) ab'
                        if (!a.c(p, s, k).is_zero())
                            res.u.at(q, w, k) -= c * a.c(p, s, k);  // b (x) b' (x) aa'
                    }
                }
        }
    return res;
}

std::vector<Tensor3> gaybe_residual(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    Tensor3 base = aybe_residual(r);
    std::vector<Tensor3> out;
    for (int x = 0; x < n; ++x) {
        Matrix lx = a.left_mult_matrix(x);
        Matrix rx = a.right_mult_matrix(x);
        Cube c(a.field(), n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k) {
                    Scalar v = Scalar::zero(a.field());
                    for (int m = 0; m < n; ++m)
                        v += lx.at(k, m) * base.u.at(i, j, m) -
                             rx.at(i, m) * base.u.at(m, j, k);
                    c.at(i, j, k) = v;
                }
        out.emplace_back(a, std::move(c));
    }
    return out;
}

bool gaybe_pass(const Tensor2& r) {
    for (const Tensor3& t : gaybe_residual(r))
        if (!t.is_zero()) return false;
    return true;
}

std::tuple<bool, bool, bool> invariance_tri_check(const Tensor2& s) {
    if (!s.is_symmetric()) throw std::invalid_argument("tensor is not symmetric");
    const Algebra& a = s.algebra;
    int n = a.dim();
    FieldSpec f = a.field();

    bool inv = true;
    for (int x = 0; x < n && inv; ++x) {
        Matrix lx = a.left_mult_matrix(x);
        Matrix rx = a.right_mult_matrix(x);
        // (id (x) L(x) - R(x) (x) id) s at slot (i,j)
        Matrix d = s.t * lx.transposed() - rx * s.t;
        if (!d.is_zero()) inv = false;
    }

    Bimodule dual = dual_bimodule(regular_bimodule(a));
    LinearMap smap = tensor_as_map(s);
    bool bal = true;
    for (int i = 0; i < n && bal; ++i)
        for (int j = 0; j < n && bal; ++j) {
            Vec lhs = dual.left_action(smap.apply_basis(i)).apply(basis_vec(f, n, j));
            Vec rhs = dual.right_action(smap.apply_basis(j)).apply(basis_vec(f, n, i));
            if (!equal(lhs, rhs)) bal = false;
        }

    bool hom = true;
    for (int x = 0; x < n && hom; ++x)
        for (int i = 0; i < n && hom; ++i) {
            Vec ai = basis_vec(f, n, i);
            Vec ex = basis_vec(f, n, x);
            if (!equal(smap.apply(dual.left[x].apply(ai)),
                       a.mul(ex, smap.apply_basis(i))) ||
                !equal(smap.apply(dual.right[x].apply(ai)),
                       a.mul(smap.apply_basis(i), ex)))
                hom = false;
        }
    return {inv, bal, hom};
}

Report operator_form_residual(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    FieldSpec f = a.field();
    Bimodule dual = dual_bimodule(regular_bimodule(a));
    LinearMap rmap = tensor_as_map(r);
    LinearMap rtmap = tensor_as_map(transpose_t(r));
    Report report;
    IdentityAccumulator acc("eq:aybeform");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec inner = sub(dual.left_action(rmap.apply_basis(i)).apply(basis_vec(f, n, j)),
                            dual.right_action(rtmap.apply_basis(j)).apply(basis_vec(f, n, i)));
            Vec res = sub(a.mul(rmap.apply_basis(i), rmap.apply_basis(j)),
                          rmap.apply(inner));
            acc.observe({i, j}, res);
        }
    acc.emit(report);
    return report;
}

LinearMap coproduct(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    Matrix m(a.field(), n * n, n);
    for (int s = 0; s < n; ++s) {
        Matrix lx = a.left_mult_matrix(s);
        Matrix rx = a.right_mult_matrix(s);
        Matrix d = r.t * lx.transposed() - rx * r.t;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.at(i * n + j, s) = d.at(i, j);
    }
    return LinearMap(n, n * n, std::move(m));
}

ProductTable dual_product(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    FieldSpec f = a.field();
    LinearMap delta = coproduct(r);

    // route 1: Delta^* — (e*_k . e*_l) coefficient on e*_s is Delta(e_s)(k,l)
    Cube t1(f, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            for (int s = 0; s < n; ++s) t1.at(k, l, s) = delta.mat.at(k * n + l, s);

    // route 2: R*(r(a*))b* - L*(r^t(b*))a*
    Bimodule dual = dual_bimodule(regular_bimodule(a));
    LinearMap rmap = tensor_as_map(r);
    LinearMap rtmap = tensor_as_map(transpose_t(r));
    Cube t2(f, n);
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Vec v = sub(dual.left_action(rmap.apply_basis(k)).apply(basis_vec(f, n, l)),
                        dual.right_action(rtmap.apply_basis(l)).apply(basis_vec(f, n, k)));
            for (int s = 0; s < n; ++s) t2.at(k, l, s) = v[s];
        }

    if (!(t1 == t2))
        throw std::logic_error("dual product computation paths disagree");
    return ProductTable{std::move(t1), "dual_product"};
}

LinearMap aguiar_map(const Tensor2& r) {
    const Algebra& a = r.algebra;
    int n = a.dim();
    FieldSpec f = a.field();
    Matrix m(f, n, n);
    for (int k = 0; k < n; ++k) {
        Vec col = zero_vec(f, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (r.t.at(i, j).is_zero()) continue;
                col = add(col, scale(r.t.at(i, j),
                                     a.mul(a.mul_basis(i, k), basis_vec(f, n, j))));
            }
        for (int i = 0; i < n; ++i) m.at(i, k) = col[i];
    }
    return LinearMap(n, n, std::move(m));
}

std::pair<ProductTable, ProductTable> beta_circle_products(const Tensor2& beta,
                                                           bool bypass_gate) {
    if (!bypass_gate) {
        auto [inv, bal, hom] = invariance_tri_check(beta);
        if (!inv || !bal || !hom)
            throw std::invalid_argument("symmetric part is not invariant");
    }
    const Algebra& a = beta.algebra;
    int n = a.dim();
    FieldSpec f = a.field();
    Bimodule dual = dual_bimodule(regular_bimodule(a));
    LinearMap bmap = tensor_as_map(beta);
    Scalar two = Scalar::one(f) + Scalar::one(f);
    Cube plus(f, n), minus(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec v = scale(two, dual.left_action(bmap.apply_basis(i))
                                   .apply(basis_vec(f, n, j)));
            for (int k = 0; k < n; ++k) {
                plus.at(i, j, k) = -v[k];
                minus.at(i, j, k) = v[k];
            }
        }
    return {ProductTable{std::move(plus), "circle_plus"},
            ProductTable{std::move(minus), "circle_minus"}};
}

Report circle_weight1_residuals(const Tensor2& r) {
    const Algebra& a = r.algebra;
    FieldSpec f = a.field();
    auto [alpha, beta] = sym_skew_split(r);
    auto circles = beta_circle_products(beta);
    Bimodule dual = dual_bimodule(regular_bimodule(a));

    Report report;
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    {
        OperatorContext ctx(a, BimoduleKAlgebra{dual, circles.first.table}, one, zero, zero);
        Report sub = o_operator_residual(ctx, tensor_as_map(r));
        report.record("eq:opweight1", sub.pass,
                      sub.checks[0].witness ? sub.checks[0].witness->indices
                                            : std::vector<int>{},
                      sub.checks[0].witness ? sub.checks[0].witness->residual : Vec{});
    }
    {
        OperatorContext ctx(a, BimoduleKAlgebra{dual, circles.second.table}, one, zero, zero);
        LinearMap neg_rt = tensor_as_map(transpose_t(r)).scaled(-one);
        Report sub = o_operator_residual(ctx, neg_rt);
        report.record("eq:topweight1", sub.pass,
                      sub.checks[0].witness ? sub.checks[0].witness->indices
                                            : std::vector<int>{},
                      sub.checks[0].witness ? sub.checks[0].witness->residual : Vec{});
    }
    return report;
}

}  // namespace ybe
