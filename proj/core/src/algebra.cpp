#include "ybelab/algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace ybe {

bool Cube::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

std::string Algebra::label(int i) const {
    if (i < static_cast<int>(labels_.size())) return labels_[i];
    return "e" + std::to_string(i + 1);
}

Vec Algebra::mul(const Vec& x, const Vec& y) const {
    int n = dim();
    Vec r = zero_vec(field(), n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (int j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            Scalar xy = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (!c(i, j, k).is_zero()) r[k] += xy * c(i, j, k);
        }
    }
    return r;
}

Vec Algebra::mul_basis(int i, int j) const {
    int n = dim();
    Vec r = zero_vec(field(), n);
    for (int k = 0; k < n; ++k) r[k] = c(i, j, k);
    return r;
}

Matrix Algebra::left_mult_matrix(int i) const {
    int n = dim();
    Matrix m(field(), n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m.at(k, j) = c(i, j, k);
    return m;
}

Matrix Algebra::right_mult_matrix(int i) const {
    int n = dim();
    Matrix m(field(), n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) m.at(k, j) = c(j, i, k);
    return m;
}

Algebra Algebra::opposite() const {
    int n = dim();
    Cube o(field(), n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) o.at(i, j, k) = c(j, i, k);
    return Algebra(std::move(o), labels_);
}

// Linear combination of an action-matrix family with vector coefficients.
static Matrix combine(const std::vector<Matrix>& family, const Vec& x) {
    Matrix r = family.at(0).scaled(x.at(0));
    for (size_t i = 1; i < family.size(); ++i)
        if (!x[i].is_zero()) r = r + family[i].scaled(x[i]);
    return r;
}

Matrix Bimodule::left_action(const Vec& x) const { return combine(left, x); }
Matrix Bimodule::right_action(const Vec& x) const { return combine(right, x); }

Vec Bimodule::act_left(int i, const Vec& v) const { return left.at(i).apply(v); }
Vec Bimodule::act_right(const Vec& v, int i) const { return right.at(i).apply(v); }

Vec BimoduleKAlgebra::mul(const Vec& u, const Vec& v) const {
    int m = dim();
    Vec r = zero_vec(product.field(), m);
    for (int i = 0; i < m; ++i) {
        if (u[i].is_zero()) continue;
        for (int j = 0; j < m; ++j) {
            if (v[j].is_zero()) continue;
            Scalar uv = u[i] * v[j];
            for (int k = 0; k < m; ++k)
                if (!product.at(i, j, k).is_zero()) r[k] += uv * product.at(i, j, k);
        }
    }
    return r;
}

Vec BimoduleKAlgebra::mul_basis(int i, int j) const {
    int m = dim();
    Vec r = zero_vec(product.field(), m);
    for (int k = 0; k < m; ++k) r[k] = product.at(i, j, k);
    return r;
}

BimoduleKAlgebra BimoduleKAlgebra::with_zero_product(Bimodule m) {
    Cube zero(m.algebra.field(), m.dim);
    return BimoduleKAlgebra{std::move(m), std::move(zero)};
}

Report validate_algebra(const Cube& c) {
    int n = c.dim();
    FieldSpec f = c.field();
    Report report;
    IdentityAccumulator assoc("associativity");
    for (int i = 0; i < n && assoc.pass(); ++i)
        for (int j = 0; j < n && assoc.pass(); ++j)
            for (int k = 0; k < n && assoc.pass(); ++k) {
                Vec residual = zero_vec(f, n);
                for (int l = 0; l < n; ++l) {
                    Scalar s = Scalar::zero(f);
                    for (int m = 0; m < n; ++m)
                        s += c.at(i, j, m) * c.at(m, k, l) - c.at(j, k, m) * c.at(i, m, l);
                    residual[l] = s;
                }
                assoc.observe({i, j, k}, residual);
            }
    assoc.emit(report);
    return report;
}

Report validate_algebra(const Algebra& a) { return validate_algebra(a.constants()); }

Bimodule regular_bimodule(const Algebra& a) {
    Bimodule v;
    v.algebra = a;
    v.dim = a.dim();
    for (int i = 0; i < a.dim(); ++i) {
        v.left.push_back(a.left_mult_matrix(i));
        v.right.push_back(a.right_mult_matrix(i));
    }
    return v;
}

Bimodule dual_bimodule(const Bimodule& v) {
    Bimodule d;
    d.algebra = v.algebra;
    d.dim = v.dim;
    for (int i = 0; i < v.algebra.dim(); ++i) {
        d.left.push_back(v.right[i].transposed());
        d.right.push_back(v.left[i].transposed());
    }
    return d;
}

// Matrix identity checked columnwise so witnesses stay vectors.
static void observe_matrix_identity(IdentityAccumulator& acc, const std::vector<int>& indices,
                                    const Matrix& lhs, const Matrix& rhs) {
    if (!acc.pass()) return;
    Matrix d = lhs - rhs;
    if (d.is_zero()) return;
    for (int k = 0; k < d.cols(); ++k) {
        Vec col = zero_vec(d.field(), d.rows());
        for (int i = 0; i < d.rows(); ++i) col[i] = d.at(i, k);
        if (!is_zero(col)) {
            std::vector<int> idx = indices;
            idx.push_back(k);
            acc.observe(idx, col);
            return;
        }
    }
}

Report validate_bimodule(const Bimodule& v) {
    const Algebra& a = v.algebra;
    int n = a.dim();
    Report report;
    IdentityAccumulator left_mod("left-module"), right_mod("right-module"),
        compat("compatibility");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            observe_matrix_identity(left_mod, {i, j},
                                    v.left_action(a.mul_basis(i, j)),
                                    v.left[i] * v.left[j]);
            observe_matrix_identity(right_mod, {i, j},
                                    v.right_action(a.mul_basis(i, j)),
                                    v.right[j] * v.right[i]);
            observe_matrix_identity(compat, {i, j},
                                    v.right[j] * v.left[i],
                                    v.left[i] * v.right[j]);
        }
    left_mod.emit(report);
    right_mod.emit(report);
    compat.emit(report);
    return report;
}

Report validate_bimodule_algebra(const BimoduleKAlgebra& r) {
    Report report;
    report.merge("product-", validate_algebra(r.product));
    report.merge("", validate_bimodule(r.module));

    const Algebra& a = r.module.algebra;
    int n = a.dim(), m = r.dim();
    IdentityAccumulator t1("eq:twoalg1"), t2("eq:twoalg2"), t3("eq:twoalg3");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                Vec vj = basis_vec(a.field(), m, j);
                Vec vk = basis_vec(a.field(), m, k);
                // l(x)(v o w) = (l(x)v) o w
                t1.observe({i, j, k},
                           sub(r.module.left[i].apply(r.mul_basis(j, k)),
                               r.mul(r.module.left[i].apply(vj), vk)));
                // (v o w) r(x) = v o (w r(x))
                t2.observe({i, j, k},
                           sub(r.module.right[i].apply(r.mul_basis(j, k)),
                               r.mul(vj, r.module.right[i].apply(vk))));
                // (v r(x)) o w = v o (l(x)w)
                t3.observe({i, j, k},
                           sub(r.mul(r.module.right[i].apply(vj), vk),
                               r.mul(vj, r.module.left[i].apply(vk))));
            }
    t1.emit(report);
    t2.emit(report);
    t3.emit(report);
    return report;
}

Report validate_matched_pair(const MatchedPair& mp, bool strict) {
    Report report;
    report.merge("A-", validate_algebra(mp.a));
    report.merge("B-", validate_algebra(mp.b));

    Bimodule b_over_a{mp.a, mp.b.dim(), mp.left_a, mp.right_a};
    Bimodule a_over_b{mp.b, mp.a.dim(), mp.left_b, mp.right_b};
    report.merge("B-bimodule-", validate_bimodule(b_over_a));
    report.merge("A-bimodule-", validate_bimodule(a_over_b));

    FieldSpec f = mp.a.field();
    int n = mp.a.dim(), m = mp.b.dim();
    IdentityAccumulator e24("eq:2.4"), e25("eq:2.5"), e26("eq:2.6"), e27("eq:2.7"),
        e28("eq:2.8"), e29("eq:2.9"), e28z("eq:2.8-zero"), e29z("eq:2.9-zero");

    auto eA = [&](int i) { return basis_vec(f, n, i); };
    auto eB = [&](int j) { return basis_vec(f, m, j); };

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) {
                // 2.4: l_A(x)(a o b) = l_A(x r_B(a)) b + (l_A(x)a) o b
                Vec lhs = mp.left_a[i].apply(mp.b.mul_basis(j, k));
                Vec rhs = add(combine(mp.left_a, mp.right_b[j].apply(eA(i))).apply(eB(k)),
                              mp.b.mul(mp.left_a[i].apply(eB(j)), eB(k)));
                e24.observe({i, j, k}, sub(lhs, rhs));
                // 2.5: (a o b) r_A(x) = a r_A(l_B(b)x) + a o (b r_A(x))
                lhs = mp.right_a[i].apply(mp.b.mul_basis(j, k));
                rhs = add(combine(mp.right_a, mp.left_b[k].apply(eA(i))).apply(eB(j)),
                          mp.b.mul(eB(j), mp.right_a[i].apply(eB(k))));
                e25.observe({i, j, k}, sub(lhs, rhs));
                // 2.8: l_A(l_B(a)x)b + (a r_A(x)) o b = a r_A(x r_B(b)) + a o (l_A(x)b)
                Vec lhs28 = add(combine(mp.left_a, mp.left_b[j].apply(eA(i))).apply(eB(k)),
                                mp.b.mul(mp.right_a[i].apply(eB(j)), eB(k)));
                Vec rhs28 = add(combine(mp.right_a, mp.right_b[k].apply(eA(i))).apply(eB(j)),
                                mp.b.mul(eB(j), mp.left_a[i].apply(eB(k))));
                e28.observe({i, j, k}, sub(lhs28, rhs28));
                if (strict) {
                    e28z.observe({i, j, k}, lhs28);
                    e28z.observe({i, j, k}, rhs28);
                }
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < m; ++k) {
                // 2.6: l_B(a)(x . y) = l_B(a r_A(x)) y + (l_B(a)x) . y
                Vec lhs = mp.left_b[k].apply(mp.a.mul_basis(i, j));
                Vec rhs = add(combine(mp.left_b, mp.right_a[i].apply(eB(k))).apply(eA(j)),
                              mp.a.mul(mp.left_b[k].apply(eA(i)), eA(j)));
                e26.observe({i, j, k}, sub(lhs, rhs));
                // 2.7: (x . y) r_B(a) = x r_B(l_A(y)a) + x . (y r_B(a))
                lhs = mp.right_b[k].apply(mp.a.mul_basis(i, j));
                rhs = add(combine(mp.right_b, mp.left_a[j].apply(eB(k))).apply(eA(i)),
                          mp.a.mul(eA(i), mp.right_b[k].apply(eA(j))));
                e27.observe({i, j, k}, sub(lhs, rhs));
            }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < n; ++k) {
                // 2.9: l_B(l_A(x)a)y + (x r_B(a)) . y = x r_B(a r_A(y)) + x . (l_B(a)y)
                Vec lhs = add(combine(mp.left_b, mp.left_a[i].apply(eB(j))).apply(eA(k)),
                              mp.a.mul(mp.right_b[j].apply(eA(i)), eA(k)));
                Vec rhs = add(combine(mp.right_b, mp.right_a[k].apply(eB(j))).apply(eA(i)),
                              mp.a.mul(eA(i), mp.left_b[j].apply(eA(k))));
                e29.observe({i, j, k}, sub(lhs, rhs));
                if (strict) {
                    e29z.observe({i, j, k}, lhs);
                    e29z.observe({i, j, k}, rhs);
                }
            }

    e24.emit(report);
    e25.emit(report);
    e26.emit(report);
    e27.emit(report);
    e28.emit(report);
    e29.emit(report);
    if (strict) {
        e28z.emit(report);
        e29z.emit(report);
    }
    return report;
}

Algebra matched_pair_sum(const MatchedPair& mp, bool check) {
    if (check) {
        Report r = validate_matched_pair(mp);
        if (!r.pass) throw std::invalid_argument("matched pair axioms fail: " + r.text());
    }
    FieldSpec f = mp.a.field();
    int n = mp.a.dim(), m = mp.b.dim(), big = n + m;
    Cube c(f, big);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c.at(i, j, k) = mp.a.c(i, j, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) c.at(n + i, n + j, n + k) = mp.b.c(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            // x * b = x r_B(b) + l_A(x)b
            for (int k = 0; k < n; ++k) c.at(i, n + j, k) = mp.right_b[j].at(k, i);
            for (int k = 0; k < m; ++k) c.at(i, n + j, n + k) = mp.left_a[i].at(k, j);
            // a * y = l_B(a)y + a r_A(y)
            for (int k = 0; k < n; ++k) c.at(n + j, i, k) = mp.left_b[j].at(k, i);
            for (int k = 0; k < m; ++k) c.at(n + j, i, n + k) = mp.right_a[i].at(k, j);
        }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(mp.a.label(i));
    for (int j = 0; j < m; ++j) labels.push_back(mp.b.label(j));
    return Algebra(std::move(c), std::move(labels));
}

Algebra semidirect_sum(const Algebra& a, const BimoduleKAlgebra& r, bool check) {
    if (check) {
        Report rep = validate_bimodule_algebra(r);
        if (!rep.pass)
            throw std::invalid_argument("bimodule k-algebra axioms fail: " + rep.text());
    }
    FieldSpec f = a.field();
    int n = a.dim(), m = r.dim(), big = n + m;
    Cube c(f, big);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) c.at(i, j, k) = a.c(i, j, k);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) c.at(n + i, n + j, n + k) = r.product.at(i, j, k);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            for (int k = 0; k < m; ++k) {
                c.at(i, n + j, n + k) = r.module.left[i].at(k, j);   // l(x)v
                c.at(n + j, i, n + k) = r.module.right[i].at(k, j);  // v r(x)
            }
        }
    return Algebra(std::move(c));
}

MatchedPair split_algebra(const Algebra& c, const std::vector<int>& idx_a,
                          const std::vector<int>& idx_b) {
    int big = c.dim();
    std::vector<int> side(big, -1);  // 0 = A, 1 = B
    std::vector<int> pos(big, -1);
    for (size_t t = 0; t < idx_a.size(); ++t) {
        int i = idx_a[t];
        if (i < 0 || i >= big || side[i] != -1)
            throw std::invalid_argument("index sets do not partition the basis");
        side[i] = 0;
        pos[i] = static_cast<int>(t);
    }
    for (size_t t = 0; t < idx_b.size(); ++t) {
        int i = idx_b[t];
        if (i < 0 || i >= big || side[i] != -1)
            throw std::invalid_argument("index sets do not partition the basis");
        side[i] = 1;
        pos[i] = static_cast<int>(t);
    }
    for (int i = 0; i < big; ++i)
        if (side[i] == -1) throw std::invalid_argument("index sets do not partition the basis");

    // closure of each span under multiplication
    for (int s = 0; s <= 1; ++s) {
        const auto& idx = s == 0 ? idx_a : idx_b;
        for (int i : idx)
            for (int j : idx)
                for (int k = 0; k < big; ++k)
                    if (side[k] != s && !c.c(i, j, k).is_zero())
                        throw std::invalid_argument(
                            "span is not closed under multiplication (side " +
                            std::string(s == 0 ? "A" : "B") + ")");
    }

    FieldSpec f = c.field();
    int n = static_cast<int>(idx_a.size()), m = static_cast<int>(idx_b.size());
    Cube ca(f, n), cb(f, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) ca.at(i, j, k) = c.c(idx_a[i], idx_a[j], idx_a[k]);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = 0; k < m; ++k) cb.at(i, j, k) = c.c(idx_b[i], idx_b[j], idx_b[k]);

    MatchedPair mp;
    mp.a = Algebra(std::move(ca));
    mp.b = Algebra(std::move(cb));
    mp.left_a.assign(n, Matrix(f, m, m));
    mp.right_a.assign(n, Matrix(f, m, m));
    mp.left_b.assign(m, Matrix(f, n, n));
    mp.right_b.assign(m, Matrix(f, n, n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            // e_i * f_j = x r_B(b) (A-part) + l_A(x)b (B-part)
            for (int k = 0; k < big; ++k) {
                const Scalar& v = c.c(idx_a[i], idx_b[j], k);
                if (side[k] == 0) mp.right_b[j].at(pos[k], i) = v;
                else mp.left_a[i].at(pos[k], j) = v;
            }
            // f_j * e_i = l_B(a)x (A-part) + a r_A(y) (B-part)
            for (int k = 0; k < big; ++k) {
                const Scalar& v = c.c(idx_b[j], idx_a[i], k);
                if (side[k] == 0) mp.left_b[j].at(pos[k], i) = v;
                else mp.right_a[i].at(pos[k], j) = v;
            }
        }
    return mp;
}

}  // namespace ybe
