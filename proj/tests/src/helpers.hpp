#ifndef YBELAB_TEST_HELPERS_HPP
#define YBELAB_TEST_HELPERS_HPP

#include "ybelab/bundle.hpp"
#include "ybelab/doubling.hpp"
#include "ybelab/search.hpp"

#include <random>

namespace ybetest {

using namespace ybe;

inline FieldSpec Q() { return FieldSpec::rationals(); }
inline FieldSpec F(long p) { return FieldSpec::prime(p); }

inline Scalar sc(FieldSpec f, long n) { return Scalar(f, n); }

// Two-dimensional zero algebra.
inline Algebra zero_alg2(FieldSpec f = FieldSpec::rationals()) {
    Algebra a(f, 2);
    a.set_labels({"e1", "e2"});
    return a;
}

// e1 e1 = e2, all other products zero.
inline Algebra nil2(FieldSpec f = FieldSpec::rationals()) {
    Algebra a(f, 2);
    a.c(0, 0, 1) = Scalar::one(f);
    a.set_labels({"e1", "e2"});
    return a;
}

// k[x]/(x^2), basis {u, x}, u the unit.
inline Algebra dual_num(FieldSpec f = FieldSpec::rationals()) {
    Algebra a(f, 2);
    a.c(0, 0, 0) = Scalar::one(f);
    a.c(0, 1, 1) = Scalar::one(f);
    a.c(1, 0, 1) = Scalar::one(f);
    a.set_labels({"u", "x"});
    return a;
}

// Upper-triangular 2x2 matrices, basis {E11, E12, E22}.
inline Algebra ut2(FieldSpec f = FieldSpec::rationals()) {
    Algebra a(f, 3);
    a.c(0, 0, 0) = Scalar::one(f);  // E11 E11 = E11
    a.c(0, 1, 1) = Scalar::one(f);  // E11 E12 = E12
    a.c(1, 2, 1) = Scalar::one(f);  // E12 E22 = E12
    a.c(2, 2, 2) = Scalar::one(f);  // E22 E22 = E22
    a.set_labels({"E11", "E12", "E22"});
    return a;
}

// Full 2x2 matrix algebra, basis {E11, E12, E21, E22}.
inline Algebra m2(FieldSpec f = FieldSpec::rationals()) {
    Algebra a(f, 4);
    auto idx = [](int i, int j) { return 2 * i + j; };
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l)
                    if (j == k) a.c(idx(i, j), idx(k, l), idx(i, l)) = Scalar::one(f);
    a.set_labels({"E11", "E12", "E21", "E22"});
    return a;
}

// r = E11 (x) E12 - E12 (x) E11 on UT2.
inline Tensor2 flagship_tensor(FieldSpec f = FieldSpec::rationals()) {
    Algebra a = ut2(f);
    Matrix t(f, 3, 3);
    t.at(0, 1) = Scalar::one(f);
    t.at(1, 0) = -Scalar::one(f);
    return Tensor2(a, t);
}

inline LinearMap diag_map(FieldSpec f, std::vector<long> d) {
    int n = static_cast<int>(d.size());
    Matrix m(f, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(f, d[i]);
    return LinearMap(n, n, m);
}

inline LinearMap map_from(FieldSpec f, int rows, int cols, std::vector<long> rowmajor) {
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = Scalar(f, rowmajor[i * cols + j]);
    return LinearMap(cols, rows, m);
}

inline Tensor2 tensor_from(const Algebra& a, std::vector<long> rowmajor) {
    FieldSpec f = a.field();
    int n = a.dim();
    Matrix t(f, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.at(i, j) = Scalar(f, rowmajor[i * n + j]);
    return Tensor2(a, t);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    Scalar scalar(FieldSpec f) {
        if (f.kind == FieldKind::PrimeField) {
            std::uniform_int_distribution<long> d(0, f.p - 1);
            return Scalar(f, d(gen_));
        }
        std::uniform_int_distribution<long> d(-3, 3);
        return Scalar(f, d(gen_));
    }

    Matrix matrix(FieldSpec f, int rows, int cols) {
        Matrix m(f, rows, cols);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) m.at(i, j) = scalar(f);
        return m;
    }

    LinearMap map(FieldSpec f, int n) { return LinearMap(n, n, matrix(f, n, n)); }

    Tensor2 tensor(const Algebra& a) {
        return Tensor2(a, matrix(a.field(), a.dim(), a.dim()));
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace ybetest

#endif
