#ifndef YBELAB_LINALG_HPP
#define YBELAB_LINALG_HPP

#include "ybelab/field.hpp"

#include <optional>
#include <vector>

namespace ybe {

/// Coordinate vector; all entries share one FieldSpec.
using Vec = std::vector<Scalar>;

Vec zero_vec(FieldSpec f, int n);
Vec basis_vec(FieldSpec f, int n, int i);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);
bool is_zero(const Vec& a);
bool equal(const Vec& a, const Vec& b);

/// Dense row-major matrix over an exact field.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(FieldSpec f, int rows, int cols)
        : field_(f), rows_(rows), cols_(cols),
          a_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

    static Matrix identity(FieldSpec f, int n);

    FieldSpec field() const { return field_; }
    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Scalar& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix operator-() const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;

    Vec apply(const Vec& v) const;  // matrix * column vector

    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

    /// Exact inverse by Gaussian elimination; nullopt when singular.
    std::optional<Matrix> inverse() const;

    std::string str() const;

private:
    FieldSpec field_;
    int rows_, cols_;
    std::vector<Scalar> a_;
};

/// A linear map between two based spaces: column j is the image of the j-th
/// source basis vector, so apply() is matrix * column vector.
struct LinearMap {
    int source_dim = 0;
    int target_dim = 0;
    Matrix mat;

    LinearMap() = default;
    LinearMap(int src, int dst, Matrix m);
    static LinearMap zero(FieldSpec f, int src, int dst);
    static LinearMap identity(FieldSpec f, int n);

    FieldSpec field() const { return mat.field(); }
    Vec apply(const Vec& v) const { return mat.apply(v); }
    Vec apply_basis(int j) const;

    LinearMap operator+(const LinearMap& o) const;
    LinearMap operator-(const LinearMap& o) const;
    LinearMap scaled(const Scalar& c) const;
    LinearMap compose(const LinearMap& inner) const;  // this ∘ inner
    bool operator==(const LinearMap& o) const;
};

}  // namespace ybe

#endif
