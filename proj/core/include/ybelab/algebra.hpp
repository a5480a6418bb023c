#ifndef YBELAB_ALGEBRA_HPP
#define YBELAB_ALGEBRA_HPP

#include "ybelab/linalg.hpp"
#include "ybelab/report.hpp"

#include <string>
#include <vector>

namespace ybe {

/// Dense n x n x n scalar cube; the storage behind structure constants,
/// product tables and third-order tensors.
class Cube {
public:
    Cube() : n_(0) {}
    Cube(FieldSpec f, int n)
        : field_(f), n_(n), a_(static_cast<size_t>(n) * n * n, Scalar::zero(f)) {}

    FieldSpec field() const { return field_; }
    int dim() const { return n_; }

    Scalar& at(int i, int j, int k) {
        return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
    }
    const Scalar& at(int i, int j, int k) const {
        return a_[(static_cast<size_t>(i) * n_ + j) * n_ + k];
    }

    bool operator==(const Cube& o) const { return n_ == o.n_ && a_ == o.a_; }
    bool operator!=(const Cube& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    FieldSpec field_;
    int n_;
    std::vector<Scalar> a_;
};

/// Finite-dimensional associative (not necessarily unital) algebra given by
/// structure constants: e_i . e_j = sum_k c(i,j,k) e_k.
class Algebra {
public:
    Algebra() = default;
    Algebra(FieldSpec f, int n) : c_(f, n) {}
    Algebra(Cube c, std::vector<std::string> labels = {})
        : c_(std::move(c)), labels_(std::move(labels)) {}

    FieldSpec field() const { return c_.field(); }
    int dim() const { return c_.dim(); }

    Scalar& c(int i, int j, int k) { return c_.at(i, j, k); }
    const Scalar& c(int i, int j, int k) const { return c_.at(i, j, k); }
    const Cube& constants() const { return c_; }

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> l) { labels_ = std::move(l); }
    std::string label(int i) const;

    /// Product of coordinate vectors.
    Vec mul(const Vec& x, const Vec& y) const;
    /// Product of basis elements e_i . e_j as a coordinate vector.
    Vec mul_basis(int i, int j) const;

    /// Matrix of L(e_i): column j holds e_i . e_j.
    Matrix left_mult_matrix(int i) const;
    /// Matrix of R(e_i): column j holds e_j . e_i.
    Matrix right_mult_matrix(int i) const;

    Algebra opposite() const;

    bool operator==(const Algebra& o) const { return c_ == o.c_; }

private:
    Cube c_;
    std::vector<std::string> labels_;
};

/// A-bimodule by action matrices, column-vector convention:
/// l(x)v = Lmat(x) * v and v r(x) = Rmat(x) * v. The right-module axiom
/// therefore reads Rmat(x.y) = Rmat(y) * Rmat(x).
struct Bimodule {
    Algebra algebra;
    int dim = 0;
    std::vector<Matrix> left;   // one dim x dim matrix per algebra basis element
    std::vector<Matrix> right;

    Matrix left_action(const Vec& x) const;   // Lmat(x) for a coordinate vector x
    Matrix right_action(const Vec& x) const;

    Vec act_left(int algebra_basis, const Vec& v) const;
    Vec act_right(const Vec& v, int algebra_basis) const;
};

/// Bimodule carrying its own associative product (structure constants d).
struct BimoduleKAlgebra {
    Bimodule module;
    Cube product;  // d(i,j,k): v_i o v_j = sum_k d(i,j,k) v_k

    int dim() const { return module.dim; }
    Vec mul(const Vec& u, const Vec& v) const;
    Vec mul_basis(int i, int j) const;
    bool has_zero_product() const { return product.is_zero(); }

    static BimoduleKAlgebra with_zero_product(Bimodule m);
};

/// Two algebras acting on each other; actions stored as matrix families
/// indexed by basis elements (same column-vector convention as Bimodule).
struct MatchedPair {
    Algebra a;
    Algebra b;
    std::vector<Matrix> left_a;   // l_A(e_i): dim(B) x dim(B)
    std::vector<Matrix> right_a;  // r_A(e_i)
    std::vector<Matrix> left_b;   // l_B(f_j): dim(A) x dim(A)
    std::vector<Matrix> right_b;  // r_B(f_j)
};

Report validate_algebra(const Algebra& a);
Report validate_algebra(const Cube& constants);

Bimodule regular_bimodule(const Algebra& a);
Bimodule dual_bimodule(const Bimodule& v);
Report validate_bimodule(const Bimodule& v);
Report validate_bimodule_algebra(const BimoduleKAlgebra& r);

/// strict implements the literal trailing "=0" variant of the last two
/// compatibility identities; the default checks them as two-term equalities.
Report validate_matched_pair(const MatchedPair& mp, bool strict = false);

/// Algebra on A (+) B, basis ordered A first. With check=true the matched
/// pair is validated first and an invalid one raises; check=false builds the
/// (possibly non-associative) product table regardless.
Algebra matched_pair_sum(const MatchedPair& mp, bool check = true);

Algebra semidirect_sum(const Algebra& a, const BimoduleKAlgebra& r, bool check = true);

/// Inverse of matched_pair_sum for a decomposition of C into two subalgebra
/// spans; throws std::invalid_argument when the index sets do not partition
/// the basis or a span is not closed under multiplication.
MatchedPair split_algebra(const Algebra& c, const std::vector<int>& idx_a,
                          const std::vector<int>& idx_b);

}  // namespace ybe

#endif
