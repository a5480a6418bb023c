#ifndef YBELAB_FIELD_HPP
#define YBELAB_FIELD_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ybe {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Raised when operands from different fields are combined, or when a
/// field-specific restriction (p = 2, non-prime p, ...) is violated.
class FieldError : public std::runtime_error {
public:
    explicit FieldError(const std::string& what) : std::runtime_error(what) {}
};

enum class FieldKind { Rationals, PrimeField };

/// The coefficient field: Q or F_p for a prime p.
struct FieldSpec {
    FieldKind kind = FieldKind::Rationals;
    long p = 0;  // only meaningful for PrimeField

    static FieldSpec rationals() { return {FieldKind::Rationals, 0}; }
    static FieldSpec prime(long p);

    /// 1/2 exists iff char != 2.
    bool has_half() const { return kind == FieldKind::Rationals || p >= 3; }

    bool operator==(const FieldSpec& o) const {
        return kind == o.kind && (kind == FieldKind::Rationals || p == o.p);
    }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    std::string str() const;

    /// Parses "Q", "Fp:<p>" or "F<p>".
    static FieldSpec parse(const std::string& s);
};

/// Exact field element in canonical form: a reduced fraction over Q, or a
/// residue in [0, p) over F_p. Equality is exact; there are no tolerances.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), v_(0) {}
    Scalar(FieldSpec f, long n) : field_(f), v_(n) { canonicalize(); }
    Scalar(FieldSpec f, BigRational v) : field_(f), v_(std::move(v)) { canonicalize(); }

    static Scalar zero(FieldSpec f) { return Scalar(f, 0); }
    static Scalar one(FieldSpec f) { return Scalar(f, 1); }
    /// Parses an integer or an "a/b" fraction. Over F_p, "a/b" requires b
    /// invertible mod p.
    static Scalar parse(FieldSpec f, const std::string& s);

    const FieldSpec& field() const { return field_; }
    const BigRational& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string str() const;

private:
    void canonicalize();
    void require_same_field(const Scalar& o) const;

    FieldSpec field_;
    BigRational v_;
};

bool is_prime(long n);

/// Inverse of a mod p (p prime). Throws FieldError on a == 0 (mod p).
long mod_inverse(long a, long p);

}  // namespace ybe

#endif
