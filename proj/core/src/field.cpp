#include "ybelab/field.hpp"

#include <sstream>

namespace ybe {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long mod_inverse(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw FieldError("division by zero in F_" + std::to_string(p));
    // extended Euclid
    long r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        long q = r0 / r1;
        long r2 = r0 - q * r1;
        long s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    long inv = s0 % p;
    if (inv < 0) inv += p;
    return inv;
}

FieldSpec FieldSpec::prime(long p) {
    if (!is_prime(p)) throw FieldError("not a prime: " + std::to_string(p));
    return {FieldKind::PrimeField, p};
}

std::string FieldSpec::str() const {
    if (kind == FieldKind::Rationals) return "Q";
    return "Fp:" + std::to_string(p);
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "Q" || s == "q") return rationals();
    std::string body;
    if (s.rfind("Fp:", 0) == 0) body = s.substr(3);
    else if (s.rfind("F", 0) == 0) body = s.substr(1);
    else throw FieldError("unrecognized field spec: " + s);
    try {
        return prime(std::stol(body));
    } catch (const std::invalid_argument&) {
        throw FieldError("unrecognized field spec: " + s);
    }
}

void Scalar::canonicalize() {
    if (field_.kind == FieldKind::PrimeField) {
        BigInt num = boost::multiprecision::numerator(v_);
        BigInt den = boost::multiprecision::denominator(v_);
        BigInt p(field_.p);
        BigInt r = num % p;
        if (r < 0) r += p;
        if (den != 1) {
            BigInt d = den % p;
            if (d < 0) d += p;
            long dl = d.convert_to<long>();
            r = (r * mod_inverse(dl, field_.p)) % p;
        }
        v_ = BigRational(r);
    }
    // cpp_rational keeps Q values reduced with positive denominator.
}

void Scalar::require_same_field(const Scalar& o) const {
    if (field_ != o.field_)
        throw FieldError("field mismatch: " + field_.str() + " vs " + o.field_.str());
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, v_ + o.v_);
}

Scalar Scalar::operator-(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, v_ - o.v_);
}

Scalar Scalar::operator*(const Scalar& o) const {
    require_same_field(o);
    return Scalar(field_, v_ * o.v_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    require_same_field(o);
    return *this * o.inverse();
}

Scalar Scalar::operator-() const { return Scalar(field_, -v_); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw FieldError("division by zero");
    if (field_.kind == FieldKind::Rationals) return Scalar(field_, 1 / v_);
    long a = boost::multiprecision::numerator(v_).convert_to<long>();
    return Scalar(field_, mod_inverse(a, field_.p));
}

bool Scalar::operator==(const Scalar& o) const {
    require_same_field(o);
    return v_ == o.v_;
}

std::string Scalar::str() const {
    std::ostringstream os;
    os << v_;
    return os.str();
}

Scalar Scalar::parse(FieldSpec f, const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Scalar(f, BigRational(BigInt(s)));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw FieldError("zero denominator in scalar: " + s);
        if (f.kind == FieldKind::PrimeField && den % f.p == 0)
            throw FieldError("scalar not representable in " + f.str() + ": " + s);
        return Scalar(f, BigRational(num, den));
    } catch (const std::runtime_error& e) {
        throw FieldError(std::string("bad scalar '") + s + "': " + e.what());
    }
}

}  // namespace ybe
