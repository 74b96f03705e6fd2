#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace klrd {

using BigInt = boost::multiprecision::cpp_int;

/// Dense integer-coefficient polynomial in the formal parameter p.
/// Invariant: coefficient vector has no trailing zeros (zero = empty vector).
struct ZPoly {
    std::vector<BigInt> c;  // c[k] multiplies p^k

    ZPoly() = default;
    explicit ZPoly(BigInt constant);
    static ZPoly monomial(int k, BigInt coeff = BigInt(1));

    bool is_zero() const { return c.empty(); }
    int deg() const { return static_cast<int>(c.size()) - 1; }  // deg 0 = -1
    const BigInt& lead() const;

    void trim();

    ZPoly operator-() const;
    ZPoly operator+(const ZPoly& o) const;
    ZPoly operator-(const ZPoly& o) const;
    ZPoly operator*(const ZPoly& o) const;
    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return c != o.c; }
    bool operator<(const ZPoly& o) const;  // arbitrary total order (map keys)

    /// gcd of all coefficients, >= 0; content of 0 is 0.
    BigInt content() const;
    /// Divide every coefficient exactly by d (d != 0).
    ZPoly divided_by_int(const BigInt& d) const;

    /// True gcd in Z[p]: gcd of contents times primitive gcd, leading coeff > 0.
    static ZPoly gcd(ZPoly a, ZPoly b);
    /// Exact quotient; throws std::domain_error when the division leaves a remainder.
    static ZPoly exact_div(const ZPoly& a, const ZPoly& b);

    std::string to_string() const;  // sparse c*p^k terms, descending powers
};

/// Element of the fraction field Q(p), the ground field of every algebra here.
/// Canonical reduced form: den != 0, gcd(num, den) = 1 in Z[p], lead(den) > 0.
struct Scalar {
    ZPoly num, den;

    Scalar() : num(), den(BigInt(1)) {}
    Scalar(long long v) : num(BigInt(v)), den(BigInt(1)) {}
    explicit Scalar(BigInt v) : num(std::move(v)), den(BigInt(1)) {}
    Scalar(ZPoly n, ZPoly d);  // reduces to canonical form

    /// p^k for any integer k (negative k goes to the denominator).
    static Scalar p_power(int k);

    bool is_zero() const { return num.is_zero(); }
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // throws on division by zero
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }
    bool operator<(const Scalar& o) const;  // arbitrary total order (map keys)

    std::string to_string() const;  // "num" or "num/den"
    static Scalar parse(const std::string& text);
};

}  // namespace klrd
