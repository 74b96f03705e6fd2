#pragma once

#include <string>
#include <vector>

namespace klrd {

/// Laurent series in v with integer coefficients, known exactly for all
/// exponents <= trunc. Exact polynomials carry trunc = kExact. Coefficients
/// below lo are zero; the window above trunc is unknown, not zero.
struct Series {
    static constexpr long long kExact = 1'000'000'000LL;

    int lo = 0;
    long long trunc = kExact;
    std::vector<long long> c;  // c[t] multiplies v^(lo + t); trimmed at both ends

    Series() = default;

    static Series zero() { return Series(); }
    static Series constant(long long a);
    static Series monomial(int d, long long a = 1);
    /// (1 - v^2)^m as an exact polynomial.
    static Series one_minus_v2_pow(int m);
    /// (1 - v^2)^(-m) truncated at order N (the free polynomial block).
    static Series free_block(int m, long long N);

    bool known_zero() const { return c.empty() && trunc == kExact; }
    long long coeff(long long d) const;  // requires d <= trunc
    /// Lowest exponent that could be nonzero (kExact when exactly zero).
    long long min_exp() const;

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator*(long long a) const;
    Series& operator+=(const Series& o) { return *this = *this + o; }
    Series shifted(int d) const;       // multiply by v^d
    Series truncated(long long N) const;

    /// Equality of every coefficient in the common known window; false when
    /// the windows do not even reach `through`.
    bool matches(const Series& o, long long through) const;

    std::string to_string() const;  // "1+2*v^2+3*v^4" style

  private:
    void normalize();
};

}  // namespace klrd
