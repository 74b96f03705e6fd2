#pragma once

#include "klrd/poly.hpp"

#include <map>
#include <optional>
#include <string>

namespace klrd {

/// Element of the polynomial ring in kappa_1..kappa_n localized at the
/// multiplicative system generated by the linear forms kappa_a and
/// kappa_a +- kappa_b. Stored as num / prod(factor^mult) with every
/// denominator factor a monic homogeneous linear form and num coprime to
/// the denominator, which makes the representation canonical: two elements
/// are equal exactly when their stored parts are equal.
struct RatFn {
    Poly num;
    std::map<Poly, int> den;  // monic linear factor -> multiplicity >= 1

    RatFn() = default;  // zero in the 0-variable ring
    explicit RatFn(Poly f) : num(std::move(f)) {}
    RatFn(Poly n, std::map<Poly, int> d);  // normalizes and reduces

    static RatFn constant(const Scalar& c, int nvars);
    static RatFn zero(int nvars) { return RatFn(Poly(nvars)); }

    int nvars() const { return num.nvars; }
    bool is_zero() const { return num.is_zero(); }
    bool is_polynomial() const { return den.empty(); }
    const Poly& as_poly() const;  // requires is_polynomial()

    RatFn operator-() const;
    RatFn operator+(const RatFn& o) const;
    RatFn operator-(const RatFn& o) const;
    RatFn operator*(const RatFn& o) const;
    RatFn operator*(const Scalar& c) const;
    RatFn& operator+=(const RatFn& o) { return *this = *this + o; }
    bool operator==(const RatFn& o) const { return num == o.num && den == o.den; }
    bool operator!=(const RatFn& o) const { return !(*this == o); }

    /// Multiplicative inverse. The numerator must factor (up to a scalar)
    /// into forms from the multiplicative system; anything else throws,
    /// which in practice flags a computation that left the localization.
    RatFn inverse() const;

    /// Graded degree (kappa has degree 2) when numerator is homogeneous.
    std::optional<int> graded_degree() const;

    std::string to_string() const;

  private:
    void reduce();
};

/// Signed substitution action extended to the localization.
RatFn weyl_act(const SPerm& w, const RatFn& f);

}  // namespace klrd
