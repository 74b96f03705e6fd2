#pragma once

#include "klrd/scalar.hpp"

#include <string>

namespace klrd {

/// Quiver vertex: a label of the form sign * p^exp with exp odd.
/// The involution theta sends a vertex to its inverse (exp -> -exp), so no
/// vertex is theta-fixed and the labels +1/-1 never occur.
struct Vertex {
    int sign;  // +1 or -1
    int exp;   // odd (may be negative)

    Vertex(int s, int e);

    Vertex theta() const { return Vertex(sign, -exp); }
    Vertex times_p2() const { return Vertex(sign, exp + 2); }

    Scalar as_scalar() const;  // the value sign * p^exp in Q(p)

    bool operator==(const Vertex& o) const { return sign == o.sign && exp == o.exp; }
    bool operator!=(const Vertex& o) const { return !(*this == o); }
    /// Fixed artifact total order: sign (+ before -), then |exp| ascending,
    /// positive exponent before negative. Pins orbit tie-breaks and listings.
    bool operator<(const Vertex& o) const;

    std::string to_string() const;  // "[+|-]p^<odd>"
    static Vertex parse(const std::string& text);
};

/// Number of quiver arrows i -> j: one when i = p^2 * j, else zero.
int arrow_count(const Vertex& i, const Vertex& j);

/// Symmetrized Cartan pairing: i.i = 2, and i.j = -(arrows i->j) - (arrows j->i).
int cartan_product(const Vertex& i, const Vertex& j);

}  // namespace klrd
