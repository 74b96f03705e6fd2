#include "klrd/vertex.hpp"

#include <cstdlib>
#include <stdexcept>

namespace klrd {

Vertex::Vertex(int s, int e) : sign(s), exp(e) {
    if (s != 1 && s != -1) throw std::invalid_argument("Vertex: sign must be +1 or -1");
    if (e % 2 == 0) throw std::invalid_argument("Vertex: exponent must be odd");
}

Scalar Vertex::as_scalar() const {
    Scalar v = Scalar::p_power(exp);
    return sign == 1 ? v : -v;
}

bool Vertex::operator<(const Vertex& o) const {
    if (sign != o.sign) return sign > o.sign;  // +1 before -1
    int a = std::abs(exp), b = std::abs(o.exp);
    if (a != b) return a < b;
    return exp > o.exp;  // positive exponent before negative
}

std::string Vertex::to_string() const {
    return std::string(sign == 1 ? "+" : "-") + "p^" + std::to_string(exp);
}

Vertex Vertex::parse(const std::string& text) {
    if (text.size() < 4 || (text[0] != '+' && text[0] != '-') || text[1] != 'p' || text[2] != '^')
        throw std::invalid_argument("Vertex::parse: expected [+|-]p^<odd-int>: " + text);
    int e = std::stoi(text.substr(3));
    return Vertex(text[0] == '+' ? 1 : -1, e);
}

int arrow_count(const Vertex& i, const Vertex& j) {
    return (i == j.times_p2()) ? 1 : 0;
}

int cartan_product(const Vertex& i, const Vertex& j) {
    if (i == j) return 2;
    return -arrow_count(i, j) - arrow_count(j, i);
}

}  // namespace klrd
