#include "klrd/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace klrd {

ZPoly::ZPoly(BigInt constant) {
    if (constant != 0) c.push_back(std::move(constant));
}

ZPoly ZPoly::monomial(int k, BigInt coeff) {
    if (k < 0) throw std::invalid_argument("ZPoly::monomial: negative exponent");
    ZPoly r;
    if (coeff != 0) {
        r.c.assign(static_cast<size_t>(k) + 1, BigInt(0));
        r.c.back() = std::move(coeff);
    }
    return r;
}

const BigInt& ZPoly::lead() const {
    if (is_zero()) throw std::domain_error("ZPoly::lead of zero");
    return c.back();
}

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

ZPoly ZPoly::operator+(const ZPoly& o) const {
    ZPoly r = *this;
    if (o.c.size() > r.c.size()) r.c.resize(o.c.size(), BigInt(0));
    for (size_t k = 0; k < o.c.size(); ++k) r.c[k] += o.c[k];
    r.trim();
    return r;
}

ZPoly ZPoly::operator-(const ZPoly& o) const { return *this + (-o); }

ZPoly ZPoly::operator*(const ZPoly& o) const {
    if (is_zero() || o.is_zero()) return ZPoly();
    ZPoly r;
    r.c.assign(c.size() + o.c.size() - 1, BigInt(0));
    for (size_t a = 0; a < c.size(); ++a) {
        if (c[a] == 0) continue;
        for (size_t b = 0; b < o.c.size(); ++b)
            if (o.c[b] != 0) r.c[a + b] += c[a] * o.c[b];
    }
    r.trim();
    return r;
}

bool ZPoly::operator<(const ZPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t k = c.size(); k-- > 0;)
        if (c[k] != o.c[k]) return c[k] < o.c[k];
    return false;
}

BigInt ZPoly::content() const {
    BigInt g = 0;
    for (const auto& x : c) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::divided_by_int(const BigInt& d) const {
    if (d == 0) throw std::domain_error("ZPoly::divided_by_int by zero");
    ZPoly r = *this;
    for (auto& x : r.c) {
        if (x % d != 0) throw std::domain_error("ZPoly::divided_by_int not exact");
        x /= d;
    }
    return r;
}

namespace {

// Primitive part with positive leading coefficient.
ZPoly primitive(const ZPoly& a) {
    if (a.is_zero()) return a;
    BigInt ct = a.content();
    if (a.lead() < 0) ct = -ct;
    return a.divided_by_int(ct);
}

// Pseudo-remainder of a by b: lead(b)^(deg a - deg b + 1) * a  mod  b.
ZPoly prem(ZPoly a, const ZPoly& b) {
    int db = b.deg();
    while (!a.is_zero() && a.deg() >= db) {
        int shift = a.deg() - db;
        BigInt q = a.lead();
        for (auto& x : a.c) x *= b.lead();
        for (int k = 0; k <= db; ++k) a.c[static_cast<size_t>(k) + shift] -= q * b.c[k];
        a.trim();
    }
    return a;
}

}  // namespace

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : (b.lead() > 0 ? b : -b);
    if (b.is_zero()) return a.lead() > 0 ? a : -a;
    BigInt cg = boost::multiprecision::gcd(a.content(), b.content());
    a = primitive(a);
    b = primitive(b);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = primitive(prem(a, b));
        a = b;
        b = r;
    }
    return primitive(a) * ZPoly(cg);
}

ZPoly ZPoly::exact_div(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw std::domain_error("ZPoly::exact_div by zero");
    if (a.is_zero()) return ZPoly();
    if (a.deg() < b.deg()) throw std::domain_error("ZPoly::exact_div not divisible");
    ZPoly rem = a, q;
    q.c.assign(static_cast<size_t>(a.deg() - b.deg()) + 1, BigInt(0));
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        if (rem.lead() % b.lead() != 0) throw std::domain_error("ZPoly::exact_div not divisible");
        BigInt qc = rem.lead() / b.lead();
        int shift = rem.deg() - b.deg();
        q.c[shift] = qc;
        for (int k = 0; k <= b.deg(); ++k) rem.c[static_cast<size_t>(k) + shift] -= qc * b.c[k];
        rem.trim();
    }
    if (!rem.is_zero()) throw std::domain_error("ZPoly::exact_div not divisible");
    q.trim();
    return q;
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        BigInt v = c[k];
        if (out.empty()) {
            if (v < 0) out += "-", v = -v;
        } else {
            out += (v < 0) ? "-" : "+";
            if (v < 0) v = -v;
        }
        out += v.str() + "*p^" + std::to_string(k);
    }
    return out;
}

Scalar::Scalar(ZPoly n, ZPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num.is_zero()) {
        den = ZPoly(BigInt(1));
        return;
    }
    ZPoly g = ZPoly::gcd(num, den);
    num = ZPoly::exact_div(num, g);
    den = ZPoly::exact_div(den, g);
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
}

Scalar Scalar::p_power(int k) {
    if (k >= 0) return Scalar(ZPoly::monomial(k), ZPoly(BigInt(1)));
    return Scalar(ZPoly(BigInt(1)), ZPoly::monomial(-k));
}

bool Scalar::is_one() const {
    return num.deg() == 0 && num.c[0] == 1 && den.deg() == 0 && den.c[0] == 1;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num = -r.num;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
    return Scalar(num * o.den + o.num * den, den * o.den);
}

Scalar Scalar::operator-(const Scalar& o) const {
    return Scalar(num * o.den - o.num * den, den * o.den);
}

Scalar Scalar::operator*(const Scalar& o) const {
    return Scalar(num * o.num, den * o.den);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar::inverse of zero");
    return Scalar(den, num);
}

bool Scalar::operator<(const Scalar& o) const {
    if (!(num == o.num)) return num < o.num;
    return den < o.den;
}

std::string Scalar::to_string() const {
    std::string out = num.to_string();
    if (!(den.deg() == 0 && den.c[0] == 1)) out += "/" + den.to_string();
    return out;
}

namespace {

// Parses a sparse sum of c*p^k terms ("2*p^3-1*p^1", "-3", "0").
ZPoly parse_zpoly(const std::string& s, size_t lo, size_t hi) {
    ZPoly out;
    size_t pos = lo;
    if (pos >= hi) throw std::invalid_argument("Scalar::parse: empty polynomial");
    while (pos < hi) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = (s[pos] == '-') ? -1 : 1;
            ++pos;
        }
        size_t start = pos;
        while (pos < hi && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("Scalar::parse: expected coefficient");
        BigInt coeff(s.substr(start, pos - start));
        coeff *= sign;
        int expo = 0;
        if (pos < hi && s[pos] == '*') {
            if (pos + 2 >= hi || s[pos + 1] != 'p' || s[pos + 2] != '^')
                throw std::invalid_argument("Scalar::parse: expected p^k");
            pos += 3;
            start = pos;
            while (pos < hi && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("Scalar::parse: expected exponent");
            expo = std::stoi(s.substr(start, pos - start));
        }
        out = out + ZPoly::monomial(expo, coeff);
    }
    return out;
}

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos)
        return Scalar(parse_zpoly(text, 0, text.size()), ZPoly(BigInt(1)));
    return Scalar(parse_zpoly(text, 0, slash), parse_zpoly(text, slash + 1, text.size()));
}

}  // namespace klrd
