#include "klrd/ratfn.hpp"

#include <sstream>
#include <stdexcept>

namespace klrd {

namespace {

// Multiply a scalar power into a polynomial: f * c^k.
Poly scaled(const Poly& f, const Scalar& c, int k) {
    Scalar pw(1);
    for (int t = 0; t < k; ++t) pw *= c;
    return f * pw;
}

// The allowed denominator forms in n variables: kappa_a and kappa_a +- kappa_b
// for a < b. All are monic under the graded-lex order.
std::vector<Poly> system_forms(int nvars) {
    std::vector<Poly> forms;
    for (int a = 1; a <= nvars; ++a) forms.push_back(Poly::kappa(a, nvars));
    for (int a = 1; a <= nvars; ++a)
        for (int b = a + 1; b <= nvars; ++b) {
            forms.push_back(Poly::kappa(a, nvars) - Poly::kappa(b, nvars));
            forms.push_back(Poly::kappa(a, nvars) + Poly::kappa(b, nvars));
        }
    return forms;
}

}  // namespace

RatFn::RatFn(Poly n, std::map<Poly, int> d) : num(std::move(n)) {
    for (auto& [f, k] : d) {
        if (k <= 0) throw std::domain_error("RatFn: nonpositive multiplicity");
        if (f.is_zero()) throw std::domain_error("RatFn: division by zero");
        if (f.is_constant()) {
            num = scaled(num, f.constant_value().inverse(), k);
            continue;
        }
        if (f.graded_degree() != std::optional<int>(2))
            throw std::domain_error("RatFn: denominator factor is not linear homogeneous");
        const Scalar& c = f.lead_coeff();
        if (c.is_one()) {
            den[f] += k;
        } else {
            num = scaled(num, c.inverse(), k);
            den[f * c.inverse()] += k;
        }
    }
    reduce();
}

void RatFn::reduce() {
    if (num.is_zero()) {
        den.clear();
        return;
    }
    for (auto it = den.begin(); it != den.end();) {
        while (it->second > 0) {
            auto q = exact_div(num, it->first);
            if (!q) break;
            num = std::move(*q);
            --it->second;
        }
        if (it->second == 0) {
            it = den.erase(it);
        } else {
            ++it;
        }
    }
    if (num.is_zero()) den.clear();
}

RatFn RatFn::constant(const Scalar& c, int nvars) {
    return RatFn(Poly::constant(c, nvars));
}

const Poly& RatFn::as_poly() const {
    if (!den.empty()) throw std::domain_error("RatFn: not a polynomial");
    return num;
}

RatFn RatFn::operator-() const {
    RatFn r(*this);
    r.num = -r.num;
    return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::map<Poly, int> common = den;
    for (const auto& [f, k] : o.den) {
        auto it = common.find(f);
        if (it == common.end()) {
            common.emplace(f, k);
        } else {
            it->second = std::max(it->second, k);
        }
    }
    Poly a = num, b = o.num;
    for (const auto& [f, k] : common) {
        auto ita = den.find(f);
        auto itb = o.den.find(f);
        int ka = ita == den.end() ? 0 : ita->second;
        int kb = itb == o.den.end() ? 0 : itb->second;
        for (int t = ka; t < k; ++t) a = a * f;
        for (int t = kb; t < k; ++t) b = b * f;
    }
    return RatFn(a + b, std::move(common));
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    std::map<Poly, int> d = den;
    for (const auto& [f, k] : o.den) d[f] += k;
    return RatFn(num * o.num, std::move(d));
}

RatFn RatFn::operator*(const Scalar& c) const {
    if (c.is_zero()) return zero(nvars());
    RatFn r(*this);
    r.num = r.num * c;
    return r;
}

RatFn RatFn::inverse() const {
    if (is_zero()) throw std::domain_error("RatFn: inverse of zero");
    Poly n = Poly::constant(Scalar(1), nvars());
    for (const auto& [f, k] : den)
        for (int t = 0; t < k; ++t) n = n * f;
    std::map<Poly, int> d;
    Poly rem = num;
    for (const auto& f : system_forms(nvars())) {
        while (true) {
            auto q = exact_div(rem, f);
            if (!q) break;
            rem = std::move(*q);
            ++d[f];
        }
        if (rem.is_constant()) break;
    }
    if (!rem.is_constant())
        throw std::domain_error("RatFn: numerator is not invertible in the localization: " +
                                num.to_string());
    return RatFn(n * rem.constant_value().inverse(), std::move(d));
}

std::optional<int> RatFn::graded_degree() const {
    auto d = num.graded_degree();
    if (!d) return std::nullopt;
    int drop = 0;
    for (const auto& [f, k] : den) drop += 2 * k;
    return *d - drop;
}

std::string RatFn::to_string() const {
    if (den.empty()) return num.to_string();
    std::ostringstream os;
    os << "(" << num.to_string() << ") / (";
    bool first = true;
    for (const auto& [f, k] : den) {
        if (!first) os << " * ";
        first = false;
        os << "(" << f.to_string() << ")";
        if (k != 1) os << "^" << k;
    }
    os << ")";
    return os.str();
}

RatFn weyl_act(const SPerm& w, const RatFn& f) {
    Poly n = weyl_act(w, f.num);
    std::map<Poly, int> d;
    for (const auto& [g, k] : f.den) d[weyl_act(w, g)] += k;
    return RatFn(std::move(n), std::move(d));
}

}  // namespace klrd
