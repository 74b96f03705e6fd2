#include "klrd/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrd {

int Mono::total() const {
    int s = 0;
    for (int x : e) s += x;
    return s;
}

bool Mono::operator<(const Mono& o) const {
    int ta = total(), tb = o.total();
    if (ta != tb) return ta < tb;
    return e < o.e;  // lex on exponent vectors breaks degree ties
}

Mono Mono::operator*(const Mono& o) const {
    Mono r(*this);
    for (size_t l = 0; l < e.size(); ++l) r.e[l] += o.e[l];
    return r;
}

bool Mono::divides(const Mono& o) const {
    for (size_t l = 0; l < e.size(); ++l)
        if (e[l] > o.e[l]) return false;
    return true;
}

Mono Mono::divided_by(const Mono& o) const {
    Mono r(*this);
    for (size_t l = 0; l < e.size(); ++l) {
        r.e[l] -= o.e[l];
        if (r.e[l] < 0) throw std::domain_error("Mono: negative exponent in quotient");
    }
    return r;
}

Poly Poly::constant(const Scalar& c, int nvars) {
    Poly f(nvars);
    if (!c.is_zero()) f.t.emplace(Mono(nvars), c);
    return f;
}

Poly Poly::kappa(int l, int nvars) {
    if (l < 1 || l > nvars) throw std::domain_error("Poly::kappa: variable index out of range");
    Poly f(nvars);
    Mono m(nvars);
    m.e[static_cast<size_t>(l - 1)] = 1;
    f.t.emplace(m, Scalar(1));
    return f;
}

Poly Poly::kappa_pos(int q, int nvars) {
    if (q >= 1) return kappa(q, nvars);
    return -kappa(1 - q, nvars);
}

bool Poly::is_constant() const {
    return t.empty() || (t.size() == 1 && t.begin()->first.total() == 0);
}

Scalar Poly::constant_value() const {
    if (t.empty()) return Scalar(0);
    if (!is_constant()) throw std::domain_error("Poly: not a constant");
    return t.begin()->second;
}

Poly Poly::operator-() const {
    Poly r(nvars);
    for (const auto& [m, c] : t) r.t.emplace(m, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (nvars != o.nvars) throw std::domain_error("Poly: mixed variable counts");
    Poly r(*this);
    for (const auto& [m, c] : o.t) {
        auto it = r.t.find(m);
        if (it == r.t.end()) {
            r.t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.t.erase(it);
        }
    }
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (nvars != o.nvars) throw std::domain_error("Poly: mixed variable counts");
    Poly r(nvars);
    for (const auto& [ma, ca] : t)
        for (const auto& [mb, cb] : o.t) {
            Mono m = ma * mb;
            Scalar c = ca * cb;
            auto it = r.t.find(m);
            if (it == r.t.end()) {
                r.t.emplace(std::move(m), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.t.erase(it);
            }
        }
    return r;
}

Poly Poly::operator*(const Scalar& c) const {
    Poly r(nvars);
    if (c.is_zero()) return r;
    for (const auto& [m, a] : t) r.t.emplace(m, a * c);
    return r;
}

bool Poly::operator<(const Poly& o) const {
    if (nvars != o.nvars) return nvars < o.nvars;
    return t < o.t;
}

const Scalar& Poly::lead_coeff() const {
    if (t.empty()) throw std::domain_error("Poly: lead of zero");
    return t.rbegin()->second;
}

const Mono& Poly::lead_mono() const {
    if (t.empty()) throw std::domain_error("Poly: lead of zero");
    return t.rbegin()->first;
}

std::optional<int> Poly::graded_degree() const {
    if (t.empty()) return 0;
    int d = t.begin()->first.total();
    for (const auto& [m, c] : t)
        if (m.total() != d) return std::nullopt;
    return 2 * d;
}

std::string Poly::to_string() const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "(" << it->second.to_string() << ")";
        for (size_t l = 0; l < it->first.e.size(); ++l)
            if (it->first.e[l] != 0) {
                os << "*k" << (l + 1);
                if (it->first.e[l] != 1) os << "^" << it->first.e[l];
            }
    }
    return os.str();
}

std::optional<Poly> exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero");
    if (a.nvars != b.nvars) throw std::domain_error("exact_div: mixed variable counts");
    Poly rem = a;
    Poly q(a.nvars);
    const Mono& lb = b.lead_mono();
    const Scalar& cb = b.lead_coeff();
    while (!rem.is_zero()) {
        const Mono& lr = rem.lead_mono();
        if (!lb.divides(lr)) return std::nullopt;
        Mono qm = lr.divided_by(lb);
        Scalar qc = rem.lead_coeff() / cb;
        Poly step(a.nvars);
        step.t.emplace(std::move(qm), std::move(qc));
        q = q + step;
        rem = rem - step * b;
    }
    return q;
}

Poly weyl_act(const SPerm& w, const Poly& f) {
    if (w.rank() != f.nvars) throw std::domain_error("weyl_act: rank mismatch");
    Poly r(f.nvars);
    for (const auto& [m, c] : f.t) {
        Mono img(f.nvars);
        int sign_flips = 0;
        for (int l = 1; l <= f.nvars; ++l) {
            int x = m.e[static_cast<size_t>(l - 1)];
            if (x == 0) continue;
            int q = w.act_pos(l);
            int var = q >= 1 ? q : 1 - q;
            if (q < 1 && x % 2 != 0) sign_flips ^= 1;
            img.e[static_cast<size_t>(var - 1)] += x;
        }
        Scalar cc = sign_flips ? -c : c;
        auto it = r.t.find(img);
        if (it == r.t.end()) {
            r.t.emplace(std::move(img), std::move(cc));
        } else {
            it->second += cc;
            if (it->second.is_zero()) r.t.erase(it);
        }
    }
    return r;
}

Poly divided_difference(int k, const Poly& f) {
    int m = f.nvars;
    if (k < 0 || k >= m || (k == 0 && m < 2))
        throw std::domain_error("divided_difference: bad index");
    SPerm s = SPerm::gen_s(k, m);
    Poly num = weyl_act(s, f) - f;
    Poly div = k == 0 ? -Poly::kappa(1, m) - Poly::kappa(2, m)
                      : Poly::kappa(k, m) - Poly::kappa(k + 1, m);
    auto q = exact_div(num, div);
    if (!q) throw std::domain_error("divided_difference: non-exact quotient");
    return *q;
}

bool is_D_invariant(const Poly& f) {
    int m = f.nvars;
    if (m <= 1) return true;
    for (int k = 0; k < m; ++k)
        if (weyl_act(SPerm::gen_s(k, m), f) != f) return false;
    return true;
}

Poly symmetrize_D(const Poly& f) {
    int m = f.nvars;
    const WeylTable& tab = WeylTable::get(m, WeylTable::Kind::TypeD);
    Poly r(m);
    for (const SPerm& w : tab.elements()) r += weyl_act(w, f);
    return r;
}

Poly q_polynomial(const Vertex& i, const Vertex& j, const Poly& u, const Poly& v) {
    if (u.nvars != v.nvars) throw std::domain_error("q_polynomial: mixed variable counts");
    int nv = u.nvars;
    if (i == j) return Poly(nv);
    Poly r = Poly::constant(Scalar(arrow_count(i, j) % 2 ? -1 : 1), nv);
    Poly diff = u - v;
    int pw = -cartan_product(i, j);
    for (int a = 0; a < pw; ++a) r = r * diff;
    return r;
}

}  // namespace klrd
