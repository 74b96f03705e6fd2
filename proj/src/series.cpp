#include "klrd/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrd {

void Series::normalize() {
    size_t front = 0;
    while (front < c.size() && c[front] == 0) ++front;
    if (front > 0) {
        c.erase(c.begin(), c.begin() + static_cast<long>(front));
        lo += static_cast<int>(front);
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    if (c.empty()) lo = 0;
    // Drop stored coefficients beyond the known window.
    if (trunc != kExact && !c.empty()) {
        long long last = static_cast<long long>(lo) + static_cast<long long>(c.size()) - 1;
        if (last > trunc) {
            long long keep = trunc - lo + 1;
            if (keep <= 0) {
                c.clear();
            } else {
                c.resize(static_cast<size_t>(keep));
            }
            while (!c.empty() && c.back() == 0) c.pop_back();
            if (c.empty()) lo = 0;
        }
    }
}

Series Series::constant(long long a) { return monomial(0, a); }

Series Series::monomial(int d, long long a) {
    Series s;
    if (a != 0) {
        s.lo = d;
        s.c = {a};
    }
    return s;
}

Series Series::one_minus_v2_pow(int m) {
    Series s = constant(1);
    Series f;
    f.lo = 0;
    f.c = {1, 0, -1};  // 1 - v^2
    for (int t = 0; t < m; ++t) s = s * f;
    return s;
}

Series Series::free_block(int m, long long N) {
    // (1 - v^2)^(-m) = sum_t C(t+m-1, m-1) v^(2t), exact through N.
    Series s;
    s.trunc = N;
    if (m == 0) return constant(1).truncated(N);
    if (N < 0) return s;
    s.lo = 0;
    s.c.assign(static_cast<size_t>(N) + 1, 0);
    long long binom = 1;  // C(m-1, m-1)
    for (long long t = 0; 2 * t <= N; ++t) {
        s.c[static_cast<size_t>(2 * t)] = binom;
        binom = binom * (t + m) / (t + 1);  // C(t+m, m-1) from C(t+m-1, m-1)
    }
    s.normalize();
    return s;
}

long long Series::coeff(long long d) const {
    if (d > trunc) throw std::domain_error("Series: coefficient beyond known window");
    if (d < lo || d >= lo + static_cast<long long>(c.size())) return 0;
    return c[static_cast<size_t>(d - lo)];
}

long long Series::min_exp() const {
    if (!c.empty()) return lo;
    return trunc == kExact ? kExact : trunc + 1;
}

Series Series::operator+(const Series& o) const {
    Series r;
    r.trunc = std::min(trunc, o.trunc);
    if (c.empty() && o.c.empty()) return r;
    long long nlo = std::min(c.empty() ? o.lo : lo, o.c.empty() ? lo : o.lo);
    long long nhi = std::max(static_cast<long long>(lo) + static_cast<long long>(c.size()),
                             static_cast<long long>(o.lo) + static_cast<long long>(o.c.size())) - 1;
    nhi = std::min(nhi, r.trunc);
    if (nhi < nlo) return r;
    r.lo = static_cast<int>(nlo);
    r.c.assign(static_cast<size_t>(nhi - nlo + 1), 0);
    auto fold = [&](const Series& s) {
        for (size_t t = 0; t < s.c.size(); ++t) {
            long long d = static_cast<long long>(s.lo) + static_cast<long long>(t);
            if (d >= nlo && d <= nhi) r.c[static_cast<size_t>(d - nlo)] += s.c[t];
        }
    };
    fold(*this);
    fold(o);
    r.normalize();
    return r;
}

Series Series::operator-(const Series& o) const { return *this + o * (-1); }

Series Series::operator*(const Series& o) const {
    Series r;
    // Coefficients of the product are known through min(a.trunc + b.min_exp,
    // b.trunc + a.min_exp): the unknown tail of one factor first matters there.
    long long ta = trunc == kExact ? kExact : trunc + o.min_exp();
    long long tb = o.trunc == kExact ? kExact : o.trunc + min_exp();
    r.trunc = std::min({ta, tb, kExact});
    if (c.empty() || o.c.empty()) return r;
    long long nlo = static_cast<long long>(lo) + static_cast<long long>(o.lo);
    long long nhi = nlo + static_cast<long long>(c.size()) + static_cast<long long>(o.c.size()) - 2;
    nhi = std::min(nhi, r.trunc);
    if (nhi < nlo) return r;
    r.lo = static_cast<int>(nlo);
    r.c.assign(static_cast<size_t>(nhi - nlo + 1), 0);
    for (size_t s = 0; s < c.size(); ++s) {
        if (c[s] == 0) continue;
        for (size_t t = 0; t < o.c.size(); ++t) {
            long long d = nlo + static_cast<long long>(s) + static_cast<long long>(t);
            if (d > nhi) break;
            r.c[static_cast<size_t>(d - nlo)] += c[s] * o.c[t];
        }
    }
    r.normalize();
    return r;
}

Series Series::operator*(long long a) const {
    Series r(*this);
    if (a == 0) {
        r.c.clear();
        r.lo = 0;
        return r;
    }
    for (auto& x : r.c) x *= a;
    return r;
}

Series Series::shifted(int d) const {
    Series r(*this);
    r.lo += d;
    if (r.trunc != kExact) r.trunc += d;
    if (r.c.empty()) r.lo = 0;
    return r;
}

Series Series::truncated(long long N) const {
    Series r(*this);
    r.trunc = std::min(r.trunc, N);
    r.normalize();
    return r;
}

bool Series::matches(const Series& o, long long through) const {
    long long window = std::min(trunc, o.trunc);
    if (window < through) return false;
    long long start = std::min(min_exp(), o.min_exp());
    if (start > through) return true;  // both zero through the window
    for (long long d = start; d <= through; ++d)
        if (coeff(d) != o.coeff(d)) return false;
    return true;
}

std::string Series::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t t = 0; t < c.size(); ++t) {
        if (c[t] == 0) continue;
        long long d = static_cast<long long>(lo) + static_cast<long long>(t);
        if (!first) os << (c[t] > 0 ? "+" : "");
        first = false;
        if (d == 0) {
            os << c[t];
        } else {
            if (c[t] == -1) {
                os << "-";
            } else if (c[t] != 1) {
                os << c[t] << "*";
            }
            os << "v^" << d;
        }
    }
    if (first) os << "0";
    if (trunc != kExact) os << "+O(v^" << (trunc + 1) << ")";
    return os.str();
}

}  // namespace klrd
