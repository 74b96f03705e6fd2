#include "klrd/sequence.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace klrd {

DimVec::DimVec(std::map<Vertex, int> m) : mult(std::move(m)) {
    for (auto it = mult.begin(); it != mult.end();) {
        if (it->second == 0) {
            it = mult.erase(it);
            continue;
        }
        if (it->second < 0) throw std::invalid_argument("DimVec: negative multiplicity");
        ++it;
    }
    for (const auto& [v, n] : mult) {
        auto jt = mult.find(v.theta());
        if (jt == mult.end() || jt->second != n)
            throw std::invalid_argument("DimVec: not theta-symmetric at " + v.to_string());
    }
}

void DimVec::add_pair(const Vertex& i, int n) {
    if (n <= 0) throw std::invalid_argument("DimVec::add_pair: n must be positive");
    mult[i] += n;
    mult[i.theta()] += n;
}

int DimVec::total() const {
    int t = 0;
    for (const auto& [v, n] : mult) t += n;
    return t;
}

int DimVec::count(const Vertex& i) const {
    auto it = mult.find(i);
    return it == mult.end() ? 0 : it->second;
}

std::string DimVec::to_string() const {
    std::string out = "{";
    for (const auto& [v, n] : mult) {
        if (out.size() > 1) out += ",";
        out += v.to_string() + ":" + std::to_string(n);
    }
    return out + "}";
}

Vertex ThetaSeq::at(int l) const {
    int m = rank();
    if (l >= 1 && l <= m) return right[static_cast<size_t>(l) - 1];
    if (l <= 0 && l >= 1 - m) return right[static_cast<size_t>(-l)].theta();  // theta(i_{1-l})
    throw std::out_of_range("ThetaSeq::at: position out of range");
}

std::vector<Vertex> ThetaSeq::full() const {
    std::vector<Vertex> out;
    int m = rank();
    out.reserve(2 * static_cast<size_t>(m));
    for (int l = 1 - m; l <= m; ++l) out.push_back(at(l));
    return out;
}

DimVec ThetaSeq::dimvec() const {
    DimVec nu;
    for (const auto& v : right) nu.add_pair(v);
    return nu;
}

bool ThetaSeq::operator<(const ThetaSeq& o) const {
    return std::lexicographical_compare(right.begin(), right.end(), o.right.begin(),
                                        o.right.end());
}

std::string ThetaSeq::to_string() const {
    std::string out = "(";
    auto f = full();
    for (size_t k = 0; k < f.size(); ++k) {
        if (k) out += ",";
        out += f[k].to_string();
    }
    return out + ")";
}

ThetaSeq seq_apply_s(int k, const ThetaSeq& seq) {
    int m = seq.rank();
    if (k < 0 || k > m - 1) throw std::invalid_argument("seq_apply_s: k out of range");
    ThetaSeq out = seq;
    if (k == 0) {
        if (m < 2) throw std::invalid_argument("seq_apply_s: s_0 needs m >= 2");
        out.right[0] = seq.right[1].theta();
        out.right[1] = seq.right[0].theta();
    } else {
        std::swap(out.right[static_cast<size_t>(k) - 1], out.right[static_cast<size_t>(k)]);
    }
    return out;
}

namespace {

void enumerate_halves(std::map<Vertex, int>& remaining, int slots, std::vector<Vertex>& acc,
                      std::vector<ThetaSeq>& out) {
    if (slots == 0) {
        out.emplace_back(acc);
        return;
    }
    // Candidates iterated in the fixed vertex order keeps the listing lex-sorted.
    for (auto& [v, n] : remaining) {
        if (n <= 0) continue;
        auto th = remaining.find(v.theta());
        if (th == remaining.end() || th->second <= 0) continue;
        if (v == th->first && n < 2) continue;  // never happens: v != theta(v)
        n -= 1;
        th->second -= 1;
        acc.push_back(v);
        enumerate_halves(remaining, slots - 1, acc, out);
        acc.pop_back();
        n += 1;
        th->second += 1;
    }
}

}  // namespace

std::vector<ThetaSeq> sequences_of(const DimVec& nu) {
    std::map<Vertex, int> remaining = nu.mult;
    std::vector<ThetaSeq> out;
    std::vector<Vertex> acc;
    enumerate_halves(remaining, nu.rank(), acc, out);
    return out;
}

bool OrbitSplit::is_plus(const ThetaSeq& s) const {
    return std::binary_search(plus.begin(), plus.end(), s);
}

OrbitSplit orbit_split(const DimVec& nu) {
    int m = nu.rank();
    if (m < 1) throw std::invalid_argument("orbit_split: needs m >= 1");
    auto all = sequences_of(nu);
    if (m == 1) {
        // Singleton orbits; the minimal sequence is listed first.
        OrbitSplit split;
        split.plus.push_back(all[0]);
        split.minus.push_back(all[1]);
        return split;
    }
    std::set<ThetaSeq> seen;
    std::vector<std::vector<ThetaSeq>> orbits;
    for (const auto& start : all) {
        if (seen.count(start)) continue;
        std::vector<ThetaSeq> orbit{start};
        seen.insert(start);
        for (size_t head = 0; head < orbit.size(); ++head) {
            ThetaSeq cur = orbit[head];
            for (int k = 0; k <= m - 1; ++k) {
                ThetaSeq next = seq_apply_s(k, cur);
                if (seen.insert(next).second) orbit.push_back(next);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        orbits.push_back(std::move(orbit));
    }
    if (orbits.size() != 2)
        throw std::domain_error("orbit_split: expected exactly two orbit families, found " +
                                std::to_string(orbits.size()));
    OrbitSplit split;
    // "plus" holds the global lex-minimal sequence; the enumeration order of
    // sequences_of makes that orbits.front()'s first element.
    bool first_is_plus = orbits[0][0] < orbits[1][0];
    split.plus = first_is_plus ? orbits[0] : orbits[1];
    split.minus = first_is_plus ? orbits[1] : orbits[0];
    return split;
}

}  // namespace klrd
