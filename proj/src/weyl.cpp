#include "klrd/weyl.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace klrd {

namespace {

int decode_pos(int image) { return image > 0 ? image : 1 + image; }  // -k <-> position 1-k

}  // namespace

SPerm::SPerm(std::vector<int> images) : img(std::move(images)) {
    int m = rank();
    std::vector<bool> seen(static_cast<size_t>(m), false);
    for (int v : img) {
        int a = std::abs(v);
        if (a < 1 || a > m || seen[static_cast<size_t>(a) - 1])
            throw std::invalid_argument("SPerm: invalid image list");
        seen[static_cast<size_t>(a) - 1] = true;
    }
}

SPerm SPerm::identity(int m) {
    std::vector<int> v(static_cast<size_t>(m));
    for (int l = 1; l <= m; ++l) v[static_cast<size_t>(l) - 1] = l;
    return SPerm(std::move(v));
}

SPerm SPerm::gen_s(int k, int m) {
    if (k < 0 || k > m - 1) throw std::invalid_argument("SPerm::gen_s: k out of range");
    SPerm w = identity(m);
    if (k == 0) {
        if (m < 2) throw std::invalid_argument("SPerm::gen_s: s_0 needs m >= 2");
        w.img[0] = -2;
        w.img[1] = -1;
    } else {
        w.img[static_cast<size_t>(k) - 1] = k + 1;
        w.img[static_cast<size_t>(k)] = k;
    }
    return w;
}

SPerm SPerm::eps1(int m) {
    if (m < 1) throw std::domain_error("eps1: rank must be positive");
    SPerm w = identity(m);
    w.img[0] = -1;
    return w;
}

bool SPerm::is_identity() const {
    for (int l = 1; l <= rank(); ++l)
        if (img[static_cast<size_t>(l) - 1] != l) return false;
    return true;
}

bool SPerm::is_even() const {
    int negatives = 0;
    for (int v : img)
        if (v < 0) ++negatives;
    return negatives % 2 == 0;
}

int SPerm::act_pos(int l) const {
    int m = rank();
    if (l >= 1 && l <= m) return decode_pos(img[static_cast<size_t>(l) - 1]);
    if (l <= 0 && l >= 1 - m) return 1 - act_pos(1 - l);
    throw std::out_of_range("SPerm::act_pos: position out of range");
}

SPerm SPerm::operator*(const SPerm& o) const {
    if (rank() != o.rank()) throw std::invalid_argument("SPerm: rank mismatch");
    std::vector<int> v(img.size());
    for (int l = 1; l <= rank(); ++l) {
        int u = o.img[static_cast<size_t>(l) - 1];
        v[static_cast<size_t>(l) - 1] = u > 0 ? img[static_cast<size_t>(u) - 1]
                                              : -img[static_cast<size_t>(-u) - 1];
    }
    return SPerm(std::move(v));
}

SPerm SPerm::inverse() const {
    std::vector<int> v(img.size());
    for (int l = 1; l <= rank(); ++l) {
        int u = img[static_cast<size_t>(l) - 1];
        v[static_cast<size_t>(std::abs(u)) - 1] = u > 0 ? l : -l;
    }
    return SPerm(std::move(v));
}

ThetaSeq SPerm::act(const ThetaSeq& seq) const {
    if (seq.rank() != rank()) throw std::invalid_argument("SPerm::act: rank mismatch");
    SPerm winv = inverse();
    std::vector<Vertex> out;
    out.reserve(img.size());
    for (int l = 1; l <= rank(); ++l) out.push_back(seq.at(winv.act_pos(l)));
    return ThetaSeq(std::move(out));
}

std::string SPerm::to_string() const {
    std::string out = "[";
    for (size_t k = 0; k < img.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(img[k]);
    }
    return out + "]";
}

SPerm SPerm::parse(const std::string& text) {
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw std::invalid_argument("SPerm::parse: expected [..]");
    std::vector<int> v;
    std::stringstream ss(text.substr(1, text.size() - 2));
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) v.push_back(std::stoi(tok));
    return SPerm(std::move(v));
}

SPerm embed(const SPerm& w, int bigger_m) {
    if (bigger_m < w.rank()) throw std::invalid_argument("embed: rank must grow");
    std::vector<int> v = w.img;
    for (int l = w.rank() + 1; l <= bigger_m; ++l) v.push_back(l);
    return SPerm(std::move(v));
}

SPerm restrict_rank(const SPerm& w, int smaller_m) {
    for (int l = smaller_m + 1; l <= w.rank(); ++l)
        if (w.img[static_cast<size_t>(l) - 1] != l)
            throw std::invalid_argument("restrict_rank: position not fixed");
    std::vector<int> v(w.img.begin(), w.img.begin() + smaller_m);
    return SPerm(std::move(v));
}

WordStyle word_style_from_env() {
    const char* e = std::getenv("KLRD_WORD_TABLE");
    if (e == nullptr) return WordStyle::GreedyMin;
    std::string s(e);
    if (s.empty() || s == "greedy-min") return WordStyle::GreedyMin;
    if (s == "greedy-max") return WordStyle::GreedyMax;
    if (s == "nested") return WordStyle::Nested;
    throw std::invalid_argument("KLRD_WORD_TABLE: unknown strategy " + s);
}

std::string word_style_name(WordStyle style) {
    switch (style) {
        case WordStyle::GreedyMin: return "greedy-min";
        case WordStyle::GreedyMax: return "greedy-max";
        case WordStyle::Nested: return "nested";
    }
    return "?";
}

SPerm WeylTable::letter_perm(int letter, int m) {
    if (letter == -1) return SPerm::eps1(m);
    return SPerm::gen_s(letter, m);
}

WeylTable::WeylTable(int m, Kind kind) : m_(m), kind_(kind) {
    if (m < 1) throw std::invalid_argument("WeylTable: m >= 1");
    if (kind == Kind::TypeD) {
        for (int k = 0; k <= m - 1; ++k)
            if (m >= 2) letters_.push_back(k);
    } else {
        letters_.push_back(-1);
        for (int k = 1; k <= m - 1; ++k) letters_.push_back(k);
    }
    SPerm e = SPerm::identity(m);
    elems_.push_back(e);
    len_[e] = 0;
    for (size_t head = 0; head < elems_.size(); ++head) {
        SPerm cur = elems_[head];
        int d = len_.at(cur);
        for (int letter : letters_) {
            SPerm next = letter_perm(letter, m) * cur;
            if (len_.emplace(next, d + 1).second) elems_.push_back(next);
        }
    }
}

bool WeylTable::contains(const SPerm& w) const { return len_.count(w) > 0; }

int WeylTable::length(const SPerm& w) const {
    auto it = len_.find(w);
    if (it == len_.end()) throw std::invalid_argument("WeylTable::length: not a group element");
    return it->second;
}

std::vector<int> WeylTable::greedy_word(SPerm w, bool largest) const {
    std::vector<int> out;
    int cur = length(w);
    while (cur > 0) {
        int chosen = 0;
        bool found = false;
        auto consider = [&](int letter) {
            if (found) return;
            SPerm next = letter_perm(letter, m_) * w;
            if (len_.at(next) == cur - 1) {
                chosen = letter;
                found = true;
            }
        };
        if (!largest) {
            for (int letter : letters_) consider(letter);
        } else {
            for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) consider(*it);
        }
        if (!found) throw std::logic_error("WeylTable::greedy_word: no descent");
        out.push_back(chosen);
        w = letter_perm(chosen, m_) * w;
        --cur;
    }
    return out;
}

std::vector<int> WeylTable::nested_word(const SPerm& w) const {
    if (kind_ != Kind::TypeD)
        throw std::invalid_argument("WeylTable::nested_word: TypeD only");
    if (m_ == 1) return {};
    // Factor w = u * rep with u fixing position m and rep a minimal coset
    // representative; recurse on u one rank down.
    for (const SPerm& rep : coset_reps_D_m1(m_ - 1)) {
        SPerm u = w * rep.inverse();
        if (u.img[static_cast<size_t>(m_) - 1] != m_) continue;
        const WeylTable& lower = WeylTable::get(m_ - 1, Kind::TypeD);
        std::vector<int> out = lower.nested_word(restrict_rank(u, m_ - 1));
        const WeylTable& here = WeylTable::get(m_, Kind::TypeD);
        std::vector<int> suffix = here.greedy_word(rep, false);
        out.insert(out.end(), suffix.begin(), suffix.end());
        return out;
    }
    throw std::logic_error("WeylTable::nested_word: no coset factorization");
}

std::vector<int> WeylTable::word(const SPerm& w, WordStyle style) const {
    switch (style) {
        case WordStyle::GreedyMin: return greedy_word(w, false);
        case WordStyle::GreedyMax: return greedy_word(w, true);
        case WordStyle::Nested: return nested_word(w);
    }
    throw std::logic_error("WeylTable::word: bad style");
}

std::vector<std::vector<int>> WeylTable::all_reduced_words(const SPerm& w) const {
    if (length(w) == 0) return {{}};
    std::vector<std::vector<int>> out;
    for (int letter : letters_) {
        SPerm next = letter_perm(letter, m_) * w;
        if (len_.at(next) != length(w) - 1) continue;
        for (auto tail : all_reduced_words(next)) {
            tail.insert(tail.begin(), letter);
            out.push_back(std::move(tail));
        }
    }
    return out;
}

const WeylTable& WeylTable::get(int m, Kind kind) {
    static std::map<std::pair<int, int>, WeylTable> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(m, static_cast<int>(kind));
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, WeylTable(m, kind)).first;
    return it->second;
}

std::vector<SPerm> coset_reps_D_m1(int m) {
    if (m < 1) throw std::invalid_argument("coset_reps_D_m1: m >= 1");
    const WeylTable& big = WeylTable::get(m + 1, WeylTable::Kind::TypeD);
    const WeylTable& small = WeylTable::get(m, WeylTable::Kind::TypeD);
    std::map<SPerm, SPerm> best;  // canonical coset key -> current best rep
    for (const SPerm& x : big.elements()) {
        SPerm key = x;
        for (const SPerm& u : small.elements()) {
            SPerm ux = embed(u, m + 1) * x;
            if (ux < key) key = ux;
        }
        auto it = best.find(key);
        if (it == best.end()) {
            best.emplace(key, x);
        } else {
            int lx = big.length(x), lb = big.length(it->second);
            if (lx < lb || (lx == lb && x < it->second)) it->second = x;
        }
    }
    std::vector<SPerm> reps;
    for (auto& [key, rep] : best) reps.push_back(rep);
    const auto& tbl = big;
    std::sort(reps.begin(), reps.end(), [&](const SPerm& a, const SPerm& b) {
        int la = tbl.length(a), lb = tbl.length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
    return reps;
}

std::vector<SPerm> dmm_reps(int m) {
    if (m <= 1) throw std::invalid_argument("dmm_reps: m > 1");
    SPerm e = SPerm::identity(m + 1);
    SPerm sm = SPerm::gen_s(m, m + 1);
    SPerm epseps = SPerm::eps1(m + 1);
    epseps.img[static_cast<size_t>(m)] = -(m + 1);
    return {e, sm, SPerm(epseps.img)};
}

}  // namespace klrd
