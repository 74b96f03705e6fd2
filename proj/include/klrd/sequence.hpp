#pragma once

#include "klrd/vertex.hpp"

#include <map>
#include <string>
#include <vector>

namespace klrd {

/// Dimension vector: finitely supported multiset of vertices with the
/// theta-symmetry nu_i = nu_theta(i). Total size is always even, = 2m.
struct DimVec {
    std::map<Vertex, int> mult;

    DimVec() = default;
    explicit DimVec(std::map<Vertex, int> m);

    /// Adds n copies of the theta-pair {i, theta(i)}.
    void add_pair(const Vertex& i, int n = 1);

    int total() const;               // |nu| = 2m
    int rank() const { return total() / 2; }
    int count(const Vertex& i) const;

    bool operator==(const DimVec& o) const { return mult == o.mult; }
    bool operator<(const DimVec& o) const { return mult < o.mult; }

    std::string to_string() const;
};

/// Theta-sequence i = (i_{1-m}, ..., i_m) with i_{1-l} = theta(i_l); stored by
/// its right half (i_1, ..., i_m), which determines it.
struct ThetaSeq {
    std::vector<Vertex> right;

    ThetaSeq() = default;
    explicit ThetaSeq(std::vector<Vertex> r) : right(std::move(r)) {}

    int rank() const { return static_cast<int>(right.size()); }
    /// Entry at position l for 1-m <= l <= m (position 0 is theta(i_1)).
    Vertex at(int l) const;
    std::vector<Vertex> full() const;  // (i_{1-m}, ..., i_m)
    DimVec dimvec() const;

    bool operator==(const ThetaSeq& o) const { return right == o.right; }
    bool operator!=(const ThetaSeq& o) const { return right != o.right; }
    bool operator<(const ThetaSeq& o) const;  // lex on the right half

    std::string to_string() const;  // full sequence "(p^-1,p^1)" style
};

/// Action of the Weyl generator s_k (0 <= k <= m-1) on a sequence.
/// s_0 maps (x, y, ...) to (theta(y), theta(x), ...); s_k swaps slots k, k+1.
ThetaSeq seq_apply_s(int k, const ThetaSeq& seq);

/// All theta-sequences with dimension vector nu, in lexicographic order.
std::vector<ThetaSeq> sequences_of(const DimVec& nu);

/// The two Weyl-orbit families of sequences; "plus" is the orbit containing
/// the lexicographically minimal sequence. For m = 1 each orbit is a
/// singleton and the labels follow the same minimal-sequence rule.
struct OrbitSplit {
    std::vector<ThetaSeq> plus, minus;

    bool is_plus(const ThetaSeq& s) const;
};

OrbitSplit orbit_split(const DimVec& nu);

}  // namespace klrd
