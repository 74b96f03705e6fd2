#pragma once

#include "klrd/sequence.hpp"

#include <map>
#include <string>
#include <vector>

namespace klrd {

/// Signed permutation of {1-m, ..., m} commuting with l -> 1-l, stored by the
/// images of 1..m. Image +k means position k, image -k means position 1-k.
struct SPerm {
    std::vector<int> img;

    SPerm() = default;
    explicit SPerm(std::vector<int> images);

    static SPerm identity(int m);
    /// s_k for 1 <= k <= m-1 swaps k and k+1; s_0 = eps_1 s_1 eps_1 sends
    /// 1 -> -2, 2 -> -1 (needs m >= 2).
    static SPerm gen_s(int k, int m);
    static SPerm eps1(int m);  // 1 -> -1

    int rank() const { return static_cast<int>(img.size()); }
    bool is_identity() const;
    /// Number of negative images; even means membership in the D-type group.
    bool is_even() const;

    /// Image of any position l in {1-m..m} as a raw position in {1-m..m}.
    int act_pos(int l) const;

    SPerm operator*(const SPerm& o) const;  // (w*u)(l) = w(u(l))
    SPerm inverse() const;
    bool operator==(const SPerm& o) const { return img == o.img; }
    bool operator!=(const SPerm& o) const { return img != o.img; }
    bool operator<(const SPerm& o) const { return img < o.img; }

    /// Sequence action w(i) = i compose w^{-1}.
    ThetaSeq act(const ThetaSeq& seq) const;

    std::string to_string() const;  // "[-2,-1,3]"
    static SPerm parse(const std::string& text);
};

/// Extend to a larger rank fixing the new positions.
SPerm embed(const SPerm& w, int bigger_m);
/// Inverse of embed; requires the extra positions to be fixed.
SPerm restrict_rank(const SPerm& w, int smaller_m);

/// Reduced-word strategy. GreedyMin (default) takes the smallest-index left
/// descent first; GreedyMax the largest; Nested factors words through the
/// chain of minimal coset representatives (rank by rank), so a word at rank
/// m+1 splits as (word at rank m) ++ (coset-suffix word).
enum class WordStyle { GreedyMin, GreedyMax, Nested };

/// Reads KLRD_WORD_TABLE ("greedy-min", "greedy-max"); default GreedyMin.
WordStyle word_style_from_env();
std::string word_style_name(WordStyle style);

/// Cayley-graph tables for one group: TypeD is the group generated by
/// s_0..s_{m-1} (even signed permutations); TypeB is the full group with
/// letters eps_1 (encoded -1) and s_1..s_{m-1}.
class WeylTable {
  public:
    enum class Kind { TypeD, TypeB };

    WeylTable(int m, Kind kind);

    int rank() const { return m_; }
    Kind kind() const { return kind_; }
    const std::vector<SPerm>& elements() const { return elems_; }
    bool contains(const SPerm& w) const;
    int length(const SPerm& w) const;
    /// Reduced word as letters (for TypeB, -1 denotes eps_1), product left to right.
    std::vector<int> word(const SPerm& w, WordStyle style = WordStyle::GreedyMin) const;
    std::vector<std::vector<int>> all_reduced_words(const SPerm& w) const;
    const std::vector<int>& letters() const { return letters_; }
    static SPerm letter_perm(int letter, int m);

    /// Shared per-(m, kind) instance.
    static const WeylTable& get(int m, Kind kind);

  private:
    int m_;
    Kind kind_;
    std::vector<int> letters_;
    std::vector<SPerm> elems_;
    std::map<SPerm, int> len_;

    std::vector<int> greedy_word(SPerm w, bool largest) const;
    std::vector<int> nested_word(const SPerm& w) const;
};

/// Minimal-length representatives of the right cosets of the rank-m D-group
/// inside the rank-(m+1) one, sorted by (length, images); exactly 2(m+1).
std::vector<SPerm> coset_reps_D_m1(int m);

/// The double-coset representatives {e, s_m, eps_{m+1} eps_1} at rank m+1 (m > 1).
std::vector<SPerm> dmm_reps(int m);

}  // namespace klrd
