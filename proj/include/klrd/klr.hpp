#pragma once

#include "klrd/ratfn.hpp"
#include "klrd/sequence.hpp"
#include "klrd/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrd {

/// TypeD is the half algebra on even signed permutations; TypeB is its
/// extension by the sign flip pi_1 (all signed permutations).
enum class Flavor { TypeD, TypeB };

/// Key of one term f * 1_out * w of an operator in the faithful polynomial
/// picture: the term maps the block w^{-1}(out) into the block out.
struct KlrTermKey {
    ThetaSeq out;
    SPerm w;

    bool operator==(const KlrTermKey& o) const { return out == o.out && w == o.w; }
    bool operator<(const KlrTermKey& o) const {
        if (out != o.out) return out < o.out;
        return w < o.w;
    }
};

/// Element of the (localized) smash product: finite sum of terms
/// coeff * 1_out * w with coeff a rational function in kappa_1..kappa_m
/// written on the output side. Algebra elements proper are the sums whose
/// normal form has polynomial coefficients; intermediate results may not.
struct KlrOp {
    DimVec nu;
    int m = 0;
    Flavor flavor = Flavor::TypeD;
    std::map<KlrTermKey, RatFn> terms;

    KlrOp() = default;
    KlrOp(DimVec dim, Flavor f);

    /// Accumulates coeff * 1_out * w, dropping cancelled terms.
    void add_term(const ThetaSeq& out, const SPerm& w, const RatFn& coeff);

    bool is_zero() const { return terms.empty(); }
    KlrOp operator-() const;
    KlrOp operator+(const KlrOp& o) const;
    KlrOp operator-(const KlrOp& o) const;
    KlrOp operator*(const KlrOp& o) const;
    KlrOp operator*(const Scalar& c) const;
    bool operator==(const KlrOp& o) const;
    bool operator!=(const KlrOp& o) const { return !(*this == o); }

    std::string to_string() const;
};

// Generators. The sigma builders follow the faithful polynomial model:
// on a block with equal entries at the crossing, sigma acts as a divided
// difference c (s - 1) with c the inverted linear form of the crossing; on
// distinct entries it acts as (linear form)^(arrows) s.
KlrOp gen_idem(const ThetaSeq& i, Flavor f);
KlrOp gen_idem_total(const DimVec& nu, Flavor f);
/// Sum of the block idempotents over one half of the orbit split.
KlrOp gen_idem_part(const DimVec& nu, bool plus, Flavor f);
KlrOp gen_kappa(int l, const DimVec& nu, Flavor f);
KlrOp gen_kappa_at(int l, const ThetaSeq& i, Flavor f);
/// Diagonal operator sum_i poly * 1_i.
KlrOp diagonal_op(const Poly& f, const DimVec& nu, Flavor fl);
/// sigma_k * 1_i as an operator (k = 0 needs rank >= 2 and acts through the
/// twisted crossing). `mutated` drops the divided-difference correction term,
/// deliberately breaking the defining relations; used as a negative control.
KlrOp gen_sigma_at(int k, const ThetaSeq& i, Flavor f, bool mutated = false);
KlrOp gen_sigma(int k, const DimVec& nu, Flavor f, bool mutated = false);
/// The sign-flip generator (TypeB only).
KlrOp gen_pi1_at(const ThetaSeq& i);
KlrOp gen_pi1(const DimVec& nu);

/// Applies an operator to a vector of polynomials indexed by blocks.
/// Throws when a coefficient fails to act polynomially.
std::map<ThetaSeq, Poly> apply_op(const KlrOp& a, const std::map<ThetaSeq, Poly>& vec);

/// Degree of the crossing word read right to left against a source block:
/// letter k contributes minus the pairing of the entries it crosses, the
/// sign flip contributes zero, and the block is updated along the way.
int word_degree(const std::vector<int>& word, const ThetaSeq& source);

/// The stored word for the basis element attached to w: TypeD words use the
/// crossing letters only; odd TypeB elements get the sign flip as the last
/// letter, after the crossing word of w * eps_1.
std::vector<int> basis_word(const SPerm& w, Flavor f, WordStyle style);

/// The basis element sigma_w * 1_j (product of generators along the stored
/// word). Cached per (flavor, style, source, w).
const KlrOp& pbw_element(const SPerm& w, const ThetaSeq& j, Flavor f, WordStyle style);

struct PbwEntry {
    SPerm w;
    ThetaSeq source;
    RatFn coeff;  // multiplies on the left, in the block w(source)
};

struct PbwForm {
    std::vector<PbwEntry> entries;
    bool in_algebra = true;  // all coefficients polynomial
};

/// Triangular elimination against the basis elements; exact, no truncation.
PbwForm pbw_decompose(const KlrOp& a, WordStyle style = WordStyle::GreedyMin);
KlrOp pbw_reconstruct(const PbwForm& form, const DimVec& nu, Flavor f,
                      WordStyle style = WordStyle::GreedyMin);
/// Membership of a localized expression in the unlocalized algebra.
bool is_member(const KlrOp& a, WordStyle style = WordStyle::GreedyMin);

/// Graded degree of an operator via its basis decomposition: every entry
/// must land on the same value, else nullopt. Zero reports degree 0.
std::optional<int> op_degree(const KlrOp& a, WordStyle style = WordStyle::GreedyMin);

/// The grading anti-involution: fixes idempotents, kappas and the sign flip,
/// reverses products.
KlrOp omega(const KlrOp& a, WordStyle style = WordStyle::GreedyMin);

/// The flip automorphism: conjugation by the sign flip, term by term.
KlrOp gamma(const KlrOp& a);

/// Commutation with every generator of the algebra of a's flavor.
bool is_central(const KlrOp& a);

/// Centrality of sum_i f * 1_i, decided by commutation against the crossing
/// generators; equivalent to invariance of f under the even signed group.
bool center_test(const Poly& f, const DimVec& nu);

struct RelationFailure {
    std::string relation;
    std::string detail;
};

struct RelationReport {
    bool ok = true;
    int checked = 0;
    std::vector<RelationFailure> failures;
};

struct RelationOptions {
    bool mutate_sigma = false;
    int max_failures = 8;
};

/// Checks the defining presentation on every block of the given dimension
/// vector: idempotent orthogonality, kappa commutation, quadratic crossing
/// values, distant commutation, the braid correction, the straightening
/// rule, and (TypeB) the sign-flip relations.
RelationReport verify_relations(const DimVec& nu, Flavor f, const RelationOptions& opt = {});

}  // namespace klrd
