#pragma once

#include "klrd/klr.hpp"
#include "klrd/matrix.hpp"

#include <map>
#include <set>
#include <utility>
#include <vector>

namespace klrd {

/// Finite-dimensional module over the half algebra at nu, stored as block
/// dimensions plus one action matrix per generator and block. Crossings map
/// the block i into s_k(i); kappas act per block and nilpotently. At rank
/// zero the algebra is k (+) k and the module is the pair of multiplicities
/// of its two one-dimensional summands.
struct FDModule {
    DimVec nu;
    int m = 0;
    int part_plus = 0, part_minus = 0;                 // rank-zero data
    std::map<ThetaSeq, int> dim;                       // nonzero blocks only
    std::map<std::pair<int, ThetaSeq>, Matrix> kappa;  // (l, block), square
    std::map<std::pair<int, ThetaSeq>, Matrix> sigma;  // (k, block) -> block s_k(block)

    int block_dim(const ThetaSeq& s) const;
    int total_dim() const;

    /// Zero-filled when the pair is absent; shapes follow the block dims.
    Matrix kappa_mat(int l, const ThetaSeq& s) const;
    Matrix sigma_mat(int k, const ThetaSeq& s) const;
    /// Evaluate a polynomial in the kappas on one block (they commute).
    Matrix eval_poly(const Poly& f, const ThetaSeq& s) const;
};

struct ModuleCheck {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

/// Verify every defining relation of the half algebra on the module's
/// matrices, plus shape sanity and nilpotency of the kappas.
ModuleCheck check_fdmodule(const FDModule& M);

/// Whether the labels of the seed are pairwise separated: no two slots
/// (including flipped ones) carry equal or arrow-adjacent labels.
bool separated_labels(const ThetaSeq& seed);

/// One-dimensional blocks along the orbit of a separated seed; kappas act
/// by zero and crossings permute the blocks.
FDModule permutation_module(const ThetaSeq& seed);

/// Rank-one module k[kappa_1]/(kappa_1^n) on the block (theta(i), i).
FDModule truncated_module(const Vertex& i, int n);

/// Restriction: keep the blocks whose last entry is i, forgetting the last
/// strand. At rank one the result is the rank-zero multiplicity pair.
FDModule e_functor(const FDModule& M, const Vertex& i);

/// Induction along the corner bimodule; the rank grows by one and the
/// dimension is multiplied by 2(m+1) for m >= 1.
FDModule f_functor(const FDModule& M, const Vertex& i);

/// Block dimension vector i -> dim 1_i M.
std::map<ThetaSeq, int> character(const FDModule& M);

/// Orbit parts carrying the module: subset of {+1, -1}.
std::set<int> part_support(const FDModule& M);
/// The consistent orbit-part sign picked up when inducing by i on top of nu.
int part_sign(const DimVec& nu, const Vertex& i);

}  // namespace klrd
