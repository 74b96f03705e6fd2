#pragma once

#include "klrd/fdmod.hpp"

#include <string>
#include <utility>
#include <vector>

namespace klrd {

/// Finite-dimensional module over the fixed-point Hecke algebra: invertible
/// pairwise-commuting X_1..X_m and braid generators T_0..T_{m-1} acting on
/// the total space. Blocks record where each coordinate range came from;
/// the X_l are block diagonal and the T_k permute blocks up to lower-order
/// terms. At m <= 1 there are no T generators.
struct HeckeModule {
    int m = 0;
    std::vector<std::pair<ThetaSeq, int>> blocks;  // ordered, nonzero dims
    std::vector<Matrix> X;  // X[l-1] for l = 1..m
    std::vector<Matrix> T;  // T[k] for k = 0..m-1, empty when m <= 1

    int total_dim() const;
    /// Offset of a block's coordinate range, or -1 when absent.
    int offset_of(const ThetaSeq& s) const;
};

/// Transport of a module across the Morita equivalence: X_l acts on the
/// block i as i_l^{-1} exp(kappa_l) (a finite sum, the kappas being
/// nilpotent), and T_k combines the crossing with a diagonal correction,
/// with three shapes depending on the labels at the crossing (equal,
/// arrow-linked, generic).
HeckeModule psi_transport(const FDModule& M);

/// Verify the defining Hecke relations on the matrices: invertibility and
/// commutation of the X, the quadratic (T-p)(T+1/p) = 0, both braid shapes,
/// distant commutation, and the mixed X-T relations.
ModuleCheck check_hecke(const HeckeModule& H);

/// The intertwining operator phi_k = 1 + (Y - Z)(pY - Z/p)^{-1}(T_k - p)
/// with (Y, Z) = (X_k, X_{k+1}) for k >= 1 and (X_1^{-1}, X_2) for k = 0.
/// Conjugation by it swaps the eigenvalue data of the pair.
Matrix intertwiner(const HeckeModule& H, int k);

/// Dimension of the generalized eigenspace of A at the eigenvalue ev.
int generalized_eigenspace_dim(const Matrix& A, const Scalar& ev);

/// Compare restriction with the Hecke side: the generalized eigenspace of
/// X_m at i^{-1} must be spanned by exactly the coordinates of the blocks
/// ending in i, and the restricted X/T matrices there must equal the
/// transport of the restricted module on the nose.
ModuleCheck compare_branching(const FDModule& M, const Vertex& i);

}  // namespace klrd
