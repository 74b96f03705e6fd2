#pragma once

#include "klrd/klr.hpp"
#include "klrd/series.hpp"

#include <string>
#include <vector>

namespace klrd {

/// Graded dimension of the corner 1_b R 1_a of the half algebra, exact
/// through v^N: sum over the even group elements sending a to b of
/// v^(degree of the crossing route) times the free polynomial block.
Series gdim_block(const ThetaSeq& b, const ThetaSeq& a, long long N,
                  WordStyle style = WordStyle::GreedyMin);

/// Same corner in the full algebra: the sum runs over all signed
/// permutations, odd ones routed through the sign flip.
Series gdim_typeB_block(const ThetaSeq& b, const ThetaSeq& a, long long N,
                        WordStyle style = WordStyle::GreedyMin);

/// Graded dimension of 1_a R 1_b (the bilinear pairing of the two
/// projectives attached to a and b).
Series pairing_cartan(const ThetaSeq& a, const ThetaSeq& b, long long N,
                      WordStyle style = WordStyle::GreedyMin);

/// The renormalized pairing: (1 - v^2)^m times the corner dimension, which
/// is a polynomial for a finite-codimension pairing and the identity matrix
/// delta at rank zero.
Series pairing_KE(const ThetaSeq& a, const ThetaSeq& b, long long N,
                  WordStyle style = WordStyle::GreedyMin);

/// Pairing of a dimension vector against a vertex: sum of nu_j (j . i).
int dimvec_pairing(const DimVec& nu, const Vertex& i);

/// Exponent of the twist operation on projectives: minus nu . (i + theta(i)).
int t_twist_exponent(const DimVec& nu, const Vertex& i);

struct CheckReport {
    bool ok = true;
    int checked = 0;
    std::vector<std::string> failures;
};

/// Restriction-of-induction profile: for every pair of blocks the full
/// corner equals the sum of the half corner and its flip-twisted partner.
CheckReport check_res_ind(const DimVec& nu, long long N,
                          WordStyle style = WordStyle::GreedyMin);

/// Blockwise commutation checks between the induction and restriction
/// operators on the projective attached to the block a, exact through v^N.
/// The pair (i, j) selects which of the three interaction patterns applies:
/// j = i, j = theta(i), or the non-interacting case.
struct EfReport {
    bool ok = true;
    long long order = 0;
    std::vector<std::string> lines;  // one line per output block
};

EfReport verify_ef_identity(const Vertex& i, const Vertex& j, const ThetaSeq& a, long long N,
                            WordStyle style = WordStyle::GreedyMin);

}  // namespace klrd
