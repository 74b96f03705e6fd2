#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrd/gdim.hpp"

using namespace klrd;

namespace {

Vertex V(int sign, int exp) { return Vertex(sign, exp); }

ThetaSeq seq(std::vector<Vertex> right) { return ThetaSeq(std::move(right)); }

DimVec nu_of(const std::vector<Vertex>& labels) {
    DimVec nu;
    for (const Vertex& v : labels) nu.add_pair(v);
    return nu;
}

Series from_coeffs(int lo, std::vector<long long> c, long long trunc) {
    Series s;
    s.lo = lo;
    s.c = std::move(c);
    s.trunc = trunc;
    return s + Series::zero();  // force normalization through the public API
}

}  // namespace

TEST_CASE("rank-one corners: polynomial blocks on the diagonal") {
    ThetaSeq a = seq({V(1, 1)});
    ThetaSeq b = seq({V(1, -1)});
    Series diag = gdim_block(a, a, 8);
    CHECK(diag.matches(from_coeffs(0, {1, 0, 1, 0, 1, 0, 1, 0, 1}, 8), 8));
    CHECK(gdim_block(b, a, 8).known_zero());
    // the full algebra adds the degree-zero flip route
    CHECK(gdim_typeB_block(b, a, 8).matches(diag, 8));
    CHECK(gdim_typeB_block(a, a, 8).matches(diag, 8));
}

TEST_CASE("rank-two corners against hand convolutions") {
    // far-apart labels: all four routes have degree zero
    ThetaSeq a = seq({V(1, 1), V(1, 5)});
    Series fb2 = from_coeffs(0, {1, 0, 2, 0, 3, 0, 4, 0, 5}, 8);
    CHECK(gdim_block(a, a, 8).matches(fb2, 8));
    CHECK(gdim_block(seq({V(1, 5), V(1, 1)}), a, 8).matches(fb2, 8));
    CHECK(gdim_block(seq({V(1, -1), V(1, -5)}), a, 8).matches(fb2, 8));

    // adjacent labels: the swap route costs one
    ThetaSeq c = seq({V(1, 1), V(1, 3)});
    CHECK(gdim_block(seq({V(1, 3), V(1, 1)}), c, 8)
              .matches(from_coeffs(1, {1, 0, 2, 0, 3, 0, 4, 0}, 8), 8));

    // doubled label: diagonal corner is (1 + v^-2) times the free block
    ThetaSeq pp = seq({V(1, 1), V(1, 1)});
    CHECK(gdim_block(pp, pp, 6).matches(from_coeffs(-2, {1, 0, 3, 0, 5, 0, 7, 0, 9}, 6), 6));
}

TEST_CASE("corner dimensions are symmetric in their blocks") {
    DimVec nu = nu_of({V(1, 1), V(1, 3), V(-1, 1)});
    std::vector<ThetaSeq> seqs = sequences_of(nu);
    for (size_t s = 0; s < seqs.size(); s += 7)
        for (size_t t = 0; t < seqs.size(); t += 5) {
            Series ab = gdim_block(seqs[s], seqs[t], 8);
            Series ba = gdim_block(seqs[t], seqs[s], 8);
            CHECK(ab.matches(ba, 8));
        }
}

TEST_CASE("corner dimensions do not depend on the word table") {
    DimVec nu = nu_of({V(1, 1), V(1, 3), V(1, 5)});
    std::vector<ThetaSeq> seqs = sequences_of(nu);
    for (size_t s = 0; s < seqs.size(); s += 11)
        for (size_t t = 0; t < seqs.size(); t += 13) {
            Series a = gdim_block(seqs[s], seqs[t], 6, WordStyle::GreedyMin);
            Series b = gdim_block(seqs[s], seqs[t], 6, WordStyle::GreedyMax);
            Series c = gdim_block(seqs[s], seqs[t], 6, WordStyle::Nested);
            CHECK(a.matches(b, 6));
            CHECK(a.matches(c, 6));
            Series ta = gdim_typeB_block(seqs[s], seqs[t], 6, WordStyle::GreedyMin);
            Series tb = gdim_typeB_block(seqs[s], seqs[t], 6, WordStyle::GreedyMax);
            CHECK(ta.matches(tb, 6));
        }
}

TEST_CASE("pairings") {
    ThetaSeq a = seq({V(1, 1), V(1, 5)});
    ThetaSeq b = seq({V(1, 5), V(1, 1)});
    CHECK(pairing_KE(a, a, 10).matches(Series::constant(1), 10));
    CHECK(pairing_KE(a, b, 10).matches(Series::constant(1), 10));

    ThetaSeq c = seq({V(1, 1), V(1, 3)});
    CHECK(pairing_KE(c, seq({V(1, 3), V(1, 1)}), 10).matches(Series::monomial(1), 10));

    ThetaSeq pp = seq({V(1, 1), V(1, 1)});
    CHECK(pairing_KE(pp, pp, 10).matches(
        Series::monomial(-2) + Series::constant(1), 10));
}

TEST_CASE("twist exponent") {
    CHECK(t_twist_exponent(nu_of({V(1, 3)}), V(1, 3)) == -4);
    CHECK(t_twist_exponent(nu_of({V(1, 1)}), V(1, 1)) == -2);  // p pairs with its flip
    CHECK(t_twist_exponent(nu_of({V(1, 1), V(1, 5)}), V(1, 5)) == -4);
    // theta-symmetry of the pairing
    DimVec nu = nu_of({V(1, 1), V(1, 3)});
    CHECK(t_twist_exponent(nu, V(1, 3)) == t_twist_exponent(nu, V(1, -3)));
}

TEST_CASE("restriction of the full algebra splits over the flip") {
    for (const DimVec& nu : {nu_of({V(1, 1)}), nu_of({V(1, 3)}), nu_of({V(1, 1), V(1, 3)}),
                             nu_of({V(1, 1), V(1, 1)}), nu_of({V(1, 1), V(-1, 1)})}) {
        CheckReport rep = check_res_ind(nu, 12);
        CHECK(rep.ok);
        CHECK(rep.checked > 0);
        if (!rep.ok)
            for (const auto& line : rep.failures) MESSAGE(line);
    }
}

TEST_CASE("induction-restriction commutation, rank one") {
    ThetaSeq a = seq({V(1, 1)});
    SUBCASE("same vertex") {
        EfReport rep = verify_ef_identity(V(1, 1), V(1, 1), a, 12);
        CHECK(rep.ok);
        if (!rep.ok)
            for (const auto& line : rep.lines) MESSAGE(line);
    }
    SUBCASE("flipped vertex") {
        EfReport rep = verify_ef_identity(V(1, 1), V(1, -1), a, 12);
        CHECK(rep.ok);
        if (!rep.ok)
            for (const auto& line : rep.lines) MESSAGE(line);
    }
    SUBCASE("distant vertex") {
        EfReport rep = verify_ef_identity(V(1, 1), V(1, 5), a, 12);
        CHECK(rep.ok);
    }
    SUBCASE("adjacent vertex") {
        EfReport rep = verify_ef_identity(V(1, 1), V(1, 3), a, 12);
        CHECK(rep.ok);
    }
    SUBCASE("restricted vertex absent from the block") {
        EfReport rep = verify_ef_identity(V(1, 5), V(1, 5), a, 12);
        CHECK(rep.ok);
    }
}

TEST_CASE("induction-restriction commutation, rank two") {
    ThetaSeq a = seq({V(1, 1), V(1, 5)});
    for (Vertex i : {V(1, 1), V(1, 5)})
        for (Vertex j : {V(1, 1), V(1, -1), V(1, 5), V(1, 9)}) {
            EfReport rep = verify_ef_identity(i, j, a, 12);
            CHECK(rep.ok);
            if (!rep.ok) {
                MESSAGE("i=", i.to_string(), " j=", j.to_string());
                for (const auto& line : rep.lines) MESSAGE(line);
            }
        }
}
