#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrd/sequence.hpp"

#include <algorithm>

using namespace klrd;

namespace {

Vertex V(int sign, int exp) { return Vertex(sign, exp); }

ThetaSeq seq(std::initializer_list<Vertex> right) {
    return ThetaSeq(std::vector<Vertex>(right));
}

}  // namespace

TEST_CASE("vertex validation and involution") {
    CHECK_THROWS(V(1, 2));   // even exponent
    CHECK_THROWS(V(0, 1));   // bad sign
    CHECK(V(1, 3).theta() == V(1, -3));
    CHECK(V(-1, -5).theta() == V(-1, 5));
    CHECK(V(1, 1).times_p2() == V(1, 3));
    CHECK(V(1, 1).theta() != V(1, 1));  // nothing is fixed
    CHECK(V(1, 3).as_scalar() == Scalar::p_power(3));
    CHECK(V(-1, -1).as_scalar() == -Scalar::p_power(-1));
}

TEST_CASE("vertex listing order") {
    std::vector<Vertex> v = {V(-1, 1), V(1, -3), V(1, 1), V(1, 3), V(1, -1)};
    std::sort(v.begin(), v.end());
    CHECK(v == std::vector<Vertex>{V(1, 1), V(1, -1), V(1, 3), V(1, -3), V(-1, 1)});
}

TEST_CASE("vertex strings") {
    CHECK(V(1, -1).to_string() == "+p^-1");
    CHECK(Vertex::parse("-p^3") == V(-1, 3));
    CHECK(Vertex::parse(V(1, 5).to_string()) == V(1, 5));
}

TEST_CASE("arrows and pairing") {
    // One arrow i -> j exactly when i = p^2 j.
    CHECK(arrow_count(V(1, 3), V(1, 1)) == 1);
    CHECK(arrow_count(V(1, 1), V(1, 3)) == 0);
    CHECK(arrow_count(V(1, 1), V(1, -1)) == 1);  // p = p^2 * p^-1
    CHECK(arrow_count(V(1, -1), V(1, 1)) == 0);
    CHECK(arrow_count(V(1, 3), V(-1, 1)) == 0);  // signs differ

    CHECK(cartan_product(V(1, 3), V(1, 3)) == 2);
    CHECK(cartan_product(V(1, 3), V(1, 1)) == -1);
    CHECK(cartan_product(V(1, 1), V(1, 3)) == -1);
    CHECK(cartan_product(V(1, 1), V(1, -1)) == -1);  // adjacent to its own flip
    CHECK(cartan_product(V(1, 1), V(1, 5)) == 0);
    CHECK(cartan_product(V(1, 1), V(-1, 1)) == 0);
}

TEST_CASE("dimension vectors") {
    DimVec nu;
    nu.add_pair(V(1, 1));
    nu.add_pair(V(1, 3), 2);
    CHECK(nu.total() == 6);
    CHECK(nu.rank() == 3);
    CHECK(nu.count(V(1, 1)) == 1);
    CHECK(nu.count(V(1, -1)) == 1);
    CHECK(nu.count(V(1, -3)) == 2);
    CHECK(nu.count(V(-1, 1)) == 0);

    // Asymmetric multiplicity map is rejected.
    std::map<Vertex, int> bad;
    bad.emplace(V(1, 1), 1);
    CHECK_THROWS(DimVec(bad));
}

TEST_CASE("theta sequence indexing") {
    ThetaSeq s = seq({V(1, 1), V(1, 3)});
    CHECK(s.rank() == 2);
    CHECK(s.at(1) == V(1, 1));
    CHECK(s.at(2) == V(1, 3));
    CHECK(s.at(0) == V(1, -1));
    CHECK(s.at(-1) == V(1, -3));
    CHECK(s.full() == std::vector<Vertex>{V(1, -3), V(1, -1), V(1, 1), V(1, 3)});
    CHECK(s.dimvec().total() == 4);
}

TEST_CASE("generator action on sequences") {
    ThetaSeq s = seq({V(1, 1), V(1, 3), V(1, 5)});
    CHECK(seq_apply_s(1, s) == seq({V(1, 3), V(1, 1), V(1, 5)}));
    CHECK(seq_apply_s(2, s) == seq({V(1, 1), V(1, 5), V(1, 3)}));
    CHECK(seq_apply_s(0, s) == seq({V(1, -3), V(1, -1), V(1, 5)}));
    // s_0 twice is the identity.
    CHECK(seq_apply_s(0, seq_apply_s(0, s)) == s);
}

TEST_CASE("sequence enumeration") {
    DimVec nu;
    nu.add_pair(V(1, 1));
    nu.add_pair(V(1, 3));
    auto all = sequences_of(nu);
    // Right half picks one vertex from each theta-pair in either order: 2*2*2.
    CHECK(all.size() == 8);
    CHECK(std::is_sorted(all.begin(), all.end()));
    for (const auto& s : all) CHECK(s.dimvec() == nu);

    DimVec nu2;
    nu2.add_pair(V(1, 1), 2);
    auto all2 = sequences_of(nu2);
    // Right halves: (p,p), (p,p^-1), (p^-1,p), (p^-1,p^-1).
    CHECK(all2.size() == 4);
}

TEST_CASE("orbit split") {
    DimVec nu1;
    nu1.add_pair(V(1, 1));
    auto split1 = orbit_split(nu1);
    CHECK(split1.plus.size() == 1);
    CHECK(split1.minus.size() == 1);
    CHECK(split1.plus[0] == seq({V(1, 1)}));
    CHECK(split1.minus[0] == seq({V(1, -1)}));
    CHECK(split1.is_plus(seq({V(1, 1)})));
    CHECK(!split1.is_plus(seq({V(1, -1)})));

    DimVec nu2;
    nu2.add_pair(V(1, 1));
    nu2.add_pair(V(1, 3));
    auto split2 = orbit_split(nu2);
    CHECK(split2.plus.size() + split2.minus.size() == 8);
    CHECK(split2.plus.size() == 4);
    // The even group fixes the number of flipped entries mod 2, and the two
    // halves of the split are exchanged by flipping one entry.
    ThetaSeq base = seq({V(1, 1), V(1, 3)});
    ThetaSeq flipped = seq({V(1, -1), V(1, 3)});
    CHECK(split2.is_plus(base) != split2.is_plus(flipped));
}
