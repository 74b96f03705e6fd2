#include "klrd/gdim.hpp"

#include <stdexcept>

namespace klrd {

namespace {

Series exact_zero() { return Series::zero(); }

/// Sum over a group table of v^(route degree) for elements sending a to b.
Series route_sum(const WeylTable& table, Flavor f, const ThetaSeq& b, const ThetaSeq& a,
                 WordStyle style) {
    Series total = exact_zero();
    for (const SPerm& w : table.elements()) {
        if (w.act(a) != b) continue;
        int d = word_degree(basis_word(w, f, style), a);
        total += Series::monomial(d);
    }
    return total;
}

/// Multiply by the free polynomial block, keeping the window exact through N
/// even when the left factor dips into negative degrees.
Series times_free_block(const Series& s, int m, long long N) {
    if (s.known_zero()) return s;
    long long extra = s.min_exp() < 0 ? -s.min_exp() : 0;
    return (s * Series::free_block(m, N + extra)).truncated(N);
}

}  // namespace

Series gdim_block(const ThetaSeq& b, const ThetaSeq& a, long long N, WordStyle style) {
    if (a.dimvec() != b.dimvec()) return exact_zero();
    int m = a.rank();
    // Rank zero: each summand of k (+) k has the scalar corner.
    if (m == 0) return Series::constant(1);
    const WeylTable& table = WeylTable::get(m, WeylTable::Kind::TypeD);
    return times_free_block(route_sum(table, Flavor::TypeD, b, a, style), m, N);
}

Series gdim_typeB_block(const ThetaSeq& b, const ThetaSeq& a, long long N, WordStyle style) {
    if (a.dimvec() != b.dimvec()) return exact_zero();
    int m = a.rank();
    if (m == 0) return Series::constant(1);
    const WeylTable& table = WeylTable::get(m, WeylTable::Kind::TypeB);
    return times_free_block(route_sum(table, Flavor::TypeB, b, a, style), m, N);
}

Series pairing_cartan(const ThetaSeq& a, const ThetaSeq& b, long long N, WordStyle style) {
    return gdim_block(a, b, N, style);
}

Series pairing_KE(const ThetaSeq& a, const ThetaSeq& b, long long N, WordStyle style) {
    int m = a.rank();
    return (pairing_cartan(a, b, N, style) * Series::one_minus_v2_pow(m)).truncated(N);
}

int dimvec_pairing(const DimVec& nu, const Vertex& i) {
    int total = 0;
    for (const auto& [j, n] : nu.mult) total += n * cartan_product(j, i);
    return total;
}

int t_twist_exponent(const DimVec& nu, const Vertex& i) {
    return -(dimvec_pairing(nu, i) + dimvec_pairing(nu, i.theta()));
}

CheckReport check_res_ind(const DimVec& nu, long long N, WordStyle style) {
    CheckReport rep;
    SPerm eps = SPerm::eps1(nu.rank());
    std::vector<ThetaSeq> seqs = sequences_of(nu);
    for (const ThetaSeq& b : seqs)
        for (const ThetaSeq& a : seqs) {
            Series lhs = gdim_typeB_block(b, a, N, style);
            Series rhs = gdim_block(b, a, N, style) + gdim_block(b, eps.act(a), N, style);
            ++rep.checked;
            if (!lhs.matches(rhs, N)) {
                rep.ok = false;
                rep.failures.push_back("b=" + b.to_string() + " a=" + a.to_string() + ": " +
                                       lhs.to_string() + " vs " + rhs.to_string());
            }
        }
    return rep;
}

namespace {

ThetaSeq extend(const ThetaSeq& c, const Vertex& j) {
    std::vector<Vertex> r = c.right;
    r.push_back(j);
    return ThetaSeq(std::move(r));
}

/// Block profile of inducing j after restricting i on the projective at a:
/// map from rank-m blocks b to the graded dimension of the b-component.
Series ind_res_block(const Vertex& i, const Vertex& j, const ThetaSeq& a, const ThetaSeq& b,
                     long long N, WordStyle style) {
    int m = a.rank();
    if (m == 1) {
        // The restriction lands in the rank-zero algebra; each of its two
        // one-dimensional summands induces a single polynomial block.
        Series total = exact_zero();
        if (b == ThetaSeq({j})) total += gdim_block(ThetaSeq({i}), a, N, style);
        if (b == ThetaSeq({j.theta()})) total += gdim_block(ThetaSeq({i.theta()}), a, N, style);
        return times_free_block(total, 1, N);
    }
    DimVec outer = a.dimvec();
    if (outer.count(i) == 0) return exact_zero();
    std::map<Vertex, int> shrunk = outer.mult;
    --shrunk[i];
    --shrunk[i.theta()];
    DimVec inner(shrunk);
    long long inner_order = N + 4 * m + 8;  // absorbs the route-degree shifts
    Series total = exact_zero();
    for (const ThetaSeq& c : sequences_of(inner)) {
        Series inner_dim = gdim_block(extend(c, i), a, inner_order, style);
        if (inner_dim.known_zero()) continue;
        ThetaSeq source = extend(c, j);
        for (const SPerm& w : coset_reps_D_m1(m - 1)) {
            if (w.act(source) != b) continue;
            int d = word_degree(basis_word(w, Flavor::TypeD, style), source);
            total += inner_dim.shifted(d);
        }
    }
    return times_free_block(total.truncated(N), 1, N);
}

}  // namespace

EfReport verify_ef_identity(const Vertex& i, const Vertex& j, const ThetaSeq& a, long long N,
                            WordStyle style) {
    EfReport rep;
    rep.order = N;
    int m = a.rank();
    if (m < 1) throw std::domain_error("ef identity: base sequence must have positive rank");
    long long Ni = N + 8 * m + 16;  // inner order absorbing every shift below
    SPerm eps = SPerm::eps1(m);
    for (const ThetaSeq& b : sequences_of(a.dimvec())) {
        Series lhs = gdim_block(extend(b, i), extend(a, j), N, style);
        Series rhs;
        if (j == i) {
            rhs = times_free_block(gdim_block(b, a, Ni, style), 1, Ni) +
                  ind_res_block(i, i, a, b, Ni, style).shifted(-2);
        } else if (j == i.theta()) {
            int half = t_twist_exponent(a.dimvec(), i) / 2;
            rhs = times_free_block(gdim_block(eps.act(b), a, Ni, style), 1, Ni).shifted(half) +
                  ind_res_block(i, j, a, b, Ni, style).shifted(-cartan_product(i, i.theta()));
        } else {
            rhs = ind_res_block(i, j, a, b, Ni, style).shifted(-cartan_product(i, j));
        }
        rhs = rhs.truncated(N);
        bool match = lhs.matches(rhs, N);
        if (!match) rep.ok = false;
        rep.lines.push_back(std::string(match ? "ok  " : "FAIL") + " b=" + b.to_string() +
                            " lhs=" + lhs.to_string() + " rhs=" + rhs.to_string());
    }
    return rep;
}

}  // namespace klrd
