#include "klrd/klr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace klrd {

namespace {

RatFn rat_one(int m) { return RatFn::constant(Scalar(1), m); }

// Crossing data for the letter k: the moved position (0 stays 0), the
// partner position s_k(k), and the two kappa forms at those positions.
struct Crossing {
    int from;     // k as a position label (0 allowed)
    int to;       // s_k(k): k+1 for k >= 1, 2 for k = 0
    Poly u, v;    // kappa at from, kappa at to
};

Crossing crossing_of(int k, int m) {
    if (k < 0 || k > m - 1 || (k == 0 && m < 2))
        throw std::domain_error("crossing letter out of range");
    Crossing c;
    c.from = k;
    c.to = k == 0 ? 2 : k + 1;
    c.u = Poly::kappa_pos(k == 0 ? 0 : k, m);
    c.v = Poly::kappa_pos(c.to, m);
    return c;
}

KlrOp letter_op(int letter, const DimVec& nu, Flavor f) {
    if (letter == -1) {
        if (f != Flavor::TypeB) throw std::domain_error("sign flip needs the full flavor");
        return gen_pi1(nu);
    }
    return gen_sigma(letter, nu, f);
}

int lambda_of(const SPerm& w) {
    int m = w.rank();
    if (m == 0) return 0;
    const WeylTable& tbl = WeylTable::get(m, WeylTable::Kind::TypeD);
    if (w.is_even()) return tbl.length(w);
    return tbl.length(w * SPerm::eps1(m));
}

}  // namespace

KlrOp::KlrOp(DimVec dim, Flavor f) : nu(std::move(dim)), m(nu.rank()), flavor(f) {}

void KlrOp::add_term(const ThetaSeq& out, const SPerm& w, const RatFn& coeff) {
    if (coeff.is_zero()) return;
    if (out.rank() != m || w.rank() != m) throw std::domain_error("KlrOp: rank mismatch");
    if (!(out.dimvec() == nu)) throw std::domain_error("KlrOp: block outside the dimension vector");
    if (flavor == Flavor::TypeD && !w.is_even())
        throw std::domain_error("KlrOp: odd element in the half flavor");
    KlrTermKey key{out, w};
    auto it = terms.find(key);
    if (it == terms.end()) {
        terms.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms.erase(it);
    }
}

KlrOp KlrOp::operator-() const {
    KlrOp r(nu, flavor);
    for (const auto& [k, f] : terms) r.terms.emplace(k, -f);
    return r;
}

KlrOp KlrOp::operator+(const KlrOp& o) const {
    if (!(nu == o.nu) || flavor != o.flavor) throw std::domain_error("KlrOp: mixed algebras");
    KlrOp r(*this);
    for (const auto& [k, f] : o.terms) {
        auto it = r.terms.find(k);
        if (it == r.terms.end()) {
            r.terms.emplace(k, f);
        } else {
            it->second += f;
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

KlrOp KlrOp::operator-(const KlrOp& o) const { return *this + (-o); }

KlrOp KlrOp::operator*(const KlrOp& o) const {
    if (!(nu == o.nu) || flavor != o.flavor) throw std::domain_error("KlrOp: mixed algebras");
    KlrOp r(nu, flavor);
    std::map<ThetaSeq, std::vector<const std::pair<const KlrTermKey, RatFn>*>> by_out;
    for (const auto& t : o.terms) by_out[t.first.out].push_back(&t);
    for (const auto& [ka, fa] : terms) {
        ThetaSeq in = ka.w.inverse().act(ka.out);
        auto it = by_out.find(in);
        if (it == by_out.end()) continue;
        for (const auto* tb : it->second)
            r.add_term(ka.out, ka.w * tb->first.w, fa * weyl_act(ka.w, tb->second));
    }
    return r;
}

KlrOp KlrOp::operator*(const Scalar& c) const {
    KlrOp r(nu, flavor);
    if (c.is_zero()) return r;
    for (const auto& [k, f] : terms) r.terms.emplace(k, f * c);
    return r;
}

bool KlrOp::operator==(const KlrOp& o) const {
    return nu == o.nu && flavor == o.flavor && terms == o.terms;
}

std::string KlrOp::to_string() const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, f] : terms) {
        if (!first) os << " + ";
        first = false;
        os << "(" << f.to_string() << ") 1_" << k.out.to_string() << " " << k.w.to_string();
    }
    return os.str();
}

KlrOp gen_idem(const ThetaSeq& i, Flavor f) {
    KlrOp r(i.dimvec(), f);
    r.add_term(i, SPerm::identity(i.rank()), rat_one(i.rank()));
    return r;
}

KlrOp gen_idem_total(const DimVec& nu, Flavor f) {
    KlrOp r(nu, f);
    SPerm e = SPerm::identity(nu.rank());
    for (const ThetaSeq& i : sequences_of(nu)) r.add_term(i, e, rat_one(nu.rank()));
    return r;
}

KlrOp gen_idem_part(const DimVec& nu, bool plus, Flavor f) {
    KlrOp r(nu, f);
    SPerm e = SPerm::identity(nu.rank());
    OrbitSplit split = orbit_split(nu);
    for (const ThetaSeq& i : plus ? split.plus : split.minus)
        r.add_term(i, e, rat_one(nu.rank()));
    return r;
}

KlrOp gen_kappa_at(int l, const ThetaSeq& i, Flavor f) {
    int m = i.rank();
    if (l < 1 || l > m) throw std::domain_error("gen_kappa_at: index out of range");
    KlrOp r(i.dimvec(), f);
    r.add_term(i, SPerm::identity(m), RatFn(Poly::kappa(l, m)));
    return r;
}

KlrOp gen_kappa(int l, const DimVec& nu, Flavor f) {
    return diagonal_op(Poly::kappa(l, nu.rank()), nu, f);
}

KlrOp diagonal_op(const Poly& f, const DimVec& nu, Flavor fl) {
    if (f.nvars != nu.rank()) throw std::domain_error("diagonal_op: variable count mismatch");
    KlrOp r(nu, fl);
    SPerm e = SPerm::identity(nu.rank());
    RatFn coeff(f);
    for (const ThetaSeq& i : sequences_of(nu)) r.add_term(i, e, coeff);
    return r;
}

KlrOp gen_sigma_at(int k, const ThetaSeq& i, Flavor f, bool mutated) {
    int m = i.rank();
    Crossing c = crossing_of(k, m);
    Vertex a = i.at(c.from), b = i.at(c.to);
    ThetaSeq out = seq_apply_s(k, i);
    SPerm wk = SPerm::gen_s(k, m);
    KlrOp r(i.dimvec(), f);
    if (a == b) {
        RatFn inv = RatFn(Poly::constant(Scalar(1), m), {{c.u - c.v, 1}});
        r.add_term(out, wk, inv);
        if (!mutated) r.add_term(i, SPerm::identity(m), -inv);
    } else {
        Poly coeff = Poly::constant(Scalar(1), m);
        for (int t = 0; t < arrow_count(b, a); ++t) coeff = coeff * (c.u - c.v);
        r.add_term(out, wk, RatFn(coeff));
    }
    return r;
}

KlrOp gen_sigma(int k, const DimVec& nu, Flavor f, bool mutated) {
    KlrOp r(nu, f);
    for (const ThetaSeq& i : sequences_of(nu)) r = r + gen_sigma_at(k, i, f, mutated);
    return r;
}

KlrOp gen_pi1_at(const ThetaSeq& i) {
    int m = i.rank();
    if (m < 1) throw std::domain_error("gen_pi1_at: rank zero");
    KlrOp r(i.dimvec(), Flavor::TypeB);
    SPerm eps = SPerm::eps1(m);
    r.add_term(eps.act(i), eps, rat_one(m));
    return r;
}

KlrOp gen_pi1(const DimVec& nu) {
    KlrOp r(nu, Flavor::TypeB);
    for (const ThetaSeq& i : sequences_of(nu)) r = r + gen_pi1_at(i);
    return r;
}

std::map<ThetaSeq, Poly> apply_op(const KlrOp& a, const std::map<ThetaSeq, Poly>& vec) {
    std::map<ThetaSeq, RatFn> acc;
    for (const auto& [key, f] : a.terms) {
        ThetaSeq in = key.w.inverse().act(key.out);
        auto it = vec.find(in);
        if (it == vec.end() || it->second.is_zero()) continue;
        RatFn moved = f * RatFn(weyl_act(key.w, it->second));
        auto jt = acc.find(key.out);
        if (jt == acc.end()) {
            acc.emplace(key.out, moved);
        } else {
            jt->second += moved;
        }
    }
    std::map<ThetaSeq, Poly> out;
    for (const auto& [seq, r] : acc) {
        if (r.is_zero()) continue;
        if (!r.is_polynomial())
            throw std::domain_error("apply_op: operator does not act polynomially");
        out.emplace(seq, r.as_poly());
    }
    return out;
}

int word_degree(const std::vector<int>& word, const ThetaSeq& source) {
    ThetaSeq cur = source;
    int m = source.rank();
    int total = 0;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int letter = *it;
        if (letter != -1) {
            Crossing c = crossing_of(letter, m);
            total -= cartan_product(cur.at(c.from), cur.at(c.to));
        }
        cur = WeylTable::letter_perm(letter, m).act(cur);
    }
    return total;
}

std::vector<int> basis_word(const SPerm& w, Flavor f, WordStyle style) {
    int m = w.rank();
    if (m == 0) return {};
    const WeylTable& tbl = WeylTable::get(m, WeylTable::Kind::TypeD);
    if (w.is_even()) return tbl.word(w, style);
    if (f == Flavor::TypeD) throw std::domain_error("basis_word: odd element in the half flavor");
    std::vector<int> word = tbl.word(w * SPerm::eps1(m), style);
    word.push_back(-1);
    return word;
}

namespace {

struct PbwKey {
    int flavor;
    int style;
    ThetaSeq j;
    SPerm w;

    bool operator<(const PbwKey& o) const {
        if (flavor != o.flavor) return flavor < o.flavor;
        if (style != o.style) return style < o.style;
        if (j != o.j) return j < o.j;
        return w < o.w;
    }
};

}  // namespace

const KlrOp& pbw_element(const SPerm& w, const ThetaSeq& j, Flavor f, WordStyle style) {
    static std::map<PbwKey, KlrOp> cache;
    PbwKey key{static_cast<int>(f), static_cast<int>(style), j, w};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    DimVec nu = j.dimvec();
    KlrOp x = gen_idem(j, f);
    std::vector<int> word = basis_word(w, f, style);
    for (auto lt = word.rbegin(); lt != word.rend(); ++lt) x = letter_op(*lt, nu, f) * x;
    return cache.emplace(std::move(key), std::move(x)).first->second;
}

PbwForm pbw_decompose(const KlrOp& a, WordStyle style) {
    PbwForm form;
    KlrOp rem = a;
    while (!rem.is_zero()) {
        auto best = rem.terms.begin();
        int best_lambda = lambda_of(best->first.w);
        for (auto it = std::next(rem.terms.begin()); it != rem.terms.end(); ++it) {
            int lam = lambda_of(it->first.w);
            if (lam > best_lambda) {
                best = it;
                best_lambda = lam;
            }
        }
        KlrTermKey key = best->first;
        ThetaSeq j = key.w.inverse().act(key.out);
        const KlrOp& basis = pbw_element(key.w, j, rem.flavor, style);
        auto lead = basis.terms.find(key);
        if (lead == basis.terms.end())
            throw std::logic_error("pbw_decompose: basis element lost its top term");
        RatFn g = best->second * lead->second.inverse();
        form.entries.push_back(PbwEntry{key.w, j, g});
        KlrOp left(rem.nu, rem.flavor);
        left.add_term(key.out, SPerm::identity(rem.m), g);
        rem = rem - left * basis;
    }
    for (const PbwEntry& e : form.entries)
        if (!e.coeff.is_polynomial()) form.in_algebra = false;
    std::sort(form.entries.begin(), form.entries.end(), [](const PbwEntry& a, const PbwEntry& b) {
        if (a.source != b.source) return a.source < b.source;
        return a.w < b.w;
    });
    return form;
}

KlrOp pbw_reconstruct(const PbwForm& form, const DimVec& nu, Flavor f, WordStyle style) {
    KlrOp r(nu, f);
    for (const PbwEntry& e : form.entries) {
        if (e.coeff.is_zero()) continue;
        KlrOp left(nu, f);
        left.add_term(e.w.act(e.source), SPerm::identity(nu.rank()), e.coeff);
        r = r + left * pbw_element(e.w, e.source, f, style);
    }
    return r;
}

bool is_member(const KlrOp& a, WordStyle style) { return pbw_decompose(a, style).in_algebra; }

std::optional<int> op_degree(const KlrOp& a, WordStyle style) {
    if (a.is_zero()) return 0;
    PbwForm form = pbw_decompose(a, style);
    std::optional<int> deg;
    for (const PbwEntry& e : form.entries) {
        auto gd = e.coeff.graded_degree();
        if (!gd) return std::nullopt;
        int d = *gd + word_degree(basis_word(e.w, a.flavor, style), e.source);
        if (!deg) {
            deg = d;
        } else if (*deg != d) {
            return std::nullopt;
        }
    }
    return deg;
}

KlrOp omega(const KlrOp& a, WordStyle style) {
    KlrOp r(a.nu, a.flavor);
    for (const PbwEntry& e : pbw_decompose(a, style).entries) {
        KlrOp x(a.nu, a.flavor);
        x.add_term(e.w.act(e.source), SPerm::identity(a.m), e.coeff);
        for (int letter : basis_word(e.w, a.flavor, style))
            x = letter_op(letter, a.nu, a.flavor) * x;
        r = r + gen_idem(e.source, a.flavor) * x;
    }
    return r;
}

KlrOp gamma(const KlrOp& a) {
    if (a.m == 0) return a;
    SPerm eps = SPerm::eps1(a.m);
    KlrOp r(a.nu, a.flavor);
    for (const auto& [key, f] : a.terms)
        r.add_term(eps.act(key.out), eps * key.w * eps, weyl_act(eps, f));
    return r;
}

bool is_central(const KlrOp& a) {
    std::vector<KlrOp> gens;
    for (const ThetaSeq& i : sequences_of(a.nu)) gens.push_back(gen_idem(i, a.flavor));
    for (int l = 1; l <= a.m; ++l) gens.push_back(gen_kappa(l, a.nu, a.flavor));
    if (a.m >= 2) {
        int k0 = a.flavor == Flavor::TypeD ? 0 : 1;
        for (int k = k0; k <= a.m - 1; ++k) gens.push_back(gen_sigma(k, a.nu, a.flavor));
    }
    if (a.flavor == Flavor::TypeB && a.m >= 1) gens.push_back(gen_pi1(a.nu));
    for (const KlrOp& g : gens)
        if (!(a * g == g * a)) return false;
    return true;
}

bool center_test(const Poly& f, const DimVec& nu) {
    KlrOp z = diagonal_op(f, nu, Flavor::TypeD);
    int m = nu.rank();
    if (m < 2) return true;
    for (int k = 0; k <= m - 1; ++k) {
        KlrOp s = gen_sigma(k, nu, Flavor::TypeD);
        if (!(z * s == s * z)) return false;
    }
    return true;
}

namespace {

struct RelationChecker {
    const DimVec& nu;
    Flavor fl;
    const RelationOptions& opt;
    RelationReport& rep;
    int m;
    std::vector<ThetaSeq> seqs;
    std::vector<int> sletters;
    std::vector<KlrOp> sigma;  // indexed by letter
    std::vector<KlrOp> kap;    // indexed by l - 1

    RelationChecker(const DimVec& nu_, Flavor f, const RelationOptions& o, RelationReport& r)
        : nu(nu_), fl(f), opt(o), rep(r), m(nu_.rank()), seqs(sequences_of(nu_)) {
        if (m >= 2)
            for (int k = fl == Flavor::TypeD ? 0 : 1; k <= m - 1; ++k) sletters.push_back(k);
        sigma.resize(static_cast<size_t>(m));
        for (int k : sletters)
            sigma[static_cast<size_t>(k)] = gen_sigma(k, nu, fl, opt.mutate_sigma);
        for (int l = 1; l <= m; ++l) kap.push_back(gen_kappa(l, nu, fl));
    }

    bool full() const { return static_cast<int>(rep.failures.size()) >= opt.max_failures; }

    void check(const KlrOp& lhs, const KlrOp& rhs, const char* relation, std::string detail) {
        if (full()) return;
        ++rep.checked;
        if (lhs == rhs) return;
        rep.ok = false;
        rep.failures.push_back(RelationFailure{relation, std::move(detail)});
    }

    void idempotents() {
        for (const ThetaSeq& i : seqs) {
            KlrOp ii = gen_idem(i, fl);
            for (const ThetaSeq& j : seqs) {
                KlrOp prod = ii * gen_idem(j, fl);
                check(prod, i == j ? ii : KlrOp(nu, fl), "idempotent",
                      i.to_string() + " * " + j.to_string());
                if (full()) return;
            }
        }
    }

    void block_moves() {
        for (int k : sletters)
            for (const ThetaSeq& i : seqs) {
                check(sigma[static_cast<size_t>(k)] * gen_idem(i, fl),
                      gen_idem(seq_apply_s(k, i), fl) * sigma[static_cast<size_t>(k)],
                      "crossing-block", "k=" + std::to_string(k) + " " + i.to_string());
                if (full()) return;
            }
        for (int l = 1; l <= m; ++l)
            for (const ThetaSeq& i : seqs) {
                check(kap[static_cast<size_t>(l - 1)] * gen_idem(i, fl),
                      gen_idem(i, fl) * kap[static_cast<size_t>(l - 1)], "kappa-block",
                      "l=" + std::to_string(l) + " " + i.to_string());
                if (full()) return;
            }
    }

    void kappa_commute() {
        for (int l = 1; l <= m; ++l)
            for (int l2 = l + 1; l2 <= m; ++l2) {
                check(kap[static_cast<size_t>(l - 1)] * kap[static_cast<size_t>(l2 - 1)],
                      kap[static_cast<size_t>(l2 - 1)] * kap[static_cast<size_t>(l - 1)],
                      "kappa-commute", "l=" + std::to_string(l) + ",l'=" + std::to_string(l2));
                if (full()) return;
            }
    }

    void quadratic() {
        for (int k : sletters) {
            const KlrOp& s = sigma[static_cast<size_t>(k)];
            KlrOp s2 = s * s;
            Crossing c = crossing_of(k, m);
            for (const ThetaSeq& i : seqs) {
                KlrOp rhs(nu, fl);
                Poly q = q_polynomial(i.at(c.from), i.at(c.to), c.v, c.u);
                if (!q.is_zero()) rhs.add_term(i, SPerm::identity(m), RatFn(q));
                check(s2 * gen_idem(i, fl), rhs, "quadratic",
                      "k=" + std::to_string(k) + " " + i.to_string());
                if (full()) return;
            }
        }
    }

    void distant() {
        for (int k : sletters)
            for (int k2 : sletters) {
                if (k >= k2) continue;
                bool commutes = (k >= 1 && k2 > k + 1) || (k == 0 && k2 != 2);
                if (!commutes) continue;
                check(sigma[static_cast<size_t>(k)] * sigma[static_cast<size_t>(k2)],
                      sigma[static_cast<size_t>(k2)] * sigma[static_cast<size_t>(k)], "distant",
                      "k=" + std::to_string(k) + ",k'=" + std::to_string(k2));
                if (full()) return;
            }
    }

    void braid() {
        for (int k : sletters) {
            Crossing c = crossing_of(k, m);
            int r = c.to;  // the partner letter sigma_{s_k(k)}
            if (r > m - 1) continue;
            const KlrOp& sk = sigma[static_cast<size_t>(k)];
            const KlrOp& sr = sigma[static_cast<size_t>(r)];
            KlrOp lhs = sr * sk * sr - sk * sr * sk;
            Poly u = Poly::kappa_pos(r, m);
            Poly v1 = Poly::kappa_pos(k == 0 ? 0 : k, m);
            Poly v2 = Poly::kappa_pos(r + 1, m);
            for (const ThetaSeq& i : seqs) {
                KlrOp rhs(nu, fl);
                if (i.at(c.from) == i.at(r + 1)) {
                    Poly n = q_polynomial(i.at(c.from), i.at(c.to), u, v1) -
                             q_polynomial(i.at(c.from), i.at(c.to), u, v2);
                    auto q = exact_div(n, v1 - v2);
                    if (!q) throw std::logic_error("braid correction is not polynomial");
                    if (!q->is_zero()) rhs.add_term(i, SPerm::identity(m), RatFn(*q));
                }
                check(lhs * gen_idem(i, fl), rhs, "braid",
                      "k=" + std::to_string(k) + " " + i.to_string());
                if (full()) return;
            }
        }
    }

    void straightening() {
        for (int k : sletters) {
            Crossing c = crossing_of(k, m);
            SPerm sk = SPerm::gen_s(k, m);
            for (int l = 1; l <= m; ++l) {
                KlrOp moved = diagonal_op(Poly::kappa_pos(sk.act_pos(l), m), nu, fl);
                KlrOp lhs = sigma[static_cast<size_t>(k)] * kap[static_cast<size_t>(l - 1)] -
                            moved * sigma[static_cast<size_t>(k)];
                // The correction is the exact quotient of the kappa jump at
                // slot l by the kappa jump across the crossing: 0 or +-1.
                // (At k = 0 the mirrored slot moves too, so both l = 1 and
                // l = 2 pick up a correction.)
                Poly jump = Poly::kappa_pos(sk.act_pos(l), m) - Poly::kappa_pos(l, m);
                auto unit = exact_div(jump, c.u - c.v);
                for (const ThetaSeq& i : seqs) {
                    KlrOp rhs(nu, fl);
                    if (i.at(c.from) == i.at(c.to) && unit && !unit->is_zero())
                        rhs = gen_idem(i, fl) * unit->constant_value();
                    check(lhs * gen_idem(i, fl), rhs, "straightening",
                          "k=" + std::to_string(k) + ",l=" + std::to_string(l) + " " +
                              i.to_string());
                    if (full()) return;
                }
            }
        }
    }

    void flip_relations() {
        KlrOp pi = gen_pi1(nu);
        KlrOp one = gen_idem_total(nu, fl);
        check(pi * pi, one, "flip-square", "");
        SPerm eps = SPerm::eps1(m);
        for (const ThetaSeq& i : seqs) {
            check(pi * gen_idem(i, fl) * pi, gen_idem(eps.act(i), fl), "flip-block",
                  i.to_string());
            if (full()) return;
        }
        for (int l = 1; l <= m; ++l) {
            KlrOp rhs = diagonal_op(Poly::kappa_pos(eps.act_pos(l), m), nu, fl);
            check(pi * kap[static_cast<size_t>(l - 1)] * pi, rhs, "flip-kappa",
                  "l=" + std::to_string(l));
            if (full()) return;
        }
        if (m >= 2) {
            const KlrOp& s1 = sigma[1];
            check((pi * s1) * (pi * s1), (s1 * pi) * (s1 * pi), "flip-crossing-braid", "");
            for (int k = 2; k <= m - 1; ++k) {
                check(pi * sigma[static_cast<size_t>(k)] * pi, sigma[static_cast<size_t>(k)],
                      "flip-crossing-commute", "k=" + std::to_string(k));
                if (full()) return;
            }
            check(gen_sigma(0, nu, fl, opt.mutate_sigma), pi * s1 * pi, "twisted-crossing", "");
        }
    }
};

}  // namespace

RelationReport verify_relations(const DimVec& nu, Flavor f, const RelationOptions& opt) {
    RelationReport rep;
    RelationChecker chk(nu, f, opt, rep);
    chk.idempotents();
    chk.block_moves();
    chk.kappa_commute();
    chk.quadratic();
    chk.distant();
    chk.braid();
    chk.straightening();
    if (f == Flavor::TypeB && nu.rank() >= 1) chk.flip_relations();
    return rep;
}

}  // namespace klrd
