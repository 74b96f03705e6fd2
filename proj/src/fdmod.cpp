#include "klrd/fdmod.hpp"

#include <algorithm>
#include <stdexcept>

namespace klrd {

namespace {

ThetaSeq extend(const ThetaSeq& c, const Vertex& j) {
    std::vector<Vertex> r = c.right;
    r.push_back(j);
    return ThetaSeq(std::move(r));
}

ThetaSeq strip(const ThetaSeq& b) {
    std::vector<Vertex> r = b.right;
    r.pop_back();
    return ThetaSeq(std::move(r));
}

std::vector<int> crossing_letters(int m) {
    std::vector<int> ks;
    if (m >= 2)
        for (int k = 0; k < m; ++k) ks.push_back(k);
    return ks;
}

}  // namespace

int FDModule::block_dim(const ThetaSeq& s) const {
    auto it = dim.find(s);
    return it == dim.end() ? 0 : it->second;
}

int FDModule::total_dim() const {
    if (m == 0) return part_plus + part_minus;
    int t = 0;
    for (const auto& [s, d] : dim) t += d;
    return t;
}

Matrix FDModule::kappa_mat(int l, const ThetaSeq& s) const {
    auto it = kappa.find({l, s});
    if (it != kappa.end()) return it->second;
    int d = block_dim(s);
    return Matrix(d, d);
}

Matrix FDModule::sigma_mat(int k, const ThetaSeq& s) const {
    auto it = sigma.find({k, s});
    if (it != sigma.end()) return it->second;
    return Matrix(block_dim(seq_apply_s(k, s)), block_dim(s));
}

Matrix FDModule::eval_poly(const Poly& f, const ThetaSeq& s) const {
    int d = block_dim(s);
    Matrix out(d, d);
    if (f.nvars != m) throw std::invalid_argument("eval_poly: variable count mismatch");
    for (const auto& [mono, coeff] : f.t) {
        Matrix term = Matrix::ident(d) * coeff;
        for (int l = 1; l <= m; ++l)
            for (int e = 0; e < mono.e[static_cast<size_t>(l - 1)]; ++e)
                term = kappa_mat(l, s) * term;
        out = out + term;
    }
    return out;
}

ModuleCheck check_fdmodule(const FDModule& M) {
    ModuleCheck rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.failures.size() < 16) rep.failures.push_back(what);
    };
    auto check = [&](const Matrix& lhs, const Matrix& rhs, const std::string& what) {
        ++rep.checked;
        if (!(lhs == rhs)) fail(what);
    };
    if (M.m == 0) {
        if (M.part_plus < 0 || M.part_minus < 0) fail("negative rank-zero multiplicity");
        if (!M.dim.empty()) fail("rank-zero module with blocks");
        return rep;
    }
    int m = M.m;
    for (const auto& [s, d] : M.dim) {
        if (d <= 0) fail("empty block stored: " + s.to_string());
        if (s.dimvec() != M.nu) fail("block outside nu: " + s.to_string());
    }
    // kappas: square, nilpotent, commuting
    for (const auto& [s, d] : M.dim) {
        for (int l = 1; l <= m; ++l) {
            Matrix K = M.kappa_mat(l, s);
            if (K.rows != d || K.cols != d) {
                fail("kappa shape at " + s.to_string());
                continue;
            }
            ++rep.checked;
            if (!K.pow(d).is_zero()) fail("kappa not nilpotent at " + s.to_string());
            for (int l2 = l + 1; l2 <= m; ++l2)
                check(K * M.kappa_mat(l2, s), M.kappa_mat(l2, s) * K,
                      "kappa-commute at " + s.to_string());
        }
    }
    std::vector<int> letters = crossing_letters(m);
    for (int k : letters) {
        int from = (k == 0) ? 0 : k;
        int to = (k == 0) ? 2 : k + 1;
        SPerm sk = SPerm::gen_s(k, m);
        Poly u = Poly::kappa_pos(from, m);
        Poly v = Poly::kappa_pos(to, m);
        for (const auto& [s, d] : M.dim) {
            ThetaSeq tgt = seq_apply_s(k, s);
            Matrix S = M.sigma_mat(k, s);
            if (S.rows != M.block_dim(tgt) || S.cols != d) {
                fail("sigma shape k=" + std::to_string(k) + " at " + s.to_string());
                continue;
            }
            // quadratic relation
            Poly Q = q_polynomial(s.at(from), s.at(to), v, u);
            check(M.sigma_mat(k, tgt) * S, M.eval_poly(Q, s),
                  "quadratic k=" + std::to_string(k) + " at " + s.to_string());
            // straightening
            for (int l = 1; l <= m; ++l) {
                Poly moved = Poly::kappa_pos(sk.act_pos(l), m);
                Matrix lhs = S * M.kappa_mat(l, s) - M.eval_poly(moved, tgt) * S;
                Matrix rhs(S.rows, S.cols);
                auto unit = exact_div(moved - Poly::kappa_pos(l, m), u - v);
                if (s.at(from) == s.at(to) && unit && !unit->is_zero())
                    rhs = Matrix::ident(d) * unit->constant_value();
                check(lhs, rhs,
                      "straightening k=" + std::to_string(k) + ",l=" + std::to_string(l) +
                          " at " + s.to_string());
            }
            // distant crossings commute
            for (int k2 : letters) {
                bool commutes = (k >= 1 && k2 > k + 1) || (k == 0 && k2 >= 1 && k2 != 2);
                if (!commutes) continue;
                ThetaSeq via2 = seq_apply_s(k2, s);
                check(M.sigma_mat(k, via2) * M.sigma_mat(k2, s),
                      M.sigma_mat(k2, tgt) * S,
                      "distant k=" + std::to_string(k) + ",k2=" + std::to_string(k2) + " at " +
                          s.to_string());
            }
            // braid with correction
            int r = to;
            if (r <= m - 1) {
                auto route3 = [&](int a, int b, int c, const ThetaSeq& src) {
                    ThetaSeq s1 = seq_apply_s(c, src);
                    ThetaSeq s2 = seq_apply_s(b, s1);
                    return M.sigma_mat(a, s2) * M.sigma_mat(b, s1) * M.sigma_mat(c, src);
                };
                Matrix lhs = route3(r, k, r, s) - route3(k, r, k, s);
                Matrix rhs(lhs.rows, lhs.cols);
                if (s.at(from) == s.at(r + 1)) {
                    Poly ur = Poly::kappa_pos(r, m);
                    Poly v1 = Poly::kappa_pos(from, m);
                    Poly v2 = Poly::kappa_pos(r + 1, m);
                    Poly n = q_polynomial(s.at(from), s.at(to), ur, v1) -
                             q_polynomial(s.at(from), s.at(to), ur, v2);
                    auto q = exact_div(n, v1 - v2);
                    if (!q) throw std::logic_error("braid correction is not polynomial");
                    if (!q->is_zero()) rhs = M.eval_poly(*q, s);
                }
                check(lhs, rhs, "braid k=" + std::to_string(k) + " at " + s.to_string());
            }
        }
    }
    return rep;
}

bool separated_labels(const ThetaSeq& seed) {
    int m = seed.rank();
    for (int k = 1; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l) {
            Vertex a = seed.at(k), b = seed.at(l);
            if (cartan_product(a, b) != 0 || cartan_product(a, b.theta()) != 0) return false;
        }
    return true;
}

FDModule permutation_module(const ThetaSeq& seed) {
    if (!separated_labels(seed))
        throw std::invalid_argument("permutation_module: labels are not separated");
    FDModule M;
    M.nu = seed.dimvec();
    M.m = seed.rank();
    std::vector<ThetaSeq> orbit = {seed};
    std::vector<int> letters = crossing_letters(M.m);
    for (size_t head = 0; head < orbit.size(); ++head)
        for (int k : letters) {
            ThetaSeq next = seq_apply_s(k, orbit[head]);
            if (std::find(orbit.begin(), orbit.end(), next) == orbit.end())
                orbit.push_back(next);
        }
    for (const ThetaSeq& s : orbit) {
        M.dim[s] = 1;
        for (int l = 1; l <= M.m; ++l) M.kappa[{l, s}] = Matrix(1, 1);
        for (int k : letters) M.sigma[{k, s}] = Matrix::ident(1);
    }
    return M;
}

FDModule truncated_module(const Vertex& i, int n) {
    if (n <= 0) throw std::invalid_argument("truncated_module: n must be positive");
    FDModule M;
    M.nu.add_pair(i);
    M.m = 1;
    ThetaSeq block({i});
    M.dim[block] = n;
    Matrix J(n, n);
    for (int r = 1; r < n; ++r) J.at(r, r - 1) = Scalar(1);
    M.kappa[{1, block}] = J;
    return M;
}

FDModule e_functor(const FDModule& M, const Vertex& i) {
    if (M.m == 0) throw std::invalid_argument("e_functor: already at rank zero");
    FDModule R;
    if (M.m == 1) {
        R.m = 0;
        R.part_plus = M.block_dim(ThetaSeq({i}));
        R.part_minus = M.block_dim(ThetaSeq({i.theta()}));
        return R;
    }
    int m = M.m - 1;
    R.m = m;
    if (M.nu.count(i) == 0) {
        // nu has no strand labelled i; the restriction is the zero module
        std::map<Vertex, int> shrunk;
        R.nu = DimVec(shrunk);
        return R;
    }
    std::map<Vertex, int> shrunk = M.nu.mult;
    --shrunk[i];
    --shrunk[i.theta()];
    R.nu = DimVec(shrunk);
    for (const auto& [s, d] : M.dim) {
        if (s.at(M.m) != i) continue;
        ThetaSeq c = strip(s);
        R.dim[c] = d;
        for (int l = 1; l <= m; ++l) R.kappa[{l, c}] = M.kappa_mat(l, s);
        for (int k : crossing_letters(m)) R.sigma[{k, c}] = M.sigma_mat(k, s);
    }
    return R;
}

namespace {

/// Evaluate an algebra element of the bottom-right corner (inputs and
/// outputs ending in the induced vertex, crossings fixing the last strand)
/// on the module M tensored with the one-dimensional top of the new strand
/// (its kappa acts by zero). Keys are (output block, input block) of M.
std::map<std::pair<ThetaSeq, ThetaSeq>, Matrix> eval_corner(const PbwForm& form,
                                                            const FDModule& M) {
    if (!form.in_algebra) throw std::logic_error("eval_corner: localized coefficient");
    int m = M.m;
    std::map<std::pair<ThetaSeq, ThetaSeq>, Matrix> out;
    for (const PbwEntry& e : form.entries) {
        if (e.w.act_pos(m + 1) != m + 1)
            throw std::logic_error("eval_corner: crossing moves the new strand");
        ThetaSeq c_in = strip(e.source);
        int d_in = M.block_dim(c_in);
        if (d_in == 0) continue;
        ThetaSeq c_out = strip(e.w.act(e.source));
        // route the crossings through M, rightmost letter first
        SPerm wr = restrict_rank(e.w, m);
        std::vector<int> word = basis_word(wr, Flavor::TypeD, WordStyle::Nested);
        Matrix route = Matrix::ident(d_in);
        ThetaSeq cur = c_in;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            route = M.sigma_mat(*it, cur) * route;
            cur = seq_apply_s(*it, cur);
        }
        if (cur != c_out) throw std::logic_error("eval_corner: route mismatch");
        // drop monomials touching the new strand's kappa, evaluate the rest
        const Poly& g = e.coeff.as_poly();
        Poly reduced(m);
        for (const auto& [mono, coeff] : g.t) {
            if (mono.e[static_cast<size_t>(m)] != 0) continue;
            Mono cut(m);
            for (int v = 0; v < m; ++v) cut.e[static_cast<size_t>(v)] = mono.e[static_cast<size_t>(v)];
            reduced.t[cut] = coeff;
        }
        Matrix mat = M.eval_poly(reduced, c_out) * route;
        auto key = std::make_pair(c_out, c_in);
        auto it = out.find(key);
        if (it == out.end())
            out.emplace(key, mat);
        else
            it->second = it->second + mat;
    }
    return out;
}

}  // namespace

FDModule f_functor(const FDModule& M, const Vertex& i) {
    Flavor D = Flavor::TypeD;
    if (M.m == 0) {
        FDModule F;
        F.m = 1;
        F.nu.add_pair(i);
        if (M.part_plus > 0) {
            ThetaSeq b({i});
            F.dim[b] = M.part_plus;
            F.kappa[{1, b}] = Matrix(M.part_plus, M.part_plus);
        }
        if (M.part_minus > 0) {
            ThetaSeq b({i.theta()});
            F.dim[b] = M.part_minus;
            F.kappa[{1, b}] = Matrix(M.part_minus, M.part_minus);
        }
        return F;
    }

    int m = M.m;
    int mm = m + 1;
    DimVec nu2 = M.nu;
    nu2.add_pair(i);
    std::vector<SPerm> reps = coset_reps_D_m1(m);

    // basis layout: y_w tensor (block c of M); the result block is w^{-1}(ci)
    struct Segment {
        ThetaSeq fblock;
        int offset;
    };
    std::map<std::pair<int, ThetaSeq>, Segment> seg;
    std::map<ThetaSeq, int> fdim;
    for (int ri = 0; ri < static_cast<int>(reps.size()); ++ri) {
        SPerm winv = reps[static_cast<size_t>(ri)].inverse();
        for (const auto& [c, d] : M.dim) {
            ThetaSeq t = winv.act(extend(c, i));
            seg[{ri, c}] = Segment{t, fdim[t]};
            fdim[t] += d;
        }
    }

    FDModule F;
    F.nu = nu2;
    F.m = mm;
    for (const auto& [t, d] : fdim)
        if (d > 0) F.dim[t] = d;

    if (M.dim.empty()) return F;

    // module-restricted corner projector
    KlrOp corner(nu2, D);
    for (const auto& [c, d] : M.dim)
        corner = corner + gen_idem(extend(c, i), D);

    // the expansion elements: corner * sigma-word of each representative
    std::vector<KlrOp> cw;
    cw.reserve(reps.size());
    for (const SPerm& w : reps) {
        KlrOp x = corner;
        std::vector<int> word = basis_word(w, D, WordStyle::Nested);
        for (int letter : word) x = x * gen_sigma(letter, nu2, D);
        cw.push_back(std::move(x));
    }

    struct GenSpec {
        bool is_kappa;
        int idx;
        KlrOp op;
    };
    std::vector<GenSpec> gens;
    for (int l = 1; l <= mm; ++l) gens.push_back({true, l, gen_kappa(l, nu2, D)});
    for (int k = 0; k < mm; ++k) gens.push_back({false, k, gen_sigma(k, nu2, D)});

    for (const GenSpec& gen : gens) {
        // allocate the result matrices per input block
        std::map<ThetaSeq, Matrix> mat;
        for (const auto& [t, d] : F.dim) {
            int rows = gen.is_kappa ? d : F.dim.count(seq_apply_s(gen.idx, t))
                                              ? fdim[seq_apply_s(gen.idx, t)]
                                              : 0;
            mat.emplace(t, Matrix(rows, d));
        }
        for (int ri = 0; ri < static_cast<int>(reps.size()); ++ri) {
            KlrOp P = cw[static_cast<size_t>(ri)] * gen.op;
            PbwForm form = pbw_decompose(P, WordStyle::Nested);
            // regroup by the coset factor of each basis permutation
            std::map<int, KlrOp> expansion;
            for (const PbwEntry& e : form.entries) {
                int ri2 = -1;
                SPerm u;
                for (int cand = 0; cand < static_cast<int>(reps.size()); ++cand) {
                    SPerm trial = e.w * reps[static_cast<size_t>(cand)].inverse();
                    if (trial.act_pos(mm) == mm) {
                        ri2 = cand;
                        u = trial;
                        break;
                    }
                }
                if (ri2 < 0) throw std::logic_error("f_functor: no coset factor");
                ThetaSeq mid = reps[static_cast<size_t>(ri2)].act(e.source);
                KlrOp lift(nu2, D);
                lift.add_term(e.w.act(e.source), SPerm::identity(mm), e.coeff);
                KlrOp piece = lift * pbw_element(u, mid, D, WordStyle::Nested);
                auto it = expansion.find(ri2);
                if (it == expansion.end())
                    expansion.emplace(ri2, piece);
                else
                    it->second = it->second + piece;
            }
            for (const auto& [ri2, omega_r] : expansion) {
                KlrOp r = omega(omega_r, WordStyle::Nested);
                if (r.is_zero()) continue;
                auto mats = eval_corner(pbw_decompose(r, WordStyle::Nested), M);
                for (const auto& [key, comp] : mats) {
                    if (comp.is_zero()) continue;
                    const Segment& in = seg.at({ri, key.second});
                    const Segment& outp = seg.at({ri2, key.first});
                    ThetaSeq expected =
                        gen.is_kappa ? in.fblock : seq_apply_s(gen.idx, in.fblock);
                    if (outp.fblock != expected)
                        throw std::logic_error("f_functor: generator left its block");
                    Matrix& target = mat.at(in.fblock);
                    for (int rr = 0; rr < comp.rows; ++rr)
                        for (int cc = 0; cc < comp.cols; ++cc)
                            target.at(outp.offset + rr, in.offset + cc) =
                                target.at(outp.offset + rr, in.offset + cc) + comp.at(rr, cc);
                }
            }
        }
        for (auto& [t, block_mat] : mat) {
            if (block_mat.rows == 0 || block_mat.cols == 0) continue;
            if (gen.is_kappa)
                F.kappa[{gen.idx, t}] = std::move(block_mat);
            else
                F.sigma[{gen.idx, t}] = std::move(block_mat);
        }
    }
    return F;
}

std::map<ThetaSeq, int> character(const FDModule& M) { return M.dim; }

std::set<int> part_support(const FDModule& M) {
    std::set<int> parts;
    if (M.m == 0) {
        if (M.part_plus > 0) parts.insert(1);
        if (M.part_minus > 0) parts.insert(-1);
        return parts;
    }
    OrbitSplit split = orbit_split(M.nu);
    for (const auto& [s, d] : M.dim)
        if (d > 0) parts.insert(split.is_plus(s) ? 1 : -1);
    return parts;
}

int part_sign(const DimVec& nu, const Vertex& i) {
    DimVec nu2 = nu;
    nu2.add_pair(i);
    OrbitSplit split2 = orbit_split(nu2);
    if (nu.total() == 0) return split2.is_plus(ThetaSeq({i})) ? 1 : -1;
    int sign = 0;
    for (const ThetaSeq& a : orbit_split(nu).plus) {
        ThetaSeq ext = extend(a, i);
        int s = split2.is_plus(ext) ? 1 : -1;
        if (sign == 0) sign = s;
        if (sign != s) throw std::logic_error("part_sign: inconsistent orbit extension");
    }
    return sign;
}

}  // namespace klrd
