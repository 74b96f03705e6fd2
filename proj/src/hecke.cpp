#include "klrd/hecke.hpp"

#include <stdexcept>

namespace klrd {

namespace {

/// kappa at position pos on one block; position 0 is -kappa_1.
Matrix kap(const FDModule& M, int pos, const ThetaSeq& s) {
    if (pos == 0) return Matrix(M.block_dim(s), M.block_dim(s)) - M.kappa_mat(1, s);
    return M.kappa_mat(pos, s);
}

/// exp(K) for a nilpotent K, an exact finite sum.
///
/// The torus dictionary needs a unit series f with f(u)f(-u) = 1, so that
/// X_1^{-1} again has the shape label^{-1} f(kappa at the mirrored slot).
/// The exponential is the canonical such choice; 1 + kappa only works when
/// kappa^2 = 0.
Matrix mat_exp(const Matrix& K) {
    Matrix term = Matrix::ident(K.rows), sum = term;
    Scalar fact(1);
    for (int j = 1; j <= K.rows; ++j) {
        term = term * K;
        if (term.is_zero()) break;
        fact = fact * Scalar(j);
        sum = sum + term * fact.inverse();
    }
    return sum;
}

/// (exp(U) - exp(V)) / (U - V) for commuting nilpotent U, V, computed as the
/// bivariate series sum_{n>=1} (1/n!) sum_{a+b=n-1} U^a V^b so the division
/// stays exact even where U - V is singular.
Matrix exp_diff_ratio(const Matrix& U, const Matrix& V) {
    int d = U.rows;
    std::vector<Matrix> pu{Matrix::ident(d)}, pv{Matrix::ident(d)};
    while (static_cast<int>(pu.size()) <= d) {
        Matrix nxt = pu.back() * U;
        if (nxt.is_zero()) break;
        pu.push_back(std::move(nxt));
    }
    while (static_cast<int>(pv.size()) <= d) {
        Matrix nxt = pv.back() * V;
        if (nxt.is_zero()) break;
        pv.push_back(std::move(nxt));
    }
    Matrix sum(d, d);
    Scalar fact(1);
    int top = static_cast<int>(pu.size() + pv.size()) - 1;
    for (int n = 1; n <= top; ++n) {
        fact = fact * Scalar(n);
        Matrix h(d, d);
        for (int a = 0; a < n && a < static_cast<int>(pu.size()); ++a) {
            int b = n - 1 - a;
            if (b >= static_cast<int>(pv.size())) continue;
            h = h + pu[static_cast<size_t>(a)] * pv[static_cast<size_t>(b)];
        }
        if (!h.is_zero()) sum = sum + h * fact.inverse();
    }
    return sum;
}

void scatter(Matrix& total, const Matrix& part, int row0, int col0) {
    for (int r = 0; r < part.rows; ++r)
        for (int c = 0; c < part.cols; ++c)
            total.at(row0 + r, col0 + c) = total.at(row0 + r, col0 + c) + part.at(r, c);
}

Matrix submatrix(const Matrix& total, const std::vector<int>& idx) {
    Matrix out(static_cast<int>(idx.size()), static_cast<int>(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
        for (size_t c = 0; c < idx.size(); ++c)
            out.at(static_cast<int>(r), static_cast<int>(c)) =
                total.at(idx[r], idx[c]);
    return out;
}

}  // namespace

int HeckeModule::total_dim() const {
    int t = 0;
    for (const auto& [s, d] : blocks) t += d;
    return t;
}

int HeckeModule::offset_of(const ThetaSeq& s) const {
    int off = 0;
    for (const auto& [b, d] : blocks) {
        if (b == s) return off;
        off += d;
    }
    return -1;
}

HeckeModule psi_transport(const FDModule& M) {
    if (M.m == 0) throw std::invalid_argument("psi_transport: rank zero has no torus");
    HeckeModule H;
    H.m = M.m;
    for (const auto& [s, d] : M.dim) H.blocks.emplace_back(s, d);
    int n = H.total_dim();
    int m = M.m;
    Scalar p = Scalar::p_power(1), pinv = Scalar::p_power(-1);

    for (int l = 1; l <= m; ++l) {
        Matrix Xl(n, n);
        for (const auto& [s, d] : H.blocks) {
            int off = H.offset_of(s);
            Matrix part = mat_exp(M.kappa_mat(l, s)) * s.at(l).as_scalar().inverse();
            scatter(Xl, part, off, off);
        }
        H.X.push_back(std::move(Xl));
    }
    if (m < 2) return H;

    for (int k = 0; k < m; ++k) {
        Matrix Tk(n, n);
        int kk = (k == 0) ? 0 : k;
        int r = (k == 0) ? 2 : k + 1;
        for (const auto& [s, d] : H.blocks) {
            ThetaSeq tgt = seq_apply_s(k, s);
            Matrix S = M.sigma_mat(k, s);
            Vertex a = s.at(kk), b = s.at(r);
            Matrix Ut = kap(M, kk, tgt), Vt = kap(M, r, tgt);
            Matrix fk_t = mat_exp(Ut), fs_t = mat_exp(Vt);
            Matrix crossing(S.rows, S.cols), diag(d, d);
            if (a == b) {
                crossing = (fk_t * p - fs_t * pinv) *
                           exp_diff_ratio(Ut, Vt).inverse() * S;
                diag = Matrix::ident(d) * p;
            } else if (b == a.times_p2()) {
                crossing = exp_diff_ratio(Ut, Vt) *
                           (fk_t * pinv - fs_t * p).inverse() * S;
                Matrix fk_s = mat_exp(kap(M, kk, s)), fs_s = mat_exp(kap(M, r, s));
                diag = fs_s * (fk_s * p - fs_s * pinv).inverse() *
                       (pinv * pinv - Scalar(1));
            } else {
                Scalar sa = a.as_scalar(), sb = b.as_scalar();
                crossing = (fk_t * (p * sa) - fs_t * (pinv * sb)) *
                           (fk_t * sa - fs_t * sb).inverse() * S;
                Matrix fk_s = mat_exp(kap(M, kk, s)), fs_s = mat_exp(kap(M, r, s));
                diag = fs_s * (fk_s * sb - fs_s * sa).inverse() * (sa * (pinv - p));
            }
            int off = H.offset_of(s);
            int off_t = H.offset_of(tgt);
            if (!crossing.is_zero()) {
                if (off_t < 0) throw std::logic_error("psi_transport: target block missing");
                scatter(Tk, crossing, off_t, off);
            }
            scatter(Tk, diag, off, off);
        }
        H.T.push_back(std::move(Tk));
    }
    return H;
}

ModuleCheck check_hecke(const HeckeModule& H) {
    ModuleCheck rep;
    auto check = [&](const Matrix& lhs, const Matrix& rhs, const std::string& what) {
        ++rep.checked;
        if (!(lhs == rhs)) {
            rep.ok = false;
            if (rep.failures.size() < 16) rep.failures.push_back(what);
        }
    };
    int m = H.m;
    int n = H.total_dim();
    Matrix I = Matrix::ident(n);
    Scalar p = Scalar::p_power(1), pinv = Scalar::p_power(-1);
    std::vector<Matrix> Xinv;
    for (int l = 1; l <= m; ++l) {
        Matrix inv = H.X[static_cast<size_t>(l - 1)].inverse();  // throws when singular
        check(H.X[static_cast<size_t>(l - 1)] * inv, I, "X invertible l=" + std::to_string(l));
        Xinv.push_back(std::move(inv));
    }
    for (int l = 1; l <= m; ++l)
        for (int l2 = l + 1; l2 <= m; ++l2)
            check(H.X[static_cast<size_t>(l - 1)] * H.X[static_cast<size_t>(l2 - 1)],
                  H.X[static_cast<size_t>(l2 - 1)] * H.X[static_cast<size_t>(l - 1)],
                  "X commute " + std::to_string(l) + "," + std::to_string(l2));
    if (m < 2) return rep;

    auto T = [&](int k) -> const Matrix& { return H.T[static_cast<size_t>(k)]; };
    auto X = [&](int l) -> const Matrix& { return H.X[static_cast<size_t>(l - 1)]; };
    for (int k = 0; k < m; ++k)
        check((T(k) - I * p) * (T(k) + I * pinv), Matrix(n, n),
              "quadratic k=" + std::to_string(k));
    for (int k = 1; k + 1 <= m - 1; ++k)
        check(T(k) * T(k + 1) * T(k), T(k + 1) * T(k) * T(k + 1),
              "braid k=" + std::to_string(k));
    if (m >= 3) check(T(0) * T(2) * T(0), T(2) * T(0) * T(2), "braid 0-2");
    for (int k = 1; k < m; ++k)
        for (int k2 = k + 2; k2 < m; ++k2)
            check(T(k) * T(k2), T(k2) * T(k),
                  "distant T " + std::to_string(k) + "," + std::to_string(k2));
    for (int k2 = 1; k2 < m; ++k2)
        if (k2 != 2)
            check(T(0) * T(k2), T(k2) * T(0), "distant T 0," + std::to_string(k2));
    // mixed relations
    check(T(0) * Xinv[0] * T(0), X(2), "mixed T0");
    for (int k = 1; k < m; ++k) check(T(k) * X(k) * T(k), X(k + 1), "mixed T" + std::to_string(k));
    for (int k = 1; k < m; ++k)
        for (int l = 1; l <= m; ++l)
            if (l != k && l != k + 1)
                check(T(k) * X(l), X(l) * T(k),
                      "T-X commute k=" + std::to_string(k) + ",l=" + std::to_string(l));
    for (int l = 3; l <= m; ++l)
        check(T(0) * X(l), X(l) * T(0), "T-X commute k=0,l=" + std::to_string(l));
    return rep;
}

Matrix intertwiner(const HeckeModule& H, int k) {
    if (H.m < 2 || k < 0 || k >= H.m)
        throw std::invalid_argument("intertwiner: generator out of range");
    int n = H.total_dim();
    Matrix I = Matrix::ident(n);
    Scalar p = Scalar::p_power(1), pinv = Scalar::p_power(-1);
    Matrix Y = (k == 0) ? H.X[0].inverse() : H.X[static_cast<size_t>(k - 1)];
    const Matrix& Z = (k == 0) ? H.X[1] : H.X[static_cast<size_t>(k)];
    return I + (Y - Z) * (Y * p - Z * pinv).inverse() *
                   (H.T[static_cast<size_t>(k)] - I * p);
}

int generalized_eigenspace_dim(const Matrix& A, const Scalar& ev) {
    if (A.rows != A.cols) throw std::invalid_argument("eigenspace of a non-square matrix");
    Matrix B = A - Matrix::ident(A.rows) * ev;
    return B.pow(A.rows).kernel_dim();
}

ModuleCheck compare_branching(const FDModule& M, const Vertex& i) {
    ModuleCheck rep;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        if (rep.failures.size() < 16) rep.failures.push_back(what);
    };
    if (M.m == 0) throw std::invalid_argument("compare_branching: rank zero");
    HeckeModule H = psi_transport(M);
    int m = M.m;
    int n = H.total_dim();
    Scalar ev = i.as_scalar().inverse();

    // coordinates of the blocks ending in i, in block order
    std::vector<int> idx;
    int off = 0;
    for (const auto& [s, d] : H.blocks) {
        if (s.at(m) == i)
            for (int t = 0; t < d; ++t) idx.push_back(off + t);
        off += d;
    }
    ++rep.checked;
    if (generalized_eigenspace_dim(H.X[static_cast<size_t>(m - 1)], ev) !=
        static_cast<int>(idx.size()))
        fail("eigenspace dimension differs from the block count");
    // those coordinates really are generalized eigenvectors
    Matrix B = (H.X[static_cast<size_t>(m - 1)] - Matrix::ident(n) * ev).pow(n);
    ++rep.checked;
    for (int c : idx)
        for (int r = 0; r < n; ++r)
            if (!B.at(r, c).is_zero()) {
                fail("block coordinate escapes the eigenspace");
                r = n;
                c = idx.back();
            }

    FDModule E = e_functor(M, i);
    if (m == 1) {
        ++rep.checked;
        if (E.part_plus != static_cast<int>(idx.size()))
            fail("rank-zero multiplicity differs from the eigenspace");
        return rep;
    }
    HeckeModule HE = psi_transport(E);
    ++rep.checked;
    if (HE.total_dim() != static_cast<int>(idx.size())) {
        fail("restricted dimension mismatch");
        return rep;
    }
    for (int l = 1; l <= m - 1; ++l) {
        ++rep.checked;
        if (!(submatrix(H.X[static_cast<size_t>(l - 1)], idx) ==
              HE.X[static_cast<size_t>(l - 1)]))
            fail("restricted X_" + std::to_string(l) + " differs");
    }
    for (int k = 0; k < m - 1 && m - 1 >= 2; ++k) {
        ++rep.checked;
        if (!(submatrix(H.T[static_cast<size_t>(k)], idx) == HE.T[static_cast<size_t>(k)]))
            fail("restricted T_" + std::to_string(k) + " differs");
    }
    return rep;
}

}  // namespace klrd
