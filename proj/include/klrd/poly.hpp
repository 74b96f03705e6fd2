#pragma once

#include "klrd/scalar.hpp"
#include "klrd/vertex.hpp"
#include "klrd/weyl.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace klrd {

/// Exponent vector for the variables kappa_1..kappa_n, graded-lex ordered.
struct Mono {
    std::vector<int> e;

    explicit Mono(int nvars) : e(static_cast<size_t>(nvars), 0) {}
    explicit Mono(std::vector<int> exps) : e(std::move(exps)) {}

    int total() const;
    bool operator==(const Mono& o) const { return e == o.e; }
    bool operator<(const Mono& o) const;
    Mono operator*(const Mono& o) const;
    bool divides(const Mono& o) const;
    Mono divided_by(const Mono& o) const;
};

/// Sparse polynomial in kappa_1..kappa_n over Q(p). Each kappa has graded
/// degree 2, so the graded degree of a monomial is twice its exponent total.
struct Poly {
    int nvars = 0;
    std::map<Mono, Scalar> t;  // nonzero coefficients only

    Poly() = default;
    explicit Poly(int nv) : nvars(nv) {}

    static Poly constant(const Scalar& c, int nvars);
    static Poly kappa(int l, int nvars);  // the variable kappa_l, 1 <= l <= nvars
    /// kappa at a signed position: q >= 1 gives kappa_q, q <= 0 gives -kappa_{1-q}.
    static Poly kappa_pos(int q, int nvars);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    Scalar constant_value() const;  // requires is_constant()

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    bool operator==(const Poly& o) const { return nvars == o.nvars && t == o.t; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
    bool operator<(const Poly& o) const;  // arbitrary total order (map keys)

    const Scalar& lead_coeff() const;
    const Mono& lead_mono() const;

    /// Graded degree when homogeneous (all monomials equal total), else nullopt.
    /// The zero polynomial reports degree given by fallback (default 0).
    std::optional<int> graded_degree() const;

    std::string to_string() const;  // debugging aid
};

/// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<Poly> exact_div(const Poly& a, const Poly& b);

/// Signed substitution action: variable kappa_l goes to the kappa at
/// position w(l), with kappa at a nonpositive position q equal to -kappa_{1-q}.
Poly weyl_act(const SPerm& w, const Poly& f);

/// Demazure-type operator: (kappa_k - kappa_{s_k(k)})^{-1} (s_k f - f), with
/// kappa_0 = -kappa_1 at k = 0. Always an exact polynomial quotient.
Poly divided_difference(int k, const Poly& f);

/// Invariance under every generator s_0..s_{m-1} (trivially true at m = 1).
bool is_D_invariant(const Poly& f);

/// Symmetrization sum over the D-type group (handy source of invariants).
Poly symmetrize_D(const Poly& f);

/// The deformation polynomial Q_{i,j}(u,v) = (-1)^{arrows(i->j)} (u-v)^{-i.j}
/// for i != j, and 0 for i = j, evaluated at polynomial arguments u, v.
Poly q_polynomial(const Vertex& i, const Vertex& j, const Poly& u, const Poly& v);

}  // namespace klrd
