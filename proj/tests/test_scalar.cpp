#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "klrd/scalar.hpp"

using namespace klrd;

namespace {

ZPoly zp(std::initializer_list<long long> coeffs) {
    ZPoly f;
    for (long long c : coeffs) f.c.emplace_back(c);
    f.trim();
    return f;
}

// Reference gcd by repeated subtraction of scaled shifts, integer-primitive
// at every step. Slow but independent of the production routine.
ZPoly naive_gcd(ZPoly a, ZPoly b) {
    auto primitive = [](ZPoly f) {
        if (f.is_zero()) return f;
        f = f.divided_by_int(f.content());
        if (f.lead() < 0) f = -f;
        return f;
    };
    a = primitive(a);
    b = primitive(b);
    while (!b.is_zero()) {
        // Reduce a modulo b without leaving Z[p]: cross-multiply by leads.
        while (!a.is_zero() && a.deg() >= b.deg()) {
            ZPoly shift = ZPoly::monomial(a.deg() - b.deg(), a.lead());
            ZPoly scaled_a;
            for (const auto& x : a.c) scaled_a.c.push_back(x * b.lead());
            scaled_a.trim();
            a = primitive(scaled_a - shift * b);
        }
        std::swap(a, b);
    }
    return a;
}

}  // namespace

TEST_CASE("polynomial arithmetic and trimming") {
    ZPoly a = zp({1, 2});        // 1 + 2p
    ZPoly b = zp({-1, -2});      // -(1 + 2p)
    CHECK((a + b).is_zero());
    CHECK(a - a == ZPoly());
    CHECK((a * zp({0, 1})) == zp({0, 1, 2}));
    CHECK(zp({3}).deg() == 0);
    CHECK(ZPoly().deg() == -1);
    CHECK(zp({0, 0, 5}).lead() == 5);
}

TEST_CASE("content and integer division") {
    ZPoly f = zp({4, -6, 10});
    CHECK(f.content() == 2);
    CHECK(f.divided_by_int(BigInt(2)) == zp({2, -3, 5}));
    CHECK(ZPoly().content() == 0);
}

TEST_CASE("gcd agrees with the subtraction oracle") {
    // (p^2 - 1) and (p + 1)^2 share exactly (p + 1).
    ZPoly a = zp({-1, 0, 1});
    ZPoly b = zp({1, 2, 1});
    CHECK(naive_gcd(a, b) == zp({1, 1}));
    CHECK(ZPoly::gcd(a, b) == zp({1, 1}));

    // Content interacts with the primitive part: gcd(2p^2-2, 4p+4) = 2(p+1).
    CHECK(ZPoly::gcd(zp({-2, 0, 2}), zp({4, 4})) == zp({2, 2}));

    // Coprime pair.
    CHECK(ZPoly::gcd(zp({1, 1}), zp({-1, 1})) == zp({1}));

    // Random-ish products: gcd(g*u, g*v) with u, v coprime recovers g up to sign.
    ZPoly g = zp({3, 0, -1, 2});
    ZPoly u = zp({1, 5});
    ZPoly v = zp({-2, 0, 1});
    ZPoly got = ZPoly::gcd(g * u, g * v);
    ZPoly expect = g.lead() > 0 ? g : -g;
    CHECK(got == expect);
    CHECK(naive_gcd(g * u, g * v) == expect);
}

TEST_CASE("exact division") {
    ZPoly a = zp({-1, 0, 1});
    CHECK(ZPoly::exact_div(a, zp({1, 1})) == zp({-1, 1}));
    CHECK(ZPoly::exact_div(a, zp({-1, 1})) == zp({1, 1}));
    CHECK_THROWS_AS(ZPoly::exact_div(a, zp({1, 2})), std::domain_error);
    CHECK_THROWS_AS(ZPoly::exact_div(a, ZPoly()), std::domain_error);
}

TEST_CASE("scalar canonical form") {
    // (p^2 - 1) / (p - 1) reduces to p + 1.
    Scalar s(zp({-1, 0, 1}), zp({-1, 1}));
    CHECK(s == Scalar(zp({1, 1}), zp({1})));
    CHECK(s.to_string() == "1*p^1+1*p^0");

    // Denominator lead is forced positive.
    Scalar t(zp({1}), zp({0, -1}));
    CHECK(t.den == zp({0, 1}));
    CHECK(t.num == zp({-1}));

    // Integer content cancels too.
    Scalar u(zp({2, 2}), zp({4}));
    CHECK(u.num == zp({1, 1}));
    CHECK(u.den == zp({2}));
}

TEST_CASE("scalar arithmetic in Q(p)") {
    Scalar p = Scalar::p_power(1);
    Scalar pinv = Scalar::p_power(-1);
    CHECK(p * pinv == Scalar(1));
    CHECK(Scalar::p_power(-2) == Scalar(1) / (p * p));

    // (p - p^-1)(p + p^-1) = p^2 - p^-2.
    Scalar lhs = (p - pinv) * (p + pinv);
    Scalar rhs = Scalar::p_power(2) - Scalar::p_power(-2);
    CHECK(lhs == rhs);

    Scalar q = (p + Scalar(1)).inverse();
    CHECK(q * (p + Scalar(1)) == Scalar(1));
    CHECK_THROWS_AS(Scalar(0).inverse(), std::domain_error);

    // Field axioms on a small sample.
    Scalar a(zp({1, 2}), zp({3, 0, 1}));
    Scalar b(zp({-5}), zp({1, 1}));
    Scalar c = Scalar::p_power(3);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Scalar(0));
    CHECK((a / b) * b == a);
}

TEST_CASE("scalar parse round trip") {
    CHECK(Scalar::parse("2*p^3-1*p^1") == Scalar::p_power(3) * Scalar(2) - Scalar::p_power(1));
    CHECK(Scalar::parse("-3") == Scalar(-3));
    CHECK(Scalar::parse("0") == Scalar(0));
    CHECK(Scalar::parse("1/1*p^2") == Scalar::p_power(-2));
    Scalar s(zp({1, 1}), zp({0, 0, 3}));
    CHECK(Scalar::parse(s.to_string()) == s);
}
