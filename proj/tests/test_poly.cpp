#include <doctest.h>

#include <algorithm>

#include "gb/poly.hpp"

using namespace gb;

namespace {
QPoly qp(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return QPoly(std::move(c));
}
}  // namespace

TEST_CASE("basic polynomial arithmetic") {
    QPoly f = qp({1, 2, 1});  // (x+1)^2
    CHECK((qp({1, 1}) * qp({1, 1})) == f);
    CHECK(f.degree() == 2);
    CHECK(f.eval(Rat(2)) == 9);
    CHECK(f.derivative() == qp({2, 2}));
    CHECK((f - f).is_zero());
    auto [q, r] = divmod(f, qp({1, 1}));
    CHECK(q == qp({1, 1}));
    CHECK(r.is_zero());
    CHECK(poly_gcd(qp({-1, 0, 1}), qp({1, 1})) == qp({1, 1}));  // monic gcd
}

TEST_CASE("resultant convention: f-rows first") {
    // res(x - a, x - b) = a - b under this row order
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b)
            CHECK(resultant(qp({-a, 1}), qp({-b, 1})) == Rat(a - b));
    // res(f, g) = lc(f)^{deg g} lc(g)^{deg f} prod (alpha_i - beta_j)
    CHECK(resultant(qp({-1, 0, 1}), qp({-4, 0, 1})) == 9);  // (1-2)(1+2)(-1-2)(-1+2)
}

TEST_CASE("discriminant") {
    // disc(x^3 + a x + b) = -4a^3 - 27b^2
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            QPoly f = qp({b, a, 0, 1});
            CHECK(discriminant(f) == Rat(-4 * a * a * a - 27 * b * b));
        }
    // disc(ax^2 + bx + c) = b^2 - 4ac
    CHECK(discriminant(qp({3, 5, 2})) == Rat(25 - 24));
    // the curve y^2 = x^3 - 195/16 x + 647/32: disc = -27 * 8999 / 64
    QPoly cubic({Rat(647, 32), Rat(-195, 16), Rat(0), Rat(1)});
    CHECK(discriminant(cubic) == Rat(-242973, 64));
}

TEST_CASE("gauss valuation") {
    QPoly f({Rat(3, 4), Rat(6), Rat(12)});
    CHECK(gauss_valuation(f, Int(2)) == -2);
    CHECK(gauss_valuation(f, Int(3)) == 1);
    CHECK(gauss_valuation(f, Int(5)) == 0);
}

TEST_CASE("reduction mod p") {
    QPoly cubic({Rat(647, 32), Rat(-195, 16), Rat(0), Rat(1)});
    // 647/32 = 1 mod 5 (32^{-1} = 3), -195/16 = 0 mod 5
    CHECK(reduce_mod_p(cubic, Int(5)) == FpPoly(Int(5), {Int(1), Int(0), Int(0), Int(1)}));
    CHECK_THROWS_AS(reduce_mod_p(cubic, Int(2)), std::invalid_argument);
}

TEST_CASE("factor_mod_p: multiply-back and irreducibility spot checks") {
    for (long pl : {2L, 3L, 5L, 13L}) {
        Int p(pl);
        // a few fixed polynomials per p
        std::vector<FpPoly> polys = {
            FpPoly(p, {Int(1), Int(1), Int(0), Int(1), Int(1)}),
            FpPoly(p, {Int(0), Int(1), Int(1)}) * FpPoly(p, {Int(1), Int(1)}),
            FpPoly(p, {Int(pl - 1), Int(0), Int(0), Int(0), Int(0), Int(0), Int(1)}),
        };
        for (const FpPoly& f : polys) {
            auto factors = factor_mod_p(f);
            FpPoly prod = FpPoly::constant(p, f.lc());
            for (const auto& [g, m] : factors) {
                CHECK(g.lc() == 1);
                for (int i = 0; i < m; ++i) prod = prod * g;
                // irreducibility: no roots for deg <= 3 via exhaustive search
                if (g.degree() >= 2 && g.degree() <= 3)
                    for (long x = 0; x < pl; ++x) CHECK(g.eval(Int(x)) != 0);
            }
            CHECK(prod == f);
        }
    }
    // x^2 + 1 mod 5 = (x+2)(x+3)
    auto f = factor_mod_p(FpPoly(Int(5), {Int(1), Int(0), Int(1)}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first == FpPoly(Int(5), {Int(2), Int(1)}));
    CHECK(f[1].first == FpPoly(Int(5), {Int(3), Int(1)}));
    // determinism
    CHECK(factor_mod_p(FpPoly(Int(13), {Int(2), Int(0), Int(0), Int(1)})) ==
          factor_mod_p(FpPoly(Int(13), {Int(2), Int(0), Int(0), Int(1)})));
}

TEST_CASE("rational roots") {
    QPoly f = qp({6, 1, -4, 1});  // roots 3, 2+sqrt... check: x=3: 27-36+3+6=0
    auto roots = rational_roots(f);
    CHECK(std::find(roots.begin(), roots.end(), Rat(3)) != roots.end());
    CHECK(rational_roots(qp({1, 0, 1})).empty());
    auto halves = rational_roots(qp({-1, 0, 4}));  // 4x^2 = 1
    CHECK(halves.size() == 2);
    CHECK(std::find(halves.begin(), halves.end(), Rat(1, 2)) != halves.end());
}

TEST_CASE("factorization over Q") {
    // quartic with a quadratic split: x^4 + 4 = (x^2-2x+2)(x^2+2x+2)
    auto f = factor_over_Q(qp({4, 0, 0, 0, 1}));
    REQUIRE(f.size() == 2);
    CHECK(f[0].second == 1);
    CHECK((f[0].first * f[1].first) == qp({4, 0, 0, 0, 1}));
    // irreducible quartic
    auto g = factor_over_Q(qp({1, 1, 1, 1, 1}));
    REQUIRE(g.size() == 1);
    CHECK(g[0].first.degree() == 4);
    // multiplicities and content
    auto h = factor_over_Q(qp({0, 0, 2, 4, 2}));  // 2x^2 (x+1)^2
    REQUIRE(h.size() == 2);
    for (const auto& [p, m] : h) CHECK(m == 2);
    // psi_3 of y^2 = x^3 + 16: 3x(x+4)(x^2-4x+16) up to content
    QPoly psi({Rat(0), Rat(192), Rat(0), Rat(0), Rat(3)});
    auto k = factor_over_Q(psi);
    REQUIRE(k.size() == 3);
    auto has = [&](const QPoly& p) {
        for (const auto& [q, m] : k)
            if (q == p && m == 1) return true;
        return false;
    };
    CHECK(has(qp({0, 1})));
    CHECK(has(qp({4, 1})));
    CHECK(has(qp({16, -4, 1})));
}

TEST_CASE("irreducibility over Q") {
    CHECK(is_irreducible_over_Q(qp({1, 1})));
    CHECK(is_irreducible_over_Q(qp({1, 0, 1})));
    CHECK(is_irreducible_over_Q(qp({-2, 0, 0, 1})));
    CHECK_FALSE(is_irreducible_over_Q(qp({-1, 0, 1})));
    CHECK(is_irreducible_over_Q(qp({1, 1, 1, 1, 1})));
    // degree 5: certified irreducible mod 2
    CHECK(is_irreducible_over_Q(qp({1, 0, 1, 0, 0, 1})));
    CHECK_FALSE(is_irreducible_over_Q(qp({0, 1, 0, 1, 0, 1})));  // root 0
}

TEST_CASE("powmod") {
    FpPoly mod(Int(7), {Int(1), Int(0), Int(1)});  // x^2 + 1
    FpPoly x = FpPoly::x(Int(7));
    CHECK(powmod(x, Int(2), mod) == FpPoly(Int(7), {Int(6)}));  // x^2 = -1
    CHECK(powmod(x, Int(49), mod) == powmod(powmod(x, Int(7), mod), Int(7), mod));
}
