#include <doctest.h>

#include "gb/residue.hpp"

using namespace gb;

namespace {
QPoly qp(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long v : coeffs) c.emplace_back(v);
    return QPoly(std::move(c));
}
RationalFunction rf(std::vector<long> num, std::vector<long> den = {1}) {
    return RationalFunction::of(qp(std::move(num)), qp(std::move(den)));
}
}  // namespace

TEST_CASE("geometric places") {
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    CHECK(vx.residue_degree() == 1);
    GeometricPlace vq = GeometricPlace::of(qp({1, 0, 1}));
    CHECK(vq.residue_degree() == 2);
    GeometricPlace inf = GeometricPlace::infinity();
    CHECK(inf.residue_degree() == 1);
    CHECK(inf < vx);  // infinity sorts first
    CHECK_THROWS_AS(GeometricPlace::of(qp({0, 2})), std::invalid_argument);     // not monic
    CHECK_THROWS_AS(GeometricPlace::of(qp({-1, 0, 1})), std::invalid_argument); // reducible
}

TEST_CASE("rational functions reduce with monic denominator") {
    RationalFunction f = rf({-1, 0, 1}, {-1, 1});  // (x^2-1)/(x-1) = x+1
    CHECK(f == rf({1, 1}));
    RationalFunction g = RationalFunction::of(qp({0, 1}), qp({2, 2}));
    CHECK(g.den == qp({1, 1}));
    CHECK(g.num == QPoly({Rat(0), Rat(1, 2)}));
    CHECK(g.inverse() * g == RationalFunction::constant(Rat(1)));
    CHECK(rf({0, 1}).pow(-2) == RationalFunction::of(qp({1}), qp({0, 0, 1})));
    CHECK_THROWS_AS(RationalFunction::of(qp({1}), QPoly()), std::invalid_argument);
}

TEST_CASE("valuations") {
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    GeometricPlace v1 = GeometricPlace::of(qp({-1, 1}));
    GeometricPlace inf = GeometricPlace::infinity();
    RationalFunction f = RationalFunction::of(qp({0, 0, 1}), qp({-1, 1}));  // x^2/(x-1)
    CHECK(place_valuation(f, vx) == 2);
    CHECK(place_valuation(f, v1) == -1);
    CHECK(place_valuation(f, inf) == -1);  // deg den - deg num
    CHECK(place_valuation(RationalFunction::constant(Rat(7)), inf) == 0);
}

TEST_CASE("triviality of residue classes") {
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    auto cls = [&](Rat c, long n) { return ResidueClass{vx, Int(n), QPoly::constant(c)}; };
    CHECK(cls(Rat(4), 2).is_trivial());
    CHECK(cls(Rat(1, 4), 2).is_trivial());
    CHECK_FALSE(cls(Rat(3), 2).is_trivial());
    CHECK_FALSE(cls(Rat(-1), 2).is_trivial());
    CHECK(cls(Rat(8), 3).is_trivial());
    CHECK(cls(Rat(-8), 3).is_trivial());
    CHECK_FALSE(cls(Rat(4), 3).is_trivial());

    // quadratic residue field Q(i), n = 2: -1 is a square there, 2 and x are not
    GeometricPlace vq = GeometricPlace::of(qp({1, 0, 1}));
    CHECK(ResidueClass{vq, Int(2), QPoly::constant(Rat(-1))}.is_trivial());
    CHECK_FALSE(ResidueClass{vq, Int(2), QPoly::constant(Rat(2))}.is_trivial());
    CHECK_FALSE(ResidueClass{vq, Int(2), qp({0, 1})}.is_trivial());
    // unsupported power test must refuse rather than guess
    CHECK_THROWS_AS((ResidueClass{vq, Int(3), qp({0, 1})}.is_trivial()), std::domain_error);
}

TEST_CASE("tame residues, pinned values") {
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    GeometricPlace inf = GeometricPlace::infinity();
    RationalFunction x = RationalFunction::x();

    // (3, x) at x: residue 3
    ResidueClass r = tame_residue(RationalFunction::constant(Rat(3)), x, vx, Int(2));
    CHECK(r.rep == QPoly::constant(Rat(3)));
    CHECK_FALSE(r.is_trivial());
    // (x, x) at x: residue -1
    CHECK(tame_residue(x, x, vx, Int(2)).rep == QPoly::constant(Rat(-1)));
    // (2, x): residue 2 at x, 1/2 at infinity -- the same class for n = 2
    ResidueClass at0 = tame_residue(RationalFunction::constant(Rat(2)), x, vx, Int(2));
    ResidueClass atinf = tame_residue(RationalFunction::constant(Rat(2)), x, inf, Int(2));
    CHECK(at0.rep == QPoly::constant(Rat(2)));
    CHECK(atinf.rep == QPoly::constant(Rat(1, 2)));
    CHECK_FALSE(atinf.is_trivial());
    // unit pairs have trivial residue
    CHECK(tame_residue(rf({1, 1}), rf({2, 1}), vx, Int(2)).is_trivial());
}

TEST_CASE("tame residue is bimultiplicative") {
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    RationalFunction u1 = rf({0, 1}), u2 = rf({3, 1}), v = rf({0, 0, 1}, {5, 1});
    Int n(2);
    ResidueClass lhs = tame_residue(u1 * u2, v, vx, n);
    ResidueClass rhs = tame_residue(u1, v, vx, n) * tame_residue(u2, v, vx, n);
    // the two classes agree: their product is trivial (n = 2, so rhs = rhs^{-1})
    CHECK((lhs * rhs).is_trivial());
}

TEST_CASE("symbol residues and ramification sets") {
    Int n(2);
    RationalFunction x = RationalFunction::x();
    SymbolAlgebra A{n, {{x, rf({-1, 1})}}};  // (x, x - 1)

    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    GeometricPlace v1 = GeometricPlace::of(qp({-1, 1}));
    GeometricPlace inf = GeometricPlace::infinity();

    // at x: residue is (x-1) evaluated at 0 = -1, nontrivial mod squares
    CHECK(symbol_residue(A, vx).rep == QPoly::constant(Rat(-1)));
    // at x-1: residue is x evaluated at 1 = 1, trivial
    CHECK(symbol_residue(A, v1).is_trivial());
    CHECK_FALSE(symbol_residue(A, inf).is_trivial());
    CHECK(ramification_set(A) == std::set<GeometricPlace>{vx, inf});

    // two slots multiply: (x, x-1) + (x, x-1) has trivial residues for n = 2
    SymbolAlgebra B{n, {{x, rf({-1, 1})}, {x, rf({-1, 1})}}};
    CHECK(ramification_set(B).empty());

    RamificationCount rc = genus_ramification_count(A);
    CHECK(rc.r == 2);
    CHECK(rc.provenance == Provenance::Computed);
    RamificationCount ac = asserted_ramification_count(Int(5));
    CHECK(ac.r == 5);
    CHECK(ac.provenance == Provenance::UserAsserted);
}

TEST_CASE("tame residue specializes units across the place") {
    // for f a unit at pi, tame(f, pi) is the class of f mod pi; with a
    // zero or pole it is (-1)^{w(f)} pi^{-w(f)} f mod pi
    GeometricPlace vx = GeometricPlace::of(qp({0, 1}));
    RationalFunction pi = RationalFunction::x();
    RationalFunction f = rf({0, -2, 1});  // x(x - 2)
    ResidueClass r = tame_residue(f, pi, vx, Int(2));
    CHECK(r.rep == QPoly::constant(Rat(2)));  // -(x-2) at 0
    RationalFunction unit = rf({3, 1});
    CHECK(tame_residue(unit, pi, vx, Int(2)).rep == QPoly::constant(Rat(3)));
}

TEST_CASE("unramified exponent filter") {
    PlaceSet S = place_set_over_Q({Int(2), Int(3)});
    std::vector<Rat> in = {Rat(12), Rat(5), Rat(25), Rat(7, 3), Rat(1, 3)};
    std::vector<Rat> kept = unramified_exponent_filter(S, Int(2), in);
    CHECK(kept == std::vector<Rat>{Rat(12), Rat(25), Rat(1, 3)});
    CHECK_THROWS_AS(unramified_exponent_filter(S, Int(2), {Rat(0)}), std::invalid_argument);
}

TEST_CASE("unit/class sequence over Q") {
    UnitClassSequenceReport r = check_unit_class_sequence(place_set_over_Q({Int(2)}), Int(2));
    CHECK(r.d_order == 4);
    CHECK(r.unit_quotient == 4);
    CHECK(r.pic_torsion == 1);
    CHECK(r.consistent);
    CHECK(check_unit_class_sequence(place_set_over_Q({}), Int(2)).d_order == 2);
    UnitClassSequenceReport r3 =
        check_unit_class_sequence(place_set_over_Q({Int(2), Int(3)}), Int(3));
    CHECK(r3.d_order == 9);
    CHECK(r3.consistent);
}
