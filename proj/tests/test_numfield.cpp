#include <doctest.h>

#include <algorithm>

#include "gb/numfield.hpp"
#include "oracles.hpp"

using namespace gb;

TEST_CASE("field invariants") {
    NumberField q = NumberField::rationals();
    CHECK(q.degree == 1);
    CHECK(q.real_places == 1);
    CHECK(q.roots_of_unity == 2);

    NumberField z3 = NumberField::zeta3();
    CHECK(z3.d == -3);
    CHECK(z3.discriminant == -3);
    CHECK(z3.real_places == 0);
    CHECK(z3.complex_places == 1);
    CHECK(z3.roots_of_unity == 6);

    NumberField z4 = NumberField::zeta4();
    CHECK(z4.d == -1);
    CHECK(z4.discriminant == -4);
    CHECK(z4.roots_of_unity == 4);

    NumberField k5 = NumberField::quadratic(Int(-5));
    CHECK(k5.discriminant == -20);  // -5 = 3 mod 4
    CHECK(NumberField::quadratic(Int(-7)).discriminant == -7);
    NumberField real = NumberField::quadratic(Int(5));
    CHECK(real.discriminant == 5);
    CHECK(real.real_places == 2);
    CHECK(real.roots_of_unity == 2);
    CHECK_THROWS_AS(NumberField::quadratic(Int(12)), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(NumberField::quadratic(Int(1)), std::invalid_argument);
}

TEST_CASE("prime splitting in quadratic fields") {
    NumberField z3 = NumberField::zeta3();
    auto check_one = [](const std::vector<PrimeAbove>& v, int e, int f, int count) {
        REQUIRE(v.size() == 1);
        CHECK(v[0].e == e);
        CHECK(v[0].f == f);
        CHECK(v[0].count == count);
    };
    check_one(split_prime(z3, Int(2)), 1, 2, 1);  // inert
    check_one(split_prime(z3, Int(3)), 2, 1, 1);  // ramified
    check_one(split_prime(z3, Int(7)), 1, 1, 2);  // split

    NumberField z4 = NumberField::zeta4();
    check_one(split_prime(z4, Int(2)), 2, 1, 1);
    check_one(split_prime(z4, Int(3)), 1, 2, 1);
    check_one(split_prime(z4, Int(5)), 1, 1, 2);

    NumberField k5 = NumberField::quadratic(Int(-5));
    check_one(split_prime(k5, Int(2)), 2, 1, 1);
    check_one(split_prime(k5, Int(5)), 2, 1, 1);
    check_one(split_prime(k5, Int(3)), 1, 1, 2);   // -20 = 1 mod 3, a square
    check_one(split_prime(k5, Int(11)), 1, 2, 1);  // -20 = 2 mod 11, nonsquare

    // e * f * count always sums to the degree
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 8999L}) {
        int total = 0;
        for (const auto& pa : split_prime(z3, Int(p))) total += pa.e * pa.f * pa.count;
        CHECK(total == 2);
    }
}

TEST_CASE("place sets and extension") {
    PlaceSet S = place_set_over_Q({Int(2), Int(3)});
    CHECK(S.size() == 3);
    CHECK(S.contains_prime(Int(2)));
    CHECK_FALSE(S.contains_prime(Int(5)));
    CHECK(S.rational_primes() == std::vector<Int>{Int(2), Int(3)});
    // duplicates collapse
    CHECK(place_set_over_Q({Int(3), Int(2), Int(3)}) == S);

    NumberField z3 = NumberField::zeta3();
    PlaceSet Sell = extend_place_set(S, z3);
    CHECK(Sell.field == z3);
    CHECK(Sell.size() == 3);  // one complex place, 2 inert, 3 ramified
    PlaceSet bigger = extend_place_set(place_set_over_Q({Int(2), Int(3), Int(7)}), z3);
    CHECK(bigger.size() == 5);  // 7 splits into two places
}

TEST_CASE("reduced forms and class numbers") {
    CHECK(reduced_forms(Int(-3)).size() == 1);
    CHECK(reduced_forms(Int(-4)).size() == 1);
    CHECK(reduced_forms(Int(-20)).size() == 2);
    CHECK(reduced_forms(Int(-23)).size() == 3);
    auto f84 = reduced_forms(Int(-84));
    CHECK(f84.size() == 4);

    // reduction lands in the reduced list and preserves the discriminant
    QuadForm g{Int(12), Int(10), Int(3)};  // disc -44
    QuadForm r = reduce_form(g);
    CHECK(r.b * r.b - 4 * r.a * r.c == -44);
    auto f44 = reduced_forms(Int(-44));
    CHECK(std::find(f44.begin(), f44.end(), r) != f44.end());
    CHECK(reduce_form(r) == r);

    CHECK(class_number(NumberField::zeta3()) == 1);
    CHECK(class_number(NumberField::zeta4()) == 1);
    CHECK(class_number(NumberField::quadratic(Int(-5))) == 2);
    CHECK(class_number(NumberField::quadratic(Int(-23))) == 3);
    CHECK(class_number(NumberField::rationals()) == 1);
    CHECK_THROWS_AS(class_number(NumberField::quadratic(Int(5))), std::invalid_argument);

    // independent ideal-enumeration oracle, spot values
    CHECK(oracle::class_number_ideal_oracle(Int(-3)) == 1);
    CHECK(oracle::class_number_ideal_oracle(Int(-20)) == 2);
    CHECK(oracle::class_number_ideal_oracle(Int(-23)) == 3);
    CHECK(oracle::class_number_ideal_oracle(Int(-84)) == 4);
    for (long D : {-3L, -4L, -7L, -8L, -11L, -15L, -20L, -23L, -24L, -84L})
        CHECK(class_number(NumberField::quadratic(
                  Int(D) % 4 == 0 ? Int(D / 4) : Int(D))) ==
              oracle::class_number_ideal_oracle(Int(D)));
}

TEST_CASE("form composition group law") {
    Int D(-84);
    QuadForm e = reduce_form(principal_form(D));
    auto forms = reduced_forms(D);
    for (const auto& f : forms) {
        CHECK(reduce_form(compose_forms(f, e, D)) == f);
        // the class group of disc -84 is 2-torsion
        CHECK(reduce_form(compose_forms(f, f, D)) == e);
    }
    // composition is commutative up to reduction
    for (const auto& f : forms)
        for (const auto& g : forms)
            CHECK(reduce_form(compose_forms(f, g, D)) == reduce_form(compose_forms(g, f, D)));
    // disc -23: the norm-2 form has order 3
    Int D23(-23);
    auto p2 = prime_form(D23, Int(2));
    REQUIRE(p2.has_value());
    QuadForm sq = reduce_form(compose_forms(*p2, *p2, D23));
    CHECK(sq != reduce_form(principal_form(D23)));
    CHECK(reduce_form(compose_forms(sq, *p2, D23)) == reduce_form(principal_form(D23)));
}

TEST_CASE("prime forms") {
    CHECK(prime_form(Int(-20), Int(3)).has_value());
    CHECK_FALSE(prime_form(Int(-20), Int(11)).has_value());  // inert
    auto f2 = prime_form(Int(-20), Int(2));                  // ramified
    REQUIRE(f2.has_value());
    CHECK(f2->a == 2);
}

TEST_CASE("S-class numbers") {
    NumberField k5 = NumberField::quadratic(Int(-5));
    PlaceSet arch = extend_place_set(place_set_over_Q({}), k5);
    CHECK(s_class_number(k5, arch) == 2);
    PlaceSet with2 = extend_place_set(place_set_over_Q({Int(2)}), k5);
    CHECK(s_class_number(k5, with2) == 1);  // the prime above 2 is nonprincipal

    NumberField k21 = NumberField::quadratic(Int(-21));  // disc -84, group (2,2)
    PlaceSet s2 = extend_place_set(place_set_over_Q({Int(2)}), k21);
    CHECK(s_class_number(k21, s2) == 2);  // one order-2 class killed
    PlaceSet s23 = extend_place_set(place_set_over_Q({Int(2), Int(3)}), k21);
    CHECK(s_class_number(k21, s23) == 1);

    CHECK(s_class_number(NumberField::rationals(), place_set_over_Q({Int(2)})) == 1);
}

TEST_CASE("S-unit quotient size") {
    CHECK(s_unit_quotient_size(6, 3, Int(3)) == 27);
    CHECK(s_unit_quotient_size(2, 1, Int(2)) == 2);
    CHECK(s_unit_quotient_size(2, 2, Int(2)) == 4);
    CHECK(s_unit_quotient_size(4, 2, Int(2)) == 4);
    CHECK(s_unit_quotient_size(6, 1, Int(4)) == 2);  // (4, 6) = 2
    CHECK_THROWS_AS(s_unit_quotient_size(2, 0, Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(s_unit_quotient_size(2, 1, Int(1)), std::invalid_argument);

    NumberField z3 = NumberField::zeta3();
    PlaceSet Sell = extend_place_set(place_set_over_Q({Int(2), Int(3)}), z3);
    REQUIRE(Sell.size() == 3);
    CHECK(s_unit_quotient_size(z3, Sell, Int(3)) == 27);
}

TEST_CASE("field certificates") {
    FieldCertificate cert;
    cert.label = "degree-6 splitting field";
    cert.degree = 6;
    cert.real_places = 0;
    cert.complex_places = 3;
    cert.splittings[Int(2)] = {PrimeAbove{Int(2), 1, 3, 2}};
    cert.splittings[Int(3)] = {PrimeAbove{Int(3), 2, 1, 3}};
    PlaceSet S = place_set_over_Q({Int(2), Int(3)});
    CHECK(certified_place_count(cert, S) == 3 + 2 + 3);
    PlaceSet S5 = place_set_over_Q({Int(2), Int(3), Int(5)});
    CHECK_THROWS_AS(certified_place_count(cert, S5), std::invalid_argument);
}
