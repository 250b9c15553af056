#include <doctest.h>

#include "gb/cohom.hpp"

using namespace gb;

namespace {
ModMatrix mat(long n, std::vector<long> entries) {
    return ModMatrix{n, 2, std::move(entries)};
}
}  // namespace

TEST_CASE("finite module arithmetic") {
    FiniteModule M(3, 2);
    CHECK(M.size() == 9);
    for (std::uint64_t i = 0; i < M.size(); ++i) CHECK(M.encode(M.decode(i)) == i);
    CHECK(M.add(M.encode({1, 2}), M.encode({2, 2})) == M.encode({0, 1}));
    CHECK(M.neg(M.encode({1, 0})) == M.encode({2, 0}));
    CHECK(M.add(M.encode({1, 2}), M.neg(M.encode({1, 2}))) == 0);
    CHECK_THROWS_AS(FiniteModule(0, 1), std::invalid_argument);
}

TEST_CASE("matrices over Z/n") {
    ModMatrix u = mat(3, {1, 1, 0, 1});
    CHECK(u * u == mat(3, {1, 2, 0, 1}));
    CHECK(u * u * u == ModMatrix::identity(3, 2));
    CHECK(u.invertible());
    CHECK_FALSE(mat(2, {1, 0, 0, 0}).invertible());
    CHECK_FALSE(mat(4, {2, 0, 0, 1}).invertible());  // det 2 not a unit mod 4
    FiniteModule M(3, 2);
    CHECK(u.apply(M, M.encode({1, 1})) == M.encode({2, 1}));
}

TEST_CASE("group closure") {
    MatrixGroup G = MatrixGroup::generate({mat(3, {1, 1, 0, 1})});
    CHECK(G.elements.size() == 3);
    CHECK(G.elements[0] == ModMatrix::identity(3, 2));
    // order-7 unipotent exceeds a cap of 5
    CHECK_THROWS_AS(MatrixGroup::generate({mat(7, {1, 1, 0, 1})}, 5), std::length_error);
    CHECK_THROWS_AS(MatrixGroup::generate({mat(2, {1, 0, 0, 0})}), std::invalid_argument);
    CHECK_THROWS_AS(MatrixGroup::generate({}), std::invalid_argument);
}

TEST_CASE("fixed points") {
    FiniteModule M(3, 2);
    MatrixGroup G = MatrixGroup::generate({mat(3, {1, 1, 0, 1})});
    auto fixed = h0(G, M);
    CHECK(fixed.size() == 3);  // second coordinate must vanish
    for (std::uint64_t m : fixed) CHECK(M.decode(m)[1] == 0);
    MatrixGroup triv = MatrixGroup::generate({ModMatrix::identity(3, 2)});
    CHECK(h0(triv, M).size() == 9);
}

TEST_CASE("H^1 pinned values") {
    FiniteModule M(3, 2);
    // unipotent generator mod 3: |H^1| = 3
    MatrixGroup U = MatrixGroup::generate({mat(3, {1, 1, 0, 1})});
    CocycleSet c = h1(U, M);
    CHECK(c.h1 == 3);
    CHECK(c.z1 == c.b1 * c.h1);
    // trivial group: Hom(1, M) = 0
    CHECK(h1(MatrixGroup::generate({ModMatrix::identity(3, 2)}), M).h1 == 1);
    // -1 acting on (Z/3)^2: first cohomology of Z/2 with odd coefficients
    CHECK(h1(MatrixGroup::generate({mat(3, {2, 0, 0, 2})}), M).h1 == 1);
}

TEST_CASE("H^1 agrees with the cyclic formula") {
    for (long p : {2L, 3L, 5L}) {
        FiniteModule M(p, 2);
        std::vector<ModMatrix> samples;
        for (long a = 0; a < p; ++a)
            for (long b = 0; b < p; ++b) {
                ModMatrix u = mat(p, {a, b, 1, 1});
                if (u.invertible()) samples.push_back(u);
            }
        for (const auto& u : samples) {
            MatrixGroup G = MatrixGroup::generate({u});
            CHECK(h1(G, M).h1 == cyclic_h1(u, M));
        }
    }
}

TEST_CASE("two-generator H^1") {
    // Klein four-group <-1, diag(1,-1)> acting on (Z/3)^2
    FiniteModule M(3, 2);
    MatrixGroup V = MatrixGroup::generate({mat(3, {2, 0, 0, 2}), mat(3, {1, 0, 0, 2})});
    CHECK(V.elements.size() == 4);
    CHECK(h1(V, M).h1 == 1);  // |G| and |M| coprime
}

TEST_CASE("torsion quotient index check") {
    IndexCheck r = torsion_quotient_index_check({4}, {{2}}, 2);
    CHECK(r.index == 2);
    CHECK(r.b_order == 2);
    CHECK(r.divides_b);

    r = torsion_quotient_index_check({4}, {}, 2);
    CHECK(r.index == 1);
    CHECK(r.b_order == 1);
    CHECK(r.divides_b);

    r = torsion_quotient_index_check({2, 2}, {{1, 1}}, 2);
    CHECK(r.index == 1);
    CHECK(r.b_order == 2);

    r = torsion_quotient_index_check({9}, {{3}}, 3);
    CHECK(r.index == 3);
    CHECK(r.b_order == 3);
    CHECK(r.divides_b);

    CHECK_THROWS_AS(torsion_quotient_index_check({4}, {{1, 1}}, 2), std::invalid_argument);
}
