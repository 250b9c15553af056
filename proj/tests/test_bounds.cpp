#include <doctest.h>

#include "gb/bounds.hpp"

using namespace gb;

TEST_CASE("beta") {
    CHECK(beta(Int(2), 1, 0) == 1);
    CHECK(beta(Int(3), 1, 2) == 3);
    CHECK(beta(Int(2), 2, 3) == 16);
    CHECK(beta(Int(5), 0, 0) == 1);
    CHECK(beta(Int(5), 3, 0) == 1);  // (5, 2) = 1
    CHECK(beta(Int(4), 1, 1) == 2);
    CHECK_THROWS_AS(beta(Int(1), 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(beta(Int(2), -1, 0), std::invalid_argument);
    // envelope divisibility over a small grid
    for (long n = 2; n <= 8; ++n)
        for (long a = 0; a <= 3; ++a)
            for (long b = 0; b <= 3; ++b) {
                Int v = beta(Int(n), a, b);
                Int env = 1;
                for (long i = 0; i < a; ++i) env *= gcd_pair(Int(n), Int(2));
                for (long i = 0; i < b; ++i) env *= n;
                CHECK(env % v == 0);
            }
}

TEST_CASE("fpow") {
    CHECK(fpow(Int(6), 3).value() == 216);
    CHECK(fpow(Int(6), 0).value() == 1);
    CHECK(fpow(Int(1), 5).value() == 1);
    CHECK_THROWS_AS(fpow(Int(0), 2), std::invalid_argument);
}

TEST_CASE("unramified H^1 bound") {
    // n = 3, rank 2, |S^ell| = 3, w = 6, h = 1: (3 * 9)^2 = 3^6, times inflation
    CHECK(h1_unramified_bound(Int(3), 2, 3, 6, Int(1), Factorization{}).value() == 729);
    CHECK(h1_unramified_bound(Int(3), 2, 3, 6, Int(1), factor(Int(3))).value() == 2187);
    // the class-number part only contributes its n-part
    CHECK(h1_unramified_bound(Int(3), 1, 1, 2, Int(6), Factorization{}).value() == 3);
    CHECK_THROWS_AS(h1_unramified_bound(Int(3), 1, 0, 2, Int(1), Factorization{}),
                    std::invalid_argument);
}

TEST_CASE("rational-torsion route bounds") {
    TwoBounds t = theorem_8_2_bound(Int(2), 1, 1, 1, 2, Int(1), true, true);
    CHECK(t.precise.value() == 64);      // 2^{1 + 1 + 4}
    CHECK(t.simplified.value() == 64);   // 2^{3 * 2}
    TwoBounds t2 = theorem_8_2_bound(Int(3), 1, 2, 1, 3, Int(2), true, true);
    CHECK(t2.precise.value() == Int(6561) * 4);      // (3,2)^1 3^{2+6} h^2
    CHECK(t2.simplified.value() == Int(19683) * 4);  // 3^{3|S|} h^2
    CHECK_THROWS_AS(theorem_8_2_bound(Int(2), 1, 1, 1, 2, Int(1), false, true), RefusalError);
    CHECK_THROWS_AS(theorem_8_2_bound(Int(2), 1, 1, 1, 2, Int(1), true, false), RefusalError);
}

TEST_CASE("genus bound from the ramification count") {
    Factorization br = fpow(Int(3), 9);
    CHECK(corollary_8_3_genus_bound(Int(3), Int(2), br).value() == 4 * 19683);
    CHECK(corollary_8_3_genus_bound(Int(3), Int(0), br).value() == 19683);
    CHECK(corollary_8_3_genus_bound(Int(2), Int(7), br).value() == 19683);  // phi(2) = 1
    CHECK_THROWS_AS(corollary_8_3_genus_bound(Int(3), Int(-1), br), std::invalid_argument);
}

TEST_CASE("elliptic prime-torsion bound") {
    CHECK(prop_9_2_bound(Int(3), 1, 2, 3, Int(1)).value() == 19683);  // 3^9
    CHECK(prop_9_2_bound(Int(2), 1, 1, 2, Int(1)).value() == 64);     // 2^6
    CHECK(prop_9_2_bound(Int(3), 1, 2, 3, Int(2)).value() == 4 * 19683);
    CHECK_THROWS_AS(prop_9_2_bound(Int(4), 1, 1, 1, Int(1)), std::invalid_argument);
}

TEST_CASE("hyperelliptic bounds") {
    HyperellipticBoundData d;
    d.g = 1;
    d.a = 1;
    d.b = 2;
    d.s_size = 3;
    d.h_k_S = 1;
    CHECK(prop_9_5_bounds(true, d).value() == 512);  // 2^{1 + 2 + 6}
    HyperellipticBoundData e;
    e.g = 2;
    e.s_ell_size = 4;
    e.h_ell_S = 1;
    CHECK(prop_9_5_bounds(false, e).value() == Int(1) << 24);  // 2^{2g(|S^ell| + 2)}
    e.h_ell_S = 3;
    CHECK(prop_9_5_bounds(false, e).value() == (Int(1) << 24) * 81);
    e.g = 0;
    CHECK_THROWS_AS(prop_9_5_bounds(false, e), std::invalid_argument);
}

TEST_CASE("genus bound printing") {
    GenusBound g{fpow(Int(3), 9), Int(2), std::nullopt, Provenance::UserAsserted};
    CHECK(g.symbolic());
    CHECK(g.str() == "2^r * 3^9");
    CHECK_THROWS_AS(g.value(), std::domain_error);
    GenusBound known{fpow(Int(3), 9), Int(2), Int(2), Provenance::UserAsserted};
    CHECK(known.value().value() == 4 * 19683);
    GenusBound trivial_phi{fpow(Int(2), 6), Int(1), std::nullopt, Provenance::UserAsserted};
    CHECK(trivial_phi.str() == "2^6");
}

TEST_CASE("pipeline: 3-torsion family with the asserted place set") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Paladino;
    cfg.beta_param = Rat(1);
    cfg.h_param = Rat(1);
    cfg.n = 3;
    cfg.forced_S = std::vector<Int>{Int(2), Int(3)};
    BoundReport rep = run_pipeline(cfg);
    CHECK(rep.route == "family-3-torsion");
    CHECK(rep.s_override);
    CHECK(rep.brauer_bound.value.value() == 19683);
    CHECK(rep.genus.symbolic());
    CHECK(rep.genus.str() == "2^r * 3^9");
    CHECK(rep.s_ell_size == 3);
    CHECK(rep.self_audit());
    // with an asserted ramification count the bound becomes a number
    cfg.r = Int(2);
    BoundReport rep2 = run_pipeline(cfg);
    CHECK_FALSE(rep2.genus.symbolic());
    CHECK(rep2.genus.value().value() == 4 * 19683);
}

TEST_CASE("pipeline: 3-torsion family with the computed place set") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Paladino;
    cfg.beta_param = Rat(1);
    cfg.h_param = Rat(1);
    cfg.n = 3;
    BoundReport rep = run_pipeline(cfg);
    CHECK_FALSE(rep.s_override);
    // the constructed model has bad reduction also at 8999, which is inert
    // in Q(zeta3): |S^ell| = 4 and the bound grows to 3^12
    CHECK(rep.S.contains_prime(Int(8999)));
    CHECK(rep.s_ell_size == 4);
    CHECK(rep.brauer_bound.value.value() == Int(531441));
    CHECK(rep.self_audit());
}

TEST_CASE("pipeline: split 2-torsion") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::EllipticRoots;
    cfg.roots = {Rat(0), Rat(1), Rat(-1)};
    cfg.n = 2;
    BoundReport rep = run_pipeline(cfg);
    CHECK(rep.route == "two-torsion");
    CHECK(rep.brauer_bound.value.value() == 64);
    CHECK(rep.self_audit());
}

TEST_CASE("pipeline: split hyperelliptic") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Hyperelliptic;
    cfg.f_coeffs = {Rat(0), Rat(2), Rat(-1), Rat(-2), Rat(1)};  // x(x-1)(x+1)(x-2)
    cfg.n = 2;
    BoundReport rep = run_pipeline(cfg);
    CHECK(rep.route == "split-hyperelliptic");
    CHECK(rep.g == 1);
    CHECK(rep.brauer_bound.value.value() == 512);
    CHECK(rep.self_audit());
}

TEST_CASE("pipeline: generic hyperelliptic via certificate") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Hyperelliptic;
    cfg.f_coeffs = {Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};  // x^5 + 1
    cfg.n = 2;
    cfg.galois_symmetric = true;
    FieldCertificate cert;
    cert.label = "splitting field";
    cert.degree = 6;
    cert.real_places = 0;
    cert.complex_places = 3;
    cert.class_number_S = 1;
    cert.splittings[Int(2)] = {PrimeAbove{Int(2), 1, 3, 2}};
    cert.splittings[Int(5)] = {PrimeAbove{Int(5), 1, 6, 1}};
    cfg.ell_certificate = cert;
    BoundReport rep = run_pipeline(cfg);
    CHECK(rep.route == "generic-hyperelliptic");
    CHECK(rep.g == 2);
    CHECK(rep.s_ell_size == 6);
    HyperellipticBoundData d;
    d.g = rep.g;
    d.s_ell_size = rep.s_ell_size;
    d.h_ell_S = rep.h_ell_S.value.value();
    CHECK(rep.brauer_bound.value == prop_9_5_bounds(false, d));
    CHECK(rep.self_audit());
}

TEST_CASE("pipeline: asserted rational n-torsion") {
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Elliptic;
    cfg.ca = Rat(0);
    cfg.cb = Rat(16);  // bad primes {2, 3}
    cfg.n = 2;
    cfg.rational_point = true;
    cfg.n_torsion_rational = true;
    BoundReport rep = run_pipeline(cfg);
    CHECK(rep.route == "rational-n-torsion");
    // precise bound 2^{1 + 2 + 2|S|} with |S| = 3 and h = 1
    CHECK(rep.brauer_bound.value.value() == 512);
    CHECK(rep.self_audit());
}

TEST_CASE("pipeline refusals") {
    // S3 two-torsion field without a certificate
    PipelineConfig cfg;
    cfg.kind = PipelineConfig::CurveKind::Elliptic;
    cfg.ca = Rat(0);
    cfg.cb = Rat(-2);
    cfg.n = 2;
    CHECK_THROWS_AS(run_pipeline(cfg), RefusalError);
    // n = 5 with no torsion-field information at all
    PipelineConfig five;
    five.kind = PipelineConfig::CurveKind::Elliptic;
    five.ca = Rat(0);
    five.cb = Rat(16);
    five.n = 5;
    CHECK_THROWS_AS(run_pipeline(five), RefusalError);
    // the 3-torsion family refuses n != 3
    PipelineConfig pal;
    pal.kind = PipelineConfig::CurveKind::Paladino;
    pal.beta_param = Rat(1);
    pal.h_param = Rat(1);
    pal.n = 2;
    CHECK_THROWS_AS(run_pipeline(pal), RefusalError);
}
