#include "gb/curves.hpp"

#include <stdexcept>

namespace gb {

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Computed: return "computed";
        case Provenance::PaperAsserted: return "paper-asserted";
        case Provenance::UserAsserted: return "user-asserted";
    }
    throw std::logic_error("unreachable");
}

EllipticCurve::EllipticCurve(Rat a_, Rat b_) : a(std::move(a_)), b(std::move(b_)) {
    if (disc() == 0) throw std::invalid_argument("EllipticCurve: singular model (disc = 0)");
}

Rat EllipticCurve::disc() const { return Rat(-16) * (4 * a * a * a + 27 * b * b); }

QPoly EllipticCurve::cubic() const { return QPoly({b, a, Rat(0), Rat(1)}); }

QPoly EllipticCurve::three_division_poly() const {
    return QPoly({-a * a, 12 * b, 6 * a, Rat(0), Rat(3)});
}

EllipticCurve elliptic_from_roots(const Rat& e1, const Rat& e2, const Rat& e3) {
    // expand (x-e1)(x-e2)(x-e3) = x^3 + c2 x^2 + c1 x + c0, then depress by
    // x -> x - c2/3
    Rat c2 = -(e1 + e2 + e3);
    Rat c1 = e1 * e2 + e1 * e3 + e2 * e3;
    Rat c0 = -e1 * e2 * e3;
    Rat s = c2 / 3;
    Rat a = c1 - 3 * s * s;
    Rat b = c0 - c1 * s + 2 * s * s * s;
    return EllipticCurve(a, b);
}

int hyperelliptic_genus(int m) {
    if (m < 3) throw std::invalid_argument("hyperelliptic_genus: degree must be >= 3");
    return (m - 1) / 2;
}

HyperellipticCurve::HyperellipticCurve(QPoly f_) : f(std::move(f_)), genus(0) {
    if (f.degree() < 3) throw std::invalid_argument("HyperellipticCurve: deg f must be >= 3");
    if (discriminant(f) == 0) throw std::invalid_argument("HyperellipticCurve: f must be separable");
    genus = hyperelliptic_genus(f.degree());
}

namespace {
void add_support(const Rat& x, std::set<Int>& out) {
    if (x == 0) return;
    for (const auto& [p, e] : factor(Int(x.get_num())).factors) out.insert(p);
    for (const auto& [p, e] : factor(Int(x.get_den())).factors) out.insert(p);
}
}  // namespace

std::set<Int> bad_primes(const EllipticCurve& E) {
    std::set<Int> s;
    add_support(E.disc(), s);
    return s;
}

std::set<Int> bad_primes(const HyperellipticCurve& C) {
    std::set<Int> s;
    add_support(discriminant(C.f), s);
    add_support(C.f.lc(), s);
    s.insert(2);
    return s;
}

namespace {
PlaceSet build_S_impl(const std::set<Int>& bad, const Int& n) {
    if (n < 2) throw std::invalid_argument("build_S: n > 1 required");
    std::vector<Int> primes(bad.begin(), bad.end());
    for (const auto& [p, e] : factor(n).factors) primes.push_back(p);
    return place_set_over_Q(primes);
}
}  // namespace

PlaceSet build_S(const EllipticCurve& E, const Int& n) { return build_S_impl(bad_primes(E), n); }

PlaceSet build_S(const HyperellipticCurve& C, const Int& n) { return build_S_impl(bad_primes(C), n); }

PaladinoCurve paladino_curve(const Rat& beta, const Rat& h) {
    if (beta == 0 || h == 0) throw std::invalid_argument("paladino_curve: beta, h must be nonzero");
    Rat b2 = beta * beta, b3 = b2 * beta, b4 = b3 * beta, b5 = b4 * beta, b6 = b5 * beta;
    Rat h2 = h * h, h4 = h2 * h2, h6 = h4 * h2;
    Rat a = Rat(-27) * b4 / h4 + Rat(18) * b3 / h2 - Rat(9, 2) * b2 + Rat(3, 2) * beta * h2 -
            Rat(3, 16) * h4;
    Rat c = Rat(54) * b6 / h6 - Rat(54) * b5 / h4 + Rat(45, 2) * b4 / h2 - Rat(15, 8) * b2 * h2 -
            Rat(3, 8) * beta * h4 - Rat(1, 32) / h6;
    Rat delta = Rat(-216) * b3 * (h4 - 6 * b2 * h2 + 12 * b3) / h6;
    if (delta == 0) throw std::invalid_argument("paladino_curve: degenerate parameters");
    PaladinoCurve P{EllipticCurve(a, c), delta,
                    TorsionFieldData{Int(3), NumberField::zeta3(), std::nullopt,
                                     Provenance::PaperAsserted}};
    return P;
}

std::string TwoTorsionField::describe() const {
    switch (kind) {
        case Kind::Split: return "split (all 2-torsion rational)";
        case Kind::Quadratic: return "quadratic: " + field->name();
        case Kind::CyclicCubic: return "cyclic cubic (certificate required)";
        case Kind::S3: return "S3 (certificate required)";
    }
    throw std::logic_error("unreachable");
}

namespace {
// squarefree part of a nonzero rational, as an integer d with
// x = d * square in Q^x / (Q^x)^2
Int squarefree_part(const Rat& x) {
    Factorization fn = factor(Int(x.get_num()));
    Factorization fd = factor(Int(x.get_den()));
    Int d = fn.sign;
    for (const auto& [p, e] : fn.factors)
        if (e % 2 == 1) d *= p;
    for (const auto& [p, e] : fd.factors)
        if (e % 2 == 1) d *= p;
    return d;
}
}  // namespace

TwoTorsionField two_torsion_field(const EllipticCurve& E) {
    QPoly f = E.cubic();
    std::vector<Rat> roots = rational_roots(f);
    if (roots.size() == 3) return {TwoTorsionField::Kind::Split, NumberField::rationals()};
    if (roots.size() == 1) {
        QPoly quad = divmod(f, QPoly({-roots[0], Rat(1)})).first;
        // disc of the quadratic factor gives the field
        Rat d = quad.c[1] * quad.c[1] - 4 * quad.c[0];
        return {TwoTorsionField::Kind::Quadratic, NumberField::quadratic(squarefree_part(d))};
    }
    // irreducible cubic: disc square <=> Galois group C3
    Rat d = discriminant(f);
    Int sf = squarefree_part(d);
    if (sf == 1) return {TwoTorsionField::Kind::CyclicCubic, std::nullopt};
    return {TwoTorsionField::Kind::S3, std::nullopt};
}

bool verify_three_torsion_field(const EllipticCurve& E, const NumberField& ell) {
    if (ell.kind != NumberField::Kind::Zeta3) return false;  // zeta3 must lie in ell
    for (const auto& [g, mult] : factor_over_Q(E.three_division_poly())) {
        if (g.degree() == 1) continue;
        if (g.degree() != 2) return false;
        Rat d = g.c[1] * g.c[1] - 4 * g.c[0];
        Int sf = squarefree_part(d);
        if (sf != 1 && sf != ell.d) return false;
    }
    return true;
}

bool is_split_hyperelliptic(const HyperellipticCurve& C) {
    return static_cast<int>(rational_roots(C.f).size()) == C.f.degree();
}

}  // namespace gb
