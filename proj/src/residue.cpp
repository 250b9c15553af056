#include "gb/residue.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gb {

namespace {

bool poly_less(const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
    return false;
}

QPoly poly_mod(const QPoly& f, const QPoly& pi) { return divmod(f, pi).second; }

// inverse of a mod pi, a nonzero mod pi, pi irreducible
QPoly inv_mod(const QPoly& a, const QPoly& pi) {
    // extended Euclid: r0 = pi, r1 = a
    QPoly r0 = pi, r1 = poly_mod(a, pi);
    QPoly t0, t1 = QPoly::constant(Rat(1));
    if (r1.is_zero()) throw std::domain_error("inv_mod: zero residue");
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        QPoly t2 = t0 - q * t1;
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if (r0.degree() != 0) throw std::logic_error("inv_mod: modulus not irreducible");
    Rat inv_lc = 1 / r0.c[0];
    return poly_mod(t0 * QPoly::constant(inv_lc), pi);
}

bool rat_is_square(const Rat& x, Rat* root = nullptr) {
    if (x < 0) return false;
    if (x == 0) {
        if (root) *root = 0;
        return true;
    }
    Int num = x.get_num(), den = x.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    if (root) {
        Int rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        *root = Rat(rn) / Rat(rd);
    }
    return true;
}

bool is_nth_power_rational(const Rat& c, const Int& n) {
    if (c == 0) throw std::invalid_argument("is_nth_power_rational: zero input");
    if (n < 1) throw std::invalid_argument("is_nth_power_rational: n >= 1 required");
    if (c < 0 && n % 2 == 0) return false;
    unsigned long nu = mpz_get_ui(n.get_mpz_t());
    Factorization fn = factor(Int(c.get_num()));
    Factorization fd = factor(Int(c.get_den()));
    for (const auto& [p, e] : fn.factors)
        if (e % nu != 0) return false;
    for (const auto& [p, e] : fd.factors)
        if (e % nu != 0) return false;
    return true;
}

// is r0 + r1 x a square in Q[x]/(x^2 + p1 x + p0)?
bool is_square_in_quadratic(const Rat& r0, const Rat& r1, const Rat& p1, const Rat& p0) {
    // (u + v x)^2 = (u^2 - v^2 p0) + (2uv - v^2 p1) x; eliminating u with
    // w = v^2 gives (p1^2 - 4 p0) w^2 + (2 r1 p1 - 4 r0) w + r1^2 = 0.
    if (r1 == 0 && rat_is_square(r0)) return true;
    Rat A = p1 * p1 - 4 * p0;  // nonzero: the modulus is irreducible
    Rat B = 2 * r1 * p1 - 4 * r0;
    Rat C = r1 * r1;
    Rat disc = B * B - 4 * A * C;
    Rat sq;
    if (!rat_is_square(disc, &sq)) return false;
    for (const Rat& w : {Rat((-B + sq) / (2 * A)), Rat((-B - sq) / (2 * A))}) {
        if (w <= 0) continue;
        Rat v;
        if (!rat_is_square(w, &v)) continue;
        // u = (r1 + w p1) / (2v); verify the constant equation
        Rat u = (r1 + w * p1) / (2 * v);
        if (u * u - w * p0 == r0) return true;
    }
    return false;
}

}  // namespace

GeometricPlace GeometricPlace::infinity() {
    GeometricPlace v;
    v.at_infinity = true;
    return v;
}

GeometricPlace GeometricPlace::of(const QPoly& pi) {
    if (pi.degree() < 1) throw std::invalid_argument("GeometricPlace: constant polynomial");
    if (pi.lc() != 1) throw std::invalid_argument("GeometricPlace: polynomial must be monic");
    if (!is_irreducible_over_Q(pi))
        throw std::invalid_argument("GeometricPlace: polynomial must be irreducible");
    GeometricPlace v;
    v.pi = pi;
    return v;
}

std::string GeometricPlace::str() const {
    return at_infinity ? std::string("infinity") : "(" + pi.str() + ")";
}

bool GeometricPlace::operator<(const GeometricPlace& o) const {
    if (at_infinity != o.at_infinity) return at_infinity;  // infinity first
    if (at_infinity) return false;
    return poly_less(pi, o.pi);
}

RationalFunction RationalFunction::of(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::invalid_argument("RationalFunction: zero denominator");
    RationalFunction f;
    if (num.is_zero()) {
        f.num = QPoly();
        f.den = QPoly::constant(Rat(1));
        return f;
    }
    QPoly g = poly_gcd(num, den);
    f.num = divmod(num, g).first;
    f.den = divmod(den, g).first;
    Rat lc = f.den.lc();
    if (lc != 1) {
        QPoly scale = QPoly::constant(1 / lc);
        f.num = f.num * scale;
        f.den = f.den * scale;
    }
    return f;
}

RationalFunction RationalFunction::of(const QPoly& num) {
    return of(num, QPoly::constant(Rat(1)));
}

RationalFunction RationalFunction::constant(const Rat& a) {
    return of(QPoly::constant(a), QPoly::constant(Rat(1)));
}

RationalFunction RationalFunction::x() { return of(QPoly::x(), QPoly::constant(Rat(1))); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw std::domain_error("RationalFunction: inverse of zero");
    return of(den, num);
}

RationalFunction RationalFunction::pow(long e) const {
    if (e == 0) return constant(Rat(1));
    const RationalFunction base = e > 0 ? *this : inverse();
    unsigned ue = static_cast<unsigned>(e > 0 ? e : -e);
    return of(poly_pow(base.num, ue), poly_pow(base.den, ue));
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction::of(a.num * b.num, a.den * b.den);
}

std::string RationalFunction::str() const {
    if (den == QPoly::constant(Rat(1))) return num.is_zero() ? "0" : num.str();
    return "(" + num.str() + ") / (" + den.str() + ")";
}

namespace {
long poly_place_valuation(const QPoly& f, const QPoly& pi) {
    long v = 0;
    QPoly rest = f;
    while (true) {
        auto [q, r] = divmod(rest, pi);
        if (!r.is_zero()) return v;
        ++v;
        rest = q;
    }
}
}  // namespace

long place_valuation(const RationalFunction& f, const GeometricPlace& v) {
    if (f.is_zero()) throw std::invalid_argument("place_valuation: zero function");
    if (v.at_infinity) return f.den.degree() - f.num.degree();
    return poly_place_valuation(f.num, v.pi) - poly_place_valuation(f.den, v.pi);
}

bool ResidueClass::is_trivial() const {
    if (rep.is_zero()) throw std::logic_error("ResidueClass: zero representative");
    if (rep == QPoly::constant(Rat(1))) return true;
    int kdeg = place.residue_degree();
    if (kdeg == 1) {
        if (rep.degree() != 0) throw std::logic_error("ResidueClass: unreduced representative");
        Rat c = rep.c[0];
        if (!place.at_infinity && place.pi.degree() == 1) {
            // residue field is Q via x -> root of pi; rep already constant
        }
        return is_nth_power_rational(c, n);
    }
    if (kdeg == 2 && n == 2) {
        Rat r0 = rep.c[0];
        Rat r1 = rep.degree() >= 1 ? rep.c[1] : Rat(0);
        return is_square_in_quadratic(r0, r1, place.pi.c[1], place.pi.c[0]);
    }
    throw std::domain_error(
        "ResidueClass: n-th power test supported only for rational residue fields "
        "and quadratic residue fields with n = 2");
}

ResidueClass ResidueClass::operator*(const ResidueClass& o) const {
    if (!(place == o.place) || n != o.n)
        throw std::invalid_argument("ResidueClass: mismatched place or exponent");
    ResidueClass out{place, n, rep * o.rep};
    if (!place.at_infinity) out.rep = poly_mod(out.rep, place.pi);
    return out;
}

std::string ResidueClass::str() const {
    return rep.str() + "  (mod " + n.get_str() + "-th powers at " + place.str() + ")";
}

ResidueClass tame_residue(const RationalFunction& u, const RationalFunction& v,
                          const GeometricPlace& place, const Int& n) {
    if (u.is_zero() || v.is_zero())
        throw std::invalid_argument("tame_residue: entries must be nonzero");
    long wu = place_valuation(u, place);
    long wv = place_valuation(v, place);
    RationalFunction t = u.pow(wv) * v.pow(-wu);
    // t has valuation 0, so numerator and denominator are both units locally
    QPoly rep;
    if (place.at_infinity) {
        if (t.num.degree() != t.den.degree())
            throw std::logic_error("tame_residue: nonzero valuation after cancellation");
        rep = QPoly::constant(t.num.lc() / t.den.lc());
    } else {
        QPoly nm = poly_mod(t.num, place.pi);
        QPoly dm = poly_mod(t.den, place.pi);
        rep = poly_mod(nm * inv_mod(dm, place.pi), place.pi);
    }
    if ((wu % 2 != 0) && (wv % 2 != 0)) rep = -rep;
    return ResidueClass{place, n, rep};
}

ResidueClass symbol_residue(const SymbolAlgebra& A, const GeometricPlace& place) {
    ResidueClass acc{place, A.n, QPoly::constant(Rat(1))};
    for (const auto& [u, v] : A.slots) acc = acc * tame_residue(u, v, place, A.n);
    return acc;
}

std::vector<GeometricPlace> support_places(const SymbolAlgebra& A) {
    std::set<GeometricPlace> places;
    places.insert(GeometricPlace::infinity());
    for (const auto& [u, v] : A.slots) {
        for (const QPoly* f : {&u.num, &u.den, &v.num, &v.den}) {
            if (f->degree() < 1) continue;
            for (const auto& [g, mult] : factor_over_Q(*f)) places.insert(GeometricPlace::of(g));
        }
    }
    return {places.begin(), places.end()};
}

std::set<GeometricPlace> ramification_set(const SymbolAlgebra& A) {
    if (A.n < 2) throw std::invalid_argument("ramification_set: n > 1 required");
    std::set<GeometricPlace> out;
    for (const GeometricPlace& w : support_places(A))
        if (!symbol_residue(A, w).is_trivial()) out.insert(w);
    return out;
}

std::vector<Rat> unramified_exponent_filter(const PlaceSet& S_over_Q, const Int& n,
                                            const std::vector<Rat>& candidates) {
    if (!S_over_Q.field.is_rationals())
        throw std::invalid_argument("unramified_exponent_filter: S must be given over Q");
    std::vector<Rat> kept;
    for (const Rat& a : candidates) {
        if (a == 0) throw std::invalid_argument("unramified_exponent_filter: zero candidate");
        bool ok = true;
        Factorization fn = factor(Int(a.get_num()));
        Factorization fd = factor(Int(a.get_den()));
        for (const Factorization* f : {&fn, &fd}) {
            for (const auto& [p, e] : f->factors) {
                if (S_over_Q.contains_prime(p)) continue;
                if (Int(e) % n != 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) kept.push_back(a);
    }
    return kept;
}

UnitClassSequenceReport check_unit_class_sequence(const PlaceSet& S_over_Q, const Int& n) {
    if (!S_over_Q.field.is_rationals())
        throw std::invalid_argument("check_unit_class_sequence: S must be given over Q");
    if (n < 2) throw std::invalid_argument("check_unit_class_sequence: n > 1 required");
    long nn = mpz_get_si(n.get_mpz_t());
    long g = n % 2 == 0 ? 2 : 1;  // order of -1 in Q^x/(Q^x)^n
    std::vector<Int> primes = S_over_Q.rational_primes();
    std::size_t k = primes.size();

    // D sits in (Z/g) x (Z/n)^k via the sign and the exponents at S-primes;
    // close up the subgroup generated by -1 and the primes of S.
    std::vector<std::vector<long>> gens;
    {
        std::vector<long> sign_gen(k + 1, 0);
        sign_gen[0] = 1 % g;
        gens.push_back(sign_gen);
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<long> e(k + 1, 0);
            e[i + 1] = 1 % nn;
            gens.push_back(e);
        }
    }
    std::set<std::vector<long>> closure;
    closure.insert(std::vector<long>(k + 1, 0));
    std::vector<std::vector<long>> queue(closure.begin(), closure.end());
    while (!queue.empty()) {
        std::vector<long> cur = queue.back();
        queue.pop_back();
        for (const auto& gen : gens) {
            std::vector<long> nxt(k + 1);
            nxt[0] = (cur[0] + gen[0]) % g;
            for (std::size_t i = 1; i <= k; ++i) nxt[i] = (cur[i] + gen[i]) % nn;
            if (closure.insert(nxt).second) queue.push_back(nxt);
        }
    }

    UnitClassSequenceReport rep;
    rep.d_order = Int(static_cast<unsigned long>(closure.size()));
    rep.unit_quotient = s_unit_quotient_size(2, S_over_Q.size(), n);
    rep.pic_torsion = 1;  // Pic of the ring of S-integers of Q is trivial
    rep.consistent = (rep.d_order == rep.unit_quotient * rep.pic_torsion);
    return rep;
}

RamificationCount genus_ramification_count(const SymbolAlgebra& A) {
    return {Int(static_cast<unsigned long>(ramification_set(A).size())), Provenance::Computed};
}

RamificationCount asserted_ramification_count(const Int& r) {
    if (r < 0) throw std::invalid_argument("asserted_ramification_count: r >= 0 required");
    return {r, Provenance::UserAsserted};
}

}  // namespace gb
