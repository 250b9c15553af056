#include "gb/numfield.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <stdexcept>

namespace gb {

NumberField NumberField::rationals() { return NumberField{}; }

NumberField NumberField::quadratic(const Int& d) {
    if (d == 0 || d == 1) throw std::invalid_argument("quadratic: d must be squarefree, != 0, 1");
    for (const auto& [p, e] : factor(d).factors)
        if (e >= 2) throw std::invalid_argument("quadratic: d must be squarefree");
    NumberField k;
    k.kind = d == -3 ? Kind::Zeta3 : (d == -1 ? Kind::Zeta4 : Kind::Quadratic);
    k.d = d;
    k.degree = 2;
    Int dm4 = d % 4;
    if (dm4 < 0) dm4 += 4;
    k.discriminant = (dm4 == 1) ? d : 4 * d;
    if (d > 0) {
        k.real_places = 2;
        k.complex_places = 0;
    } else {
        k.real_places = 0;
        k.complex_places = 1;
    }
    k.roots_of_unity = d == -1 ? 4 : (d == -3 ? 6 : 2);
    return k;
}

NumberField NumberField::zeta3() { return quadratic(Int(-3)); }

NumberField NumberField::zeta4() { return quadratic(Int(-1)); }

QPoly NumberField::defining_polynomial() const {
    switch (kind) {
        case Kind::Rationals:
            throw std::invalid_argument("defining_polynomial: field is Q");
        case Kind::Zeta3:
            return QPoly({Rat(1), Rat(1), Rat(1)});  // x^2 + x + 1
        case Kind::Zeta4:
            return QPoly({Rat(1), Rat(0), Rat(1)});  // x^2 + 1
        case Kind::Quadratic: {
            Int dm4 = d % 4;
            if (dm4 < 0) dm4 += 4;
            if (dm4 == 1) return QPoly({Rat((1 - d) / 4), Rat(-1), Rat(1)});  // x^2 - x + (1-d)/4
            return QPoly({Rat(-d), Rat(0), Rat(1)});                          // x^2 - d
        }
    }
    throw std::logic_error("unreachable");
}

std::string NumberField::name() const {
    switch (kind) {
        case Kind::Rationals: return "Q";
        case Kind::Zeta3: return "Q(zeta3)";
        case Kind::Zeta4: return "Q(zeta4)";
        case Kind::Quadratic: return "Q(sqrt(" + d.get_str() + "))";
    }
    throw std::logic_error("unreachable");
}

namespace {
// (field discriminant, p) -> splitting, shared across the session
std::map<std::pair<Int, Int>, std::vector<PrimeAbove>> g_split_cache;
std::shared_mutex g_split_mutex;
}  // namespace

std::vector<PrimeAbove> split_prime(const NumberField& field, const Int& p) {
    if (field.is_rationals()) throw std::invalid_argument("split_prime: field is Q");
    if (!is_prime(p)) throw std::invalid_argument("split_prime: p must be prime");
    {
        std::shared_lock lock(g_split_mutex);
        auto it = g_split_cache.find({field.discriminant, p});
        if (it != g_split_cache.end()) return it->second;
    }
    std::vector<PrimeAbove> result;
    if (divides(p, field.discriminant)) {
        result.push_back({p, 2, 1, 1});  // ramified
    } else {
        FpPoly fp = reduce_mod_p(field.defining_polynomial(), p);
        auto factors = factor_mod_p(fp);
        if (factors.size() == 2) {
            result.push_back({p, 1, 1, 2});  // split
        } else {
            result.push_back({p, 1, factors[0].first.degree(), 1});  // inert (or still split/ramified caught above)
            if (factors[0].second != 1 || factors[0].first.degree() != 2)
                throw std::logic_error("split_prime: unexpected factorization shape");
        }
    }
    std::unique_lock lock(g_split_mutex);
    g_split_cache.insert({{field.discriminant, p}, result});
    return result;
}

int PlaceSet::size() const {
    int n = field.real_places + field.complex_places;
    for (const auto& pa : finite) n += pa.count;
    return n;
}

std::vector<Int> PlaceSet::rational_primes() const {
    std::vector<Int> ps;
    for (const auto& pa : finite) ps.push_back(pa.p);
    return ps;
}

bool PlaceSet::contains_prime(const Int& p) const {
    return std::any_of(finite.begin(), finite.end(),
                       [&](const PrimeAbove& pa) { return pa.p == p; });
}

PlaceSet place_set_over_Q(const std::vector<Int>& primes) {
    PlaceSet S;
    S.field = NumberField::rationals();
    std::set<Int> sorted(primes.begin(), primes.end());
    for (const Int& p : sorted) {
        if (!is_prime(p)) throw std::invalid_argument("place_set_over_Q: " + p.get_str() + " is not prime");
        S.finite.push_back({p, 1, 1, 1});
    }
    return S;
}

PlaceSet extend_place_set(const PlaceSet& S, const NumberField& ell) {
    if (!S.field.is_rationals()) throw std::invalid_argument("extend_place_set: S must be over Q");
    PlaceSet Sl;
    Sl.field = ell;
    if (ell.is_rationals()) {
        Sl.finite = S.finite;
        return Sl;
    }
    for (const auto& pa : S.finite)
        for (const auto& above : split_prime(ell, pa.p)) Sl.finite.push_back(above);
    return Sl;
}

// ---------------------------------------------------------- quadratic forms

namespace {
Int form_disc(const QuadForm& f) { return f.b * f.b - 4 * f.a * f.c; }
}  // namespace

QuadForm reduce_form(QuadForm f) {
    Int D = form_disc(f);
    if (D >= 0 || f.a <= 0) throw std::invalid_argument("reduce_form: not positive definite");
    while (true) {
        // normalize: -a < b <= a
        if (f.b > f.a || f.b <= -f.a) {
            Int twice_a = 2 * f.a;
            Int r = f.b % twice_a;
            if (r > f.a) r -= twice_a;
            if (r <= -f.a) r += twice_a;
            f.c = (r * r - D) / (4 * f.a);
            f.b = r;
        }
        if (f.a > f.c) {
            f = {f.c, -f.b, f.a};
            continue;
        }
        if (f.a == f.c && f.b < 0) f.b = -f.b;
        return f;
    }
}

std::vector<QuadForm> reduced_forms(const Int& D) {
    if (D >= 0) throw std::invalid_argument("reduced_forms: D must be negative");
    Int dm4 = D % 4;
    if (dm4 < 0) dm4 += 4;
    if (dm4 != 0 && dm4 != 1) throw std::invalid_argument("reduced_forms: D must be 0 or 1 mod 4");
    std::vector<QuadForm> forms;
    for (Int a = 1; 3 * a * a <= -D; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b - D;
            if (num % (4 * a) != 0) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (gcd_pair(gcd_pair(a, b), c) != 1) continue;
            forms.push_back({a, b, c});
        }
    }
    std::sort(forms.begin(), forms.end());
    return forms;
}

QuadForm principal_form(const Int& D) {
    Int dm4 = D % 4;
    if (dm4 < 0) dm4 += 4;
    if (dm4 == 0) return {Int(1), Int(0), -D / 4};
    return {Int(1), Int(1), (1 - D) / 4};
}

namespace {
Int eval_form(const QuadForm& f, const Int& x, const Int& y) {
    return f.a * x * x + f.b * x * y + f.c * y * y;
}
}  // namespace

QuadForm compose_forms(const QuadForm& f1, const QuadForm& f2, const Int& D) {
    if (form_disc(f1) != D || form_disc(f2) != D)
        throw std::invalid_argument("compose_forms: discriminant mismatch");
    // Replace f2 by an equivalent form whose leading coefficient is
    // coprime to a1, then use Dirichlet composition.
    QuadForm g2 = f2;
    if (gcd_pair(f1.a, f2.a) != 1) {
        bool found = false;
        for (long bound = 4; !found && bound <= 64; bound *= 2) {
            for (long x = -bound; x <= bound && !found; ++x) {
                for (long y = -bound; y <= bound && !found; ++y) {
                    if (x == 0 && y == 0) continue;
                    if (gcd_pair(Int(x), Int(y)) != 1) continue;
                    Int v = eval_form(f2, Int(x), Int(y));
                    if (v == 0 || gcd_pair(v, f1.a) != 1) continue;
                    // complete (x, y) to a unimodular matrix [[x, u], [y, w]]
                    Int u, w, g;
                    mpz_gcdext(g.get_mpz_t(), w.get_mpz_t(), u.get_mpz_t(),
                               Int(x).get_mpz_t(), Int(y).get_mpz_t());
                    u = -u;  // x*w - y*u = 1
                    Int a2 = v;
                    Int b2 = 2 * f2.a * x * u + f2.b * (Int(x) * w + u * Int(y)) + 2 * f2.c * Int(y) * w;
                    Int c2 = eval_form(f2, u, w);
                    g2 = {a2, b2, c2};
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("compose_forms: no coprime representative found");
    }
    // CRT: B = b1 mod 2a1, B = g2.b mod 2a2 (both are = D mod 2)
    Int m1 = 2 * f1.a, m2 = 2 * g2.a;
    Int g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), m1.get_mpz_t(), m2.get_mpz_t());
    Int diff = g2.b - f1.b;
    if (diff % g != 0) throw std::logic_error("compose_forms: CRT inconsistency");
    Int lcm = m1 / g * m2;
    Int B = (f1.b + m1 * (diff / g) * s) % lcm;
    if (B < 0) B += lcm;
    Int A = f1.a * g2.a;
    Int C_num = B * B - D;
    if (C_num % (4 * A) != 0) throw std::logic_error("compose_forms: non-integral composite");
    return reduce_form({A, B, C_num / (4 * A)});
}

namespace {
// Tonelli-Shanks: square root of a mod an odd prime p; a must be a QR.
Int sqrt_mod_p(const Int& a0, const Int& p) {
    Int a = ((a0 % p) + p) % p;
    if (a == 0) return 0;
    if (p % 4 == 3) {
        Int r;
        Int e = (p + 1) / 4;
        mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    }
    Int q = p - 1;
    unsigned long s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    // find a non-residue z
    Int z = 2, half = (p - 1) / 2, t;
    while (true) {
        mpz_powm(t.get_mpz_t(), z.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
        if (t == p - 1) break;
        ++z;
    }
    Int c, r, x, b;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    Int e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    unsigned long m = s;
    while (x != 1) {
        Int xx = x;
        unsigned long i = 0;
        while (xx != 1) {
            xx = xx * xx % p;
            ++i;
        }
        b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = b * b % p;
        r = r * b % p;
        c = b * b % p;
        x = x * c % p;
        m = i;
    }
    return r;
}
}  // namespace

std::optional<QuadForm> prime_form(const Int& D, const Int& p) {
    if (p == 2) {
        for (Int b : {Int(0), Int(1), Int(2)}) {
            Int num = b * b - D;
            if (num % 8 == 0) return reduce_form({p, b, num / 8});
        }
        return std::nullopt;
    }
    Int dm = ((D % p) + p) % p;
    if (dm != 0) {
        Int t, half = (p - 1) / 2;
        mpz_powm(t.get_mpz_t(), dm.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
        if (t == p - 1) return std::nullopt;  // inert
    }
    Int b = sqrt_mod_p(dm, p);
    // b must match the parity of D so that b^2 = D mod 4p (p odd flips parity)
    bool d_odd = mpz_odd_p(D.get_mpz_t()) != 0;
    bool b_odd = mpz_odd_p(b.get_mpz_t()) != 0;
    if (d_odd != b_odd) b += p;
    Int num = b * b - D;
    if (num % (4 * p) != 0) throw std::logic_error("prime_form: square root failed");
    return reduce_form({p, b, num / (4 * p)});
}

Int class_number(const NumberField& field) {
    if (field.is_rationals()) return 1;
    if (field.d > 0)
        throw std::invalid_argument("class_number: real quadratic fields unsupported");
    return Int(static_cast<long>(reduced_forms(field.discriminant).size()));
}

Int s_class_number(const NumberField& field, const PlaceSet& S) {
    if (field.is_rationals()) return 1;
    if (field.d > 0)
        throw std::invalid_argument("s_class_number: real quadratic fields unsupported");
    if (S.field != field)
        throw std::invalid_argument("s_class_number: place set is over a different field");
    Int h = class_number(field);
    const Int D = field.discriminant;
    // subgroup of the form class group generated by the S-prime classes
    std::set<QuadForm> subgroup = {reduce_form(principal_form(D))};
    std::vector<QuadForm> gens;
    std::set<Int> seen;
    for (const auto& pa : S.finite) {
        if (!seen.insert(pa.p).second) continue;
        if (auto f = prime_form(D, pa.p)) gens.push_back(*f);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<QuadForm> current(subgroup.begin(), subgroup.end());
        for (const auto& f : current)
            for (const auto& g : gens)
                if (subgroup.insert(compose_forms(f, g, D)).second) grew = true;
    }
    Int sub = Int(static_cast<long>(subgroup.size()));
    if (h % sub != 0) throw std::logic_error("s_class_number: subgroup order does not divide h");
    return h / sub;
}

Int s_unit_quotient_size(int w, int place_count, const Int& n) {
    if (n < 2) throw std::invalid_argument("s_unit_quotient_size: n must be >= 2");
    if (place_count < 1) throw std::invalid_argument("s_unit_quotient_size: S must contain the archimedean places");
    Int r = gcd_pair(n, Int(w));
    for (int i = 1; i < place_count; ++i) r *= n;
    return r;
}

Int s_unit_quotient_size(const NumberField& field, const PlaceSet& S, const Int& n) {
    if (S.field != field)
        throw std::invalid_argument("s_unit_quotient_size: place set is over a different field");
    return s_unit_quotient_size(field.roots_of_unity, S.size(), n);
}

int certified_place_count(const FieldCertificate& cert, const PlaceSet& S_over_Q) {
    if (!S_over_Q.field.is_rationals())
        throw std::invalid_argument("certified_place_count: S must be over Q");
    int n = cert.real_places + cert.complex_places;
    for (const auto& pa : S_over_Q.finite) {
        auto it = cert.splittings.find(pa.p);
        if (it == cert.splittings.end())
            throw std::invalid_argument("certificate missing splitting data for prime " + pa.p.get_str());
        for (const auto& above : it->second) n += above.count;
    }
    return n;
}

}  // namespace gb
