#include "gb/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gb {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }

QPoly QPoly::x() { return QPoly({Rat(0), Rat(1)}); }

QPoly QPoly::constant(const Rat& a) { return QPoly({a}); }

void QPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Rat& QPoly::lc() const {
    if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
    return c.back();
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::derivative() const {
    std::vector<Rat> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Rat(static_cast<long>(i)));
    return QPoly(std::move(d));
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& a = c[i];
        if (a == 0) continue;
        if (!first) os << (a > 0 ? " + " : " - ");
        Rat m = first ? a : Rat(abs(a));
        first = false;
        if (i == 0 || m != 1) os << m.get_str();
        if (i > 0) {
            if (m != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return QPoly(std::move(r));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<Rat> r(std::max(a.c.size(), b.c.size()), Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return QPoly(std::move(r));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rat> r(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return QPoly(std::move(r));
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& a : r.c) a = -a;
    return r;
}

std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    QPoly r = f;
    std::vector<Rat> q(std::max(0, f.degree() - g.degree() + 1), Rat(0));
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Rat t = r.lc() / g.lc();
        int k = r.degree() - g.degree();
        q[k] = t;
        for (int i = 0; i <= g.degree(); ++i) r.c[i + k] -= t * g.c[i];
        r.normalize();
    }
    return {QPoly(std::move(q)), r};
}

QPoly poly_gcd(const QPoly& f, const QPoly& g) {
    QPoly a = f, b = g;
    while (!b.is_zero()) {
        QPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    Rat inv = 1 / a.lc();
    for (auto& x : a.c) x *= inv;
    return a;
}

QPoly poly_pow(const QPoly& f, unsigned e) {
    QPoly r = QPoly::constant(1);
    for (unsigned i = 0; i < e; ++i) r = r * f;
    return r;
}

Rat resultant(const QPoly& f, const QPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    int N = m + n;
    // Sylvester matrix, f rows first, coefficients highest-degree leftmost.
    std::vector<std::vector<Rat>> s(N, std::vector<Rat>(N, Rat(0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[i][i + j] = f.c[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[n + i][i + j] = g.c[n - j];
    // Exact Gaussian elimination.
    Rat det = 1;
    for (int col = 0; col < N; ++col) {
        int piv = -1;
        for (int row = col; row < N; ++row)
            if (s[row][col] != 0) {
                piv = row;
                break;
            }
        if (piv < 0) return 0;
        if (piv != col) {
            std::swap(s[piv], s[col]);
            det = -det;
        }
        det *= s[col][col];
        Rat inv = 1 / s[col][col];
        for (int row = col + 1; row < N; ++row) {
            if (s[row][col] == 0) continue;
            Rat t = s[row][col] * inv;
            for (int j = col; j < N; ++j) s[row][j] -= t * s[col][j];
        }
    }
    return det;
}

Rat discriminant(const QPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant of constant polynomial");
    QPoly df = f.derivative();
    if (df.is_zero()) return 0;
    Rat r = resultant(f, df) / f.lc();
    if ((static_cast<long>(d) * (d - 1) / 2) % 2 == 1) r = -r;
    return r;
}

long gauss_valuation(const QPoly& f, const Int& p) {
    if (f.is_zero()) throw std::invalid_argument("gauss_valuation of zero polynomial");
    bool have = false;
    long v = 0;
    for (const auto& a : f.c) {
        if (a == 0) continue;
        long w = padic_valuation(a, p);
        if (!have || w < v) v = w;
        have = true;
    }
    return v;
}

// ---------------------------------------------------------------- FpPoly

namespace {
Int mod_reduce(const Int& a, const Int& p) {
    Int r = a % p;
    if (r < 0) r += p;
    return r;
}

Int mod_inv(const Int& a, const Int& p) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw std::invalid_argument("mod_inv: not invertible");
    return r;
}
}  // namespace

FpPoly::FpPoly(Int prime, std::vector<Int> coeffs) : p(std::move(prime)), c(std::move(coeffs)) {
    for (auto& a : c) a = mod_reduce(a, p);
    normalize();
}

FpPoly FpPoly::x(const Int& p) { return FpPoly(p, {Int(0), Int(1)}); }

FpPoly FpPoly::constant(const Int& p, const Int& a) { return FpPoly(p, {a}); }

void FpPoly::normalize() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

const Int& FpPoly::lc() const {
    if (is_zero()) throw std::invalid_argument("lc of zero polynomial");
    return c.back();
}

Int FpPoly::eval(const Int& x) const {
    Int r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = mod_reduce(r * x + *it, p);
    return r;
}

FpPoly FpPoly::derivative() const {
    std::vector<Int> d;
    for (size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * Int(static_cast<long>(i)));
    return FpPoly(p, std::move(d));
}

FpPoly FpPoly::monic() const {
    if (is_zero()) return *this;
    Int inv = mod_inv(lc(), p);
    std::vector<Int> d = c;
    for (auto& a : d) a = mod_reduce(a * inv, p);
    return FpPoly(p, std::move(d));
}

std::string FpPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c[i] != 1) os << c[i].get_str();
        if (i > 0) {
            if (c[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

bool FpPoly::operator<(const FpPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;)
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    return false;
}

namespace {
void check_same_field(const FpPoly& a, const FpPoly& b) {
    if (a.p != b.p) throw std::invalid_argument("FpPoly modulus mismatch");
}
}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] += b.c[i];
    return FpPoly(a.p, std::move(r));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    std::vector<Int> r(std::max(a.c.size(), b.c.size()), Int(0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] += a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] -= b.c[i];
    return FpPoly(a.p, std::move(r));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    check_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p, {});
    std::vector<Int> r(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
    return FpPoly(a.p, std::move(r));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g) {
    check_same_field(f, g);
    if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
    FpPoly r = f;
    std::vector<Int> q(std::max(0, f.degree() - g.degree() + 1), Int(0));
    Int glc_inv = mod_inv(g.lc(), g.p);
    while (!r.is_zero() && r.degree() >= g.degree()) {
        Int t = mod_reduce(r.lc() * glc_inv, g.p);
        int k = r.degree() - g.degree();
        q[k] = t;
        for (int i = 0; i <= g.degree(); ++i)
            r.c[i + k] = mod_reduce(r.c[i + k] - t * g.c[i], g.p);
        r.normalize();
    }
    return {FpPoly(g.p, std::move(q)), r};
}

FpPoly poly_gcd(const FpPoly& f, const FpPoly& g) {
    FpPoly a = f, b = g;
    while (!b.is_zero()) {
        FpPoly r = divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
    FpPoly r = FpPoly::constant(mod.p, 1);
    FpPoly b = divmod(base, mod).second;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = divmod(r * b, mod).second;
        b = divmod(b * b, mod).second;
        k >>= 1;
    }
    return r;
}

FpPoly reduce_mod_p(const QPoly& f, const Int& p) {
    if (f.is_zero()) return FpPoly(p, {});
    if (gauss_valuation(f, p) < 0)
        throw std::invalid_argument("reduce_mod_p: negative Gauss valuation");
    std::vector<Int> r;
    for (const auto& a : f.c) {
        Int num = mod_reduce(a.get_num(), p);
        Int den = mod_reduce(a.get_den(), p);
        r.push_back(mod_reduce(num * mod_inv(den, p), p));
    }
    return FpPoly(p, std::move(r));
}

// ------------------------------------------------ factorization over F_p

namespace {

FpPoly pth_root(const FpPoly& f) {
    // f = g(x^p); Frobenius is the identity on F_p coefficients.
    unsigned long p = f.p.get_ui();
    std::vector<Int> g;
    for (size_t i = 0; i < f.c.size(); i += p) g.push_back(f.c[i]);
    return FpPoly(f.p, std::move(g));
}

// Yun-style squarefree decomposition in char p (f monic).
void squarefree_decompose(const FpPoly& f, int mult, std::vector<std::pair<FpPoly, int>>& out) {
    if (f.degree() < 1) return;
    FpPoly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decompose(pth_root(f), mult * static_cast<int>(f.p.get_ui()), out);
        return;
    }
    FpPoly c = poly_gcd(f, d);
    FpPoly w = divmod(f, c).first;
    int i = 1;
    while (w.degree() > 0) {
        FpPoly y = poly_gcd(w, c);
        FpPoly z = divmod(w, y).first;  // factors of exact multiplicity i (i prime to p)
        if (z.degree() > 0) out.emplace_back(z.monic(), mult * i);
        ++i;
        w = y;
        c = divmod(c, y).first;
    }
    if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * static_cast<int>(f.p.get_ui()), out);
}

FpPoly random_poly(const Int& p, int deg, std::mt19937_64& rng) {
    std::vector<Int> c(deg + 1);
    for (auto& a : c) a = Int(static_cast<unsigned long>(rng() % p.get_ui()));
    if (c.back() == 0) c.back() = 1;
    return FpPoly(p, std::move(c));
}

// Equal-degree splitting of a squarefree product of degree-d irreducibles.
void edf(const FpPoly& f, int d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Int& p = f.p;
    Int q;
    mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), d);
    FpPoly g;
    while (true) {
        FpPoly a = random_poly(p, f.degree() - 1, rng);
        if (p == 2) {
            // trace map over F_{2^d}
            FpPoly t = a, s = a;
            for (int i = 1; i < d; ++i) {
                s = divmod(s * s, f).second;
                t = t + s;
            }
            g = poly_gcd(t, f);
        } else {
            FpPoly b = powmod(a, (q - 1) / 2, f);
            g = poly_gcd(b - FpPoly::constant(p, 1), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) break;
    }
    edf(g, d, rng, out);
    edf(divmod(f, g).first, d, rng, out);
}

}  // namespace

std::uint64_t& default_factor_seed() {
    static std::uint64_t seed = 0x5EED;
    return seed;
}

std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f, std::uint64_t seed) {
    if (f.is_zero()) throw std::invalid_argument("factor_mod_p: zero polynomial");
    std::vector<std::pair<FpPoly, int>> result;
    if (f.degree() < 1) return result;
    std::mt19937_64 rng(seed);
    std::vector<std::pair<FpPoly, int>> sqfree;
    squarefree_decompose(f.monic(), 1, sqfree);
    for (const auto& [g, mult] : sqfree) {
        // distinct-degree on the squarefree part
        FpPoly rem = g;
        FpPoly xp = FpPoly::x(f.p);
        FpPoly h = xp;  // x^{p^d} mod rem, updated per d
        for (int d = 1; rem.degree() >= 2 * d; ++d) {
            h = powmod(h, f.p, rem);
            FpPoly gd = poly_gcd(h - xp, rem);
            if (gd.degree() > 0) {
                std::vector<FpPoly> irr;
                edf(gd, d, rng, irr);
                for (auto& q : irr) result.emplace_back(std::move(q), mult);
                rem = divmod(rem, gd).first;
                h = divmod(h, rem).second;
            }
        }
        if (rem.degree() > 0) result.emplace_back(rem.monic(), mult);
    }
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

// --------------------------------------------------- factorization over Q

namespace {

// Integer divisors of n (positive), n != 0.
std::vector<Int> positive_divisors(const Int& n) {
    Factorization f = factor(abs(n));
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, e] : f.factors) {
        size_t sz = divs.size();
        Int pe = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pe *= p;
            for (size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pe);
        }
    }
    return divs;
}

// Primitive integer polynomial with the same roots as f.
std::vector<Int> integer_model(const QPoly& f) {
    Int den = 1;
    for (const auto& a : f.c) {
        Int d;
        mpz_lcm(d.get_mpz_t(), den.get_mpz_t(), a.get_den().get_mpz_t());
        den = d;
    }
    std::vector<Int> c;
    Int content = 0;
    for (const auto& a : f.c) {
        Rat s = a * Rat(den);
        c.push_back(Int(s.get_num()));
        Int g;
        mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.back().get_mpz_t());
        content = g;
    }
    if (content > 1)
        for (auto& a : c) a /= content;
    return c;
}

}  // namespace

std::vector<Rat> rational_roots(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("rational_roots: zero polynomial");
    std::vector<Rat> roots;
    QPoly g = f;
    if (g.degree() >= 1 && g.c[0] == 0) {
        roots.emplace_back(0);
        while (g.degree() >= 1 && g.c[0] == 0) g = divmod(g, QPoly::x()).first;
    }
    if (g.degree() < 1) return roots;
    std::vector<Int> ic = integer_model(g);
    for (const Int& num : positive_divisors(ic.front()))
        for (const Int& den : positive_divisors(ic.back()))
            for (int s : {1, -1}) {
                Rat cand(s * num, den);
                cand.canonicalize();
                if (g.eval(cand) == 0 &&
                    std::find(roots.begin(), roots.end(), cand) == roots.end())
                    roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end(), [](const Rat& a, const Rat& b) { return a < b; });
    return roots;
}

namespace {

// Quadratic splittings of a rootless monic rational quartic; empty if irreducible.
std::vector<QPoly> quartic_quadratic_factors(const QPoly& f) {
    // scale x = y / D so the quartic becomes monic with integer coefficients
    QPoly m = f;
    Rat inv = 1 / m.lc();
    for (auto& a : m.c) a *= inv;
    Int D = 1;
    for (int i = 0; i < 4; ++i) {
        // need D^{4-i} * a_i integral; take lcm of denominators as a safe D
        Int d;
        mpz_lcm(d.get_mpz_t(), D.get_mpz_t(), m.c[i].get_den().get_mpz_t());
        D = d;
    }
    Int Dp = 1;
    std::vector<Int> e(5);
    e[4] = 1;
    for (int i = 3; i >= 0; --i) {
        Dp *= D;
        Rat s = m.c[i] * Rat(Dp);
        // den(c_i) | D and the power of D is >= 1, so s is integral
        e[i] = Int(s.get_num());
    }
    // h(y) = y^4 + e3 y^3 + e2 y^2 + e1 y + e0 = (y^2+py+q)(y^2+ry+s)
    if (e[0] == 0) return {};  // has root 0; callers pass rootless input
    for (const Int& q0 : positive_divisors(e[0]))
        for (int sq : {1, -1}) {
            Int q = sq * q0;
            Int s = e[0] / q;
            // p + r = e3, p r = e2 - q - s, p s + q r = e1
            Int sum = e[3], prod = e[2] - q - s;
            Int disc = sum * sum - 4 * prod;
            if (disc < 0) continue;
            Int rt;
            mpz_sqrt(rt.get_mpz_t(), disc.get_mpz_t());
            if (rt * rt != disc) continue;
            for (int sgn2 : {1, -1}) {
                Int twice_p = sum + sgn2 * rt;
                if (twice_p % 2 != 0) continue;
                Int p = twice_p / 2, r = sum - p;
                if (p * s + q * r != e[1]) continue;
                // map back: factor of f(x) is x^2 + (p/D) x + q/D^2
                QPoly f1({Rat(q) / Rat(D * D), Rat(p) / Rat(D), Rat(1)});
                QPoly f2({Rat(s) / Rat(D * D), Rat(r) / Rat(D), Rat(1)});
                return {f1, f2};
            }
        }
    return {};
}

QPoly make_monic(const QPoly& f) {
    QPoly m = f;
    Rat inv = 1 / m.lc();
    for (auto& a : m.c) a *= inv;
    return m;
}

}  // namespace

bool is_irreducible_over_Q(const QPoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("is_irreducible_over_Q: constant polynomial");
    if (d == 1) return true;
    if (!rational_roots(f).empty()) return false;
    if (d == 2 || d == 3) return true;
    if (d == 4) return quartic_quadratic_factors(make_monic(f)).empty();
    // mod-p certificate for higher degree
    std::vector<Int> ic = integer_model(f);
    for (long p = 2; p < 500; ++p) {
        if (!is_prime(Int(p)) || ic.back() % p == 0) continue;
        FpPoly fp(Int(p), std::vector<Int>(ic.begin(), ic.end()));
        auto fs = factor_mod_p(fp);
        if (fs.size() == 1 && fs[0].second == 1) return true;
    }
    throw std::domain_error("is_irreducible_over_Q: no certificate found for degree >= 5");
}

std::vector<std::pair<QPoly, int>> factor_over_Q(const QPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("factor_over_Q: zero polynomial");
    std::vector<std::pair<QPoly, int>> out;
    QPoly g = make_monic(f);
    if (g.degree() == 0) return out;
    // radical = g / gcd(g, g')
    QPoly rad = divmod(g, poly_gcd(g, g.derivative())).first;
    std::vector<QPoly> irreducibles;
    for (const Rat& r : rational_roots(rad)) irreducibles.push_back(QPoly({-r, Rat(1)}));
    QPoly rem = rad;
    for (const auto& lin : irreducibles) rem = divmod(rem, lin).first;
    if (rem.degree() == 1) {
        irreducibles.push_back(make_monic(rem));
    } else if (rem.degree() == 2 || rem.degree() == 3) {
        irreducibles.push_back(make_monic(rem));  // rootless low degree: irreducible
    } else if (rem.degree() == 4) {
        auto quads = quartic_quadratic_factors(make_monic(rem));
        if (quads.empty())
            irreducibles.push_back(make_monic(rem));
        else
            for (auto& q : quads) irreducibles.push_back(q);
    } else if (rem.degree() >= 5) {
        if (!is_irreducible_over_Q(rem))
            throw std::domain_error("factor_over_Q: reducible rootless factor of degree >= 5");
        irreducibles.push_back(make_monic(rem));
    }
    for (const auto& irr : irreducibles) {
        int mult = 0;
        QPoly h = g;
        while (true) {
            auto [q, r] = divmod(h, irr);
            if (!r.is_zero()) break;
            h = q;
            ++mult;
        }
        out.emplace_back(irr, mult);
    }
    return out;
}

}  // namespace gb
