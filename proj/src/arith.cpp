#include "gb/arith.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace gb {

namespace {

Int powmod(Int base, Int exp, const Int& mod) {
    Int r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, unsigned long s) {
    if (a % n == 0) return false;
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

}  // namespace

bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    // This base set is exact below 2^64.
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (miller_rabin_witness(n, Int(a), d, s)) return false;
    }
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 64) {
        return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
    }
    return true;
}

Int Factorization::value() const {
    Int v = sign;
    for (const auto& [p, e] : factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
        v *= pe;
    }
    return v;
}

unsigned Factorization::exponent_of(const Int& p) const {
    for (const auto& [q, e] : factors)
        if (q == p) return e;
    return 0;
}

std::string Factorization::str() const {
    std::ostringstream os;
    bool first = true;
    if (sign < 0) {
        os << "-1";
        first = false;
    }
    for (const auto& [p, e] : factors) {
        if (!first) os << " * ";
        os << p.get_str();
        if (e > 1) os << "^" << e;
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

Factorization& Factorization::operator*=(const Factorization& other) {
    sign *= other.sign;
    std::map<Int, unsigned> merged;
    for (const auto& [p, e] : factors) merged[p] += e;
    for (const auto& [p, e] : other.factors) merged[p] += e;
    factors.assign(merged.begin(), merged.end());
    return *this;
}

Factorization Factorization::pow(unsigned e) const {
    Factorization r;
    r.sign = (sign < 0 && e % 2 == 1) ? -1 : 1;
    if (e == 0) return r;
    for (const auto& [p, k] : factors) r.factors.emplace_back(p, k * e);
    return r;
}

bool divides(const Int& b, const Int& a) {
    if (b == 0) throw std::invalid_argument("divides: zero divisor");
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

namespace {

const long kTrialBound = 1000000;

Int pollard_brent(const Int& n, unsigned long seed) {
    // n composite, odd, no factor below the trial bound.
    gmp_randclass rng(gmp_randinit_mt);
    rng.seed(seed);
    while (true) {
        Int y = rng.get_z_range(n - 3) + 2;
        Int c = rng.get_z_range(n - 2) + 1;
        Int g = 1, r = 1, q = 1, x, ys;
        while (g == 1) {
            x = y;
            for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
            Int k = 0;
            while (k < r && g == 1) {
                ys = y;
                Int lim = std::min(Int(128), Int(r - k));
                for (Int i = 0; i < lim; ++i) {
                    y = (y * y + c) % n;
                    q = q * abs(x - y) % n;
                }
                g = gcd_pair(q, n);
                k += 128;
            }
            r *= 2;
        }
        if (g == n) {
            g = 1;
            while (g == 1) {
                ys = (ys * ys + c) % n;
                g = gcd_pair(abs(x - ys), n);
            }
        }
        if (g != n) return g;
        ++seed;
    }
}

void factor_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_brent(n, 0xC0FFEEul);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace

Factorization factor(const Int& n) {
    if (n == 0) throw std::invalid_argument("factor: zero input");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    Int m = abs(n);
    std::map<Int, unsigned> exps;
    for (long p = 2; p <= kTrialBound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (p * p > m) break;
        while (m % p == 0) {
            exps[Int(p)] += 1;
            m /= p;
        }
    }
    if (m > 1) factor_into(m, exps);
    f.factors.assign(exps.begin(), exps.end());
    return f;
}

Int euler_phi(const Int& n) {
    if (n < 1) throw std::invalid_argument("euler_phi: input must be >= 1");
    Int r = 1;
    for (const auto& [p, e] : factor(n).factors) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
        r *= pe * (p - 1);
    }
    return r;
}

Int gcd_pair(const Int& m, const Int& n) {
    if (m == 0 && n == 0) throw std::invalid_argument("gcd_pair: (0,0)");
    Int g;
    mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
    return g;
}

Int n_part(const Int& h, const Int& n) {
    if (h < 1) throw std::invalid_argument("n_part: h must be >= 1");
    if (n < 2) throw std::invalid_argument("n_part: n must be >= 2");
    Int r = 1, m = h;
    for (const auto& [p, e] : factor(n).factors) {
        while (m % p == 0) {
            m /= p;
            r *= p;
        }
    }
    return r;
}

long padic_valuation(const Int& a, const Int& p) {
    if (a == 0) throw std::invalid_argument("padic_valuation: zero input");
    long v = 0;
    Int m = a;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

long padic_valuation(const Rat& a, const Int& p) {
    if (a == 0) throw std::invalid_argument("padic_valuation: zero input");
    return padic_valuation(Int(a.get_num()), p) - padic_valuation(Int(a.get_den()), p);
}

}  // namespace gb
