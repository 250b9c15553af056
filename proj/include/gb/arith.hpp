#ifndef GB_ARITH_HPP
#define GB_ARITH_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gb {

using Int = mpz_class;
using Rat = mpq_class;

/// Deterministic primality test. Miller-Rabin with a base set that is
/// exact for inputs below 2^64; larger inputs additionally go through
/// extra rounds (inputs in this tool are small discriminant-sized values).
bool is_prime(const Int& n);

/// Signed integer as sign * product of prime powers, primes strictly
/// increasing. The empty product (units +1/-1) has no factors.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<Int, unsigned>> factors;

    Int value() const;
    unsigned exponent_of(const Int& p) const;
    std::string str() const;  // e.g. "-1 * 2^3 * 3^3 * 7"

    Factorization& operator*=(const Factorization& other);
    friend Factorization operator*(Factorization a, const Factorization& b) {
        a *= b;
        return a;
    }
    Factorization pow(unsigned e) const;
    bool operator==(const Factorization&) const = default;
};

/// Is a divisible by b (both nonzero)?
bool divides(const Int& b, const Int& a);

/// Trial division to 10^6, then Pollard rho (Brent variant) with the
/// deterministic primality test above. Rejects n == 0.
Factorization factor(const Int& n);

/// Euler totient; rejects n < 1.
Int euler_phi(const Int& n);

/// gcd, rejecting (0, 0).
Int gcd_pair(const Int& m, const Int& n);

/// Largest divisor of h supported on the primes dividing n.
/// Requires h >= 1, n >= 2.
Int n_part(const Int& h, const Int& n);

/// p-adic valuation of a nonzero integer / rational.
long padic_valuation(const Int& a, const Int& p);
long padic_valuation(const Rat& a, const Int& p);

}  // namespace gb

#endif
