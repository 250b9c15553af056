#ifndef GB_POLY_HPP
#define GB_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gb/arith.hpp"

namespace gb {

/// Dense univariate polynomial over Q, constant term first.
/// The zero polynomial has an empty coefficient list.
struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly x();
    static QPoly constant(const Rat& a);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }  // -1 for zero
    const Rat& lc() const;
    Rat eval(const Rat& x) const;
    QPoly derivative() const;
    std::string str(const std::string& var = "x") const;

    void normalize();  // drop trailing zeros

    friend QPoly operator+(const QPoly&, const QPoly&);
    friend QPoly operator-(const QPoly&, const QPoly&);
    friend QPoly operator*(const QPoly&, const QPoly&);
    QPoly operator-() const;
    bool operator==(const QPoly&) const = default;
};

/// Quotient and remainder over Q; g must be nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& f, const QPoly& g);

/// Monic gcd over Q.
QPoly poly_gcd(const QPoly& f, const QPoly& g);

QPoly poly_pow(const QPoly& f, unsigned e);

/// Resultant as det of the Sylvester matrix with the f-coefficient rows
/// first (deg g rows of f, then deg f rows of g). Both inputs nonzero.
Rat resultant(const QPoly& f, const QPoly& g);

/// disc(f) = (-1)^{d(d-1)/2} res(f, f') / lc(f), d = deg f >= 1.
Rat discriminant(const QPoly& f);

/// Gauss extension of the p-adic valuation: min over nonzero coefficients.
long gauss_valuation(const QPoly& f, const Int& p);

/// Dense polynomial over F_p, coefficients reduced to [0, p).
struct FpPoly {
    Int p;
    std::vector<Int> c;

    FpPoly() : p(0) {}
    FpPoly(Int prime, std::vector<Int> coeffs);
    static FpPoly x(const Int& p);
    static FpPoly constant(const Int& p, const Int& a);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const;
    Int eval(const Int& x) const;
    FpPoly derivative() const;
    FpPoly monic() const;
    std::string str(const std::string& var = "x") const;
    void normalize();

    friend FpPoly operator+(const FpPoly&, const FpPoly&);
    friend FpPoly operator-(const FpPoly&, const FpPoly&);
    friend FpPoly operator*(const FpPoly&, const FpPoly&);
    bool operator==(const FpPoly&) const = default;
    bool operator<(const FpPoly&) const;  // lexicographic, for ordered output
};

std::pair<FpPoly, FpPoly> divmod(const FpPoly& f, const FpPoly& g);
FpPoly poly_gcd(const FpPoly& f, const FpPoly& g);
FpPoly powmod(const FpPoly& base, const Int& e, const FpPoly& mod);

/// Coefficientwise reduction; requires gauss_valuation(f, p) >= 0.
FpPoly reduce_mod_p(const QPoly& f, const Int& p);

/// Process-wide default seed for the randomized factoring steps; settable
/// from the command line so runs reproduce.
std::uint64_t& default_factor_seed();

/// Monic irreducible factors with multiplicities, sorted deterministically.
/// Squarefree + distinct-degree + Cantor-Zassenhaus; the RNG is seeded so
/// runs reproduce.
std::vector<std::pair<FpPoly, int>> factor_mod_p(const FpPoly& f,
                                                 std::uint64_t seed = default_factor_seed());

/// Rational roots of f over Q (each listed once).
std::vector<Rat> rational_roots(const QPoly& f);

/// Factorization over Q into irreducibles (content dropped, factors monic),
/// exact through degree 4; throws for degree >= 5 composites that have no
/// rational root.
std::vector<std::pair<QPoly, int>> factor_over_Q(const QPoly& f);

/// Exact irreducibility over Q for deg <= 4; mod-p certificate above that.
bool is_irreducible_over_Q(const QPoly& f);

}  // namespace gb

#endif
