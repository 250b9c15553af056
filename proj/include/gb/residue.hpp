#ifndef GB_RESIDUE_HPP
#define GB_RESIDUE_HPP

#include <set>
#include <string>
#include <vector>

#include "gb/arith.hpp"
#include "gb/curves.hpp"
#include "gb/numfield.hpp"
#include "gb/poly.hpp"

namespace gb {

/// A closed point of the projective line over Q: a monic irreducible
/// polynomial, or the place at infinity with v(f/g) = deg g - deg f.
struct GeometricPlace {
    bool at_infinity = false;
    QPoly pi;  // monic irreducible when !at_infinity

    static GeometricPlace infinity();
    /// Verifies monic and irreducible (exact through degree 4,
    /// mod-p certificate beyond).
    static GeometricPlace of(const QPoly& pi);
    int residue_degree() const { return at_infinity ? 1 : pi.degree(); }
    std::string str() const;

    bool operator==(const GeometricPlace&) const = default;
    bool operator<(const GeometricPlace& o) const;
};

/// Element of Q(x), stored reduced with monic denominator.
struct RationalFunction {
    QPoly num, den;

    static RationalFunction of(const QPoly& num, const QPoly& den);
    static RationalFunction of(const QPoly& num);
    static RationalFunction constant(const Rat& a);
    static RationalFunction x();

    bool is_zero() const { return num.is_zero(); }
    RationalFunction inverse() const;
    RationalFunction pow(long e) const;
    friend RationalFunction operator*(const RationalFunction&, const RationalFunction&);
    bool operator==(const RationalFunction&) const = default;
    std::string str() const;
};

/// Order of vanishing of a nonzero rational function at a place.
long place_valuation(const RationalFunction& f, const GeometricPlace& v);

/// Class in kappa^x / (kappa^x)^n for kappa the residue field of the place.
/// The representative is a polynomial of degree < deg(pi) (a constant when
/// kappa = Q).
struct ResidueClass {
    GeometricPlace place;
    Int n;
    QPoly rep;

    /// n-th power test: exact in Q (via factorization), and for n = 2 in a
    /// quadratic residue field; other cases throw unless rep == 1.
    bool is_trivial() const;
    ResidueClass operator*(const ResidueClass&) const;
    std::string str() const;
};

/// Tame symbol of (u, v) at a place w:
/// (-1)^{w(u) w(v)} u^{w(v)} v^{-w(u)} evaluated in the residue field.
ResidueClass tame_residue(const RationalFunction& u, const RationalFunction& v,
                          const GeometricPlace& place, const Int& n);

/// Tensor product of symbol classes (u_i, v_i) of exponent n over Q(x).
struct SymbolAlgebra {
    Int n;
    std::vector<std::pair<RationalFunction, RationalFunction>> slots;
};

ResidueClass symbol_residue(const SymbolAlgebra& A, const GeometricPlace& place);

/// Places where the symbol algebra has a nontrivial tame residue, found
/// among the support of the entries plus the place at infinity.
std::set<GeometricPlace> ramification_set(const SymbolAlgebra& A);

std::vector<GeometricPlace> support_places(const SymbolAlgebra& A);

/// Filters candidates a in Q^x by: v_p(a) = 0 mod n at every prime p
/// outside S (only primes in the support of a need checking).
std::vector<Rat> unramified_exponent_filter(const PlaceSet& S_over_Q, const Int& n,
                                            const std::vector<Rat>& candidates);

/// Realization of the unit/class exact sequence over Q: the group D of
/// classes in Q^x/(Q^x)^n with valuation divisible by n outside S is
/// generated by -1 and the primes of S; its order must equal
/// |U(T)/U(T)^n| * |nPic(T)| with the Picard factor 1 over Q.
struct UnitClassSequenceReport {
    Int d_order;
    Int unit_quotient;
    Int pic_torsion;
    bool consistent;
};

UnitClassSequenceReport check_unit_class_sequence(const PlaceSet& S_over_Q, const Int& n);

/// r = number of places where the algebra ramifies; the asserted variant
/// is flagged and never verified.
struct RamificationCount {
    Int r;
    Provenance provenance;
};

RamificationCount genus_ramification_count(const SymbolAlgebra& A);
RamificationCount asserted_ramification_count(const Int& r);

}  // namespace gb

#endif
