#ifndef GB_NUMFIELD_HPP
#define GB_NUMFIELD_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gb/arith.hpp"
#include "gb/poly.hpp"

namespace gb {

/// Supported base/torsion fields: Q, quadratic Q(sqrt(d)), and the two
/// cyclotomic fields Q(zeta3) = Q(sqrt(-3)) and Q(zeta4) = Q(i).
struct NumberField {
    enum class Kind { Rationals, Quadratic, Zeta3, Zeta4 };

    Kind kind = Kind::Rationals;
    Int d = 0;  // squarefree, quadratic kinds only (Zeta3 -> -3, Zeta4 -> -1)
    int degree = 1;
    Int discriminant = 1;
    int real_places = 1;     // a
    int complex_places = 0;  // c
    int roots_of_unity = 2;  // w = |mu(k)|

    static NumberField rationals();
    static NumberField quadratic(const Int& d);  // d squarefree, != 0, 1
    static NumberField zeta3();
    static NumberField zeta4();

    bool is_rationals() const { return kind == Kind::Rationals; }
    QPoly defining_polynomial() const;  // non-rational kinds
    std::string name() const;
    bool operator==(const NumberField&) const = default;
};

/// One rational prime's splitting data in a quadratic field.
struct PrimeAbove {
    Int p;
    int e = 1;
    int f = 1;
    int count = 1;  // number of conjugate primes with this (e, f)
    bool operator==(const PrimeAbove&) const = default;
};

/// Splitting of p in a non-rational supported field; sum of e*f*count
/// equals the degree.
std::vector<PrimeAbove> split_prime(const NumberField& field, const Int& p);

/// A finite set of places containing all archimedean ones.
struct PlaceSet {
    NumberField field;
    std::vector<PrimeAbove> finite;  // one entry per rational prime below

    /// Number of places: all archimedean ones plus the finite entries
    /// counted with their conjugate multiplicity.
    int size() const;
    std::vector<Int> rational_primes() const;
    bool contains_prime(const Int& p) const;
    bool operator==(const PlaceSet&) const = default;
};

/// S over Q from a set of rational primes (infinity always included).
PlaceSet place_set_over_Q(const std::vector<Int>& primes);

/// S^ell: all extensions of the places of S (over Q) to ell.
PlaceSet extend_place_set(const PlaceSet& S, const NumberField& ell);

// --------------------------- binary quadratic forms (imaginary quadratic)

/// Primitive positive definite form a x^2 + b xy + c y^2 of discriminant D.
struct QuadForm {
    Int a, b, c;
    bool operator==(const QuadForm&) const = default;
    bool operator<(const QuadForm& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

QuadForm reduce_form(QuadForm f);
std::vector<QuadForm> reduced_forms(const Int& D);  // D < 0, D = 0,1 mod 4, primitive only
QuadForm compose_forms(const QuadForm& f1, const QuadForm& f2, const Int& D);
QuadForm principal_form(const Int& D);
/// Form of norm p for a non-inert p; nullopt when p is inert.
std::optional<QuadForm> prime_form(const Int& D, const Int& p);

/// h(Q) = 1; imaginary quadratic fields by reduced-form count.
/// Real quadratic fields are rejected.
Int class_number(const NumberField& field);

/// Order of Cl(k) / <classes of the finite primes in S>.
Int s_class_number(const NumberField& field, const PlaceSet& S);

/// |U(T)/U(T)^n| = (n, w) * n^{|S| - 1} for T the complement of S.
Int s_unit_quotient_size(const NumberField& field, const PlaceSet& S, const Int& n);
Int s_unit_quotient_size(int w, int place_count, const Int& n);

/// User-supplied data for fields outside the supported list. Consumed
/// without verification; reports must flag derived values as asserted.
struct FieldCertificate {
    std::string label;
    int degree = 0;
    int real_places = 0;
    int complex_places = 0;
    int roots_of_unity = 2;
    Int class_number_S = 1;  // h_ell(S^ell)
    std::map<Int, std::vector<PrimeAbove>> splittings;  // rational prime -> primes above
    bool operator==(const FieldCertificate&) const = default;
};

/// |S^ell| from a certificate for S given over Q.
int certified_place_count(const FieldCertificate& cert, const PlaceSet& S_over_Q);

}  // namespace gb

#endif
