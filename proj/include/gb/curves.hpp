#ifndef GB_CURVES_HPP
#define GB_CURVES_HPP

#include <optional>
#include <set>
#include <string>

#include "gb/arith.hpp"
#include "gb/numfield.hpp"
#include "gb/poly.hpp"

namespace gb {

enum class Provenance { Computed, PaperAsserted, UserAsserted };
std::string provenance_name(Provenance p);

/// Torsion field attached to a curve for one prime p.
struct TorsionFieldData {
    Int p;
    std::optional<NumberField> field;          // when supported
    std::optional<FieldCertificate> certificate;  // otherwise
    Provenance provenance = Provenance::Computed;
    bool operator==(const TorsionFieldData&) const = default;
};

/// y^2 = x^3 + a x + b over Q, smooth.
struct EllipticCurve {
    Rat a, b;

    EllipticCurve(Rat a_, Rat b_);
    Rat disc() const;  // -16(4a^3 + 27b^2)
    QPoly cubic() const;              // x^3 + a x + b
    QPoly three_division_poly() const;  // 3x^4 + 6a x^2 + 12b x - a^2
};

/// y^2 = (x - e1)(x - e2)(x - e3), normalized by the depressing shift.
EllipticCurve elliptic_from_roots(const Rat& e1, const Rat& e2, const Rat& e3);

/// y^2 = f(x), f separable of degree m >= 3.
struct HyperellipticCurve {
    QPoly f;
    int genus;

    explicit HyperellipticCurve(QPoly f_);
};

/// Genus of y^2 = f(x) with deg f = m: floor((m - 1) / 2).
int hyperelliptic_genus(int m);

/// Superset of the primes of bad reduction: support of the
/// denominator-cleared naive discriminant (for hyperelliptic also the
/// leading coefficient support and 2).
std::set<Int> bad_primes(const EllipticCurve& E);
std::set<Int> bad_primes(const HyperellipticCurve& C);

/// S = archimedean places + divisors of n + bad primes; n > 1 required.
PlaceSet build_S(const EllipticCurve& E, const Int& n);
PlaceSet build_S(const HyperellipticCurve& C, const Int& n);

/// The two-parameter elliptic family over Q whose 3-torsion field is
/// Q(zeta3). delta_formula records the family discriminant expression
/// printed alongside the family; it is kept separately because it does
/// not agree with the discriminant of the constructed model (the two
/// differ beyond powers of 2 and 3; see the regression tests).
struct PaladinoCurve {
    EllipticCurve curve;
    Rat delta_formula;  // -216 beta^3 (h^4 - 6 beta^2 h^2 + 12 beta^3) / h^6
    TorsionFieldData torsion;  // p = 3, Q(zeta3), paper-asserted
};

PaladinoCurve paladino_curve(const Rat& beta, const Rat& h);

/// Splitting behavior of the 2-torsion of an elliptic curve over Q.
struct TwoTorsionField {
    enum class Kind { Split, Quadratic, CyclicCubic, S3 } kind;
    std::optional<NumberField> field;  // Split -> Q, Quadratic -> the field
    std::string describe() const;
};

TwoTorsionField two_torsion_field(const EllipticCurve& E);

/// Verifier for a candidate 3-torsion field: psi_3 must split into
/// factors of degree <= 2 whose splitting fields lie in ell, and ell
/// must contain zeta3 (i.e. ell = Q(zeta3) among supported fields).
bool verify_three_torsion_field(const EllipticCurve& E, const NumberField& ell);

/// True iff f splits into linear factors over Q.
bool is_split_hyperelliptic(const HyperellipticCurve& C);

}  // namespace gb

#endif
