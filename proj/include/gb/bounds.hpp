#ifndef GB_BOUNDS_HPP
#define GB_BOUNDS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gb/arith.hpp"
#include "gb/curves.hpp"
#include "gb/numfield.hpp"

namespace gb {

/// Thrown when a formula's hypotheses are not established (distinct from
/// invalid input); the CLI maps this to its own exit code.
struct RefusalError : std::runtime_error {
    explicit RefusalError(const std::string& what) : std::runtime_error(what) {}
};

/// Order of the unramified n-torsion Brauer group of a global field:
/// (n,2)^a n^{b-1} if b > 0, (n,2)^{a-1} if b = 0 < a, and 1 if a = b = 0,
/// where a = number of real places and b = number of finite places in S.
/// Always divides (n,2)^a n^b (checked).
Int beta(const Int& n, long a, long b);

/// x^e as a Factorization; x >= 1.
Factorization fpow(const Int& x, unsigned long e);

/// Bound on |H^1(k, M)_T| for M of rank d over Z/n:
/// inflation_bound * ( (n, w_ell) n^{|S^ell|-1} * n_part(h_ell_S, n) )^d.
Factorization h1_unramified_bound(const Int& n, long d, long s_ell_size, int w_ell,
                                  const Int& h_ell_S, const Factorization& inflation_bound);

struct TwoBounds {
    Factorization precise;     // (n,2)^a n^{b + 2g|S|} h^{2g}
    Factorization simplified;  // n^{(2g+1)|S|} h^{2g}
};

/// Requires the rational-point and rational-n-torsion hypotheses; refuses
/// otherwise. Checks that the precise value divides the simplified one.
TwoBounds theorem_8_2_bound(const Int& n, long a, long b, long g, long s_size, const Int& h_k_S,
                            bool rational_point, bool n_torsion_rational);

/// phi(n)^r times a Brauer-group bound.
Factorization corollary_8_3_genus_bound(const Int& n, const Int& r, const Factorization& brauer);

/// Elliptic-curve bound for prime p:
/// 2^{a + b + 2|S^ell|} h^2 for p = 2, p^{1 + b + 2|S^ell|} h^2 for p > 2.
Factorization prop_9_2_bound(const Int& p, long a, long b, long s_ell_size, const Int& h_ell_S);

struct HyperellipticBoundData {
    long g = 0;
    // split case: base-field data
    long a = 0, b = 0, s_size = 0;
    Int h_k_S = 1;
    // generic (symmetric-group splitting field) case
    long s_ell_size = 0;
    Int h_ell_S = 1;
};

/// n = 2 hyperelliptic bounds: split curves get 2^{a + b + 2g|S|} h_k(S)^{2g};
/// the generic case gets 2^{2g(|S^ell| + 2)} h_ell(S^ell)^{2g}.
Factorization prop_9_5_bounds(bool split, const HyperellipticBoundData& data);

// ------------------------------------------------------------- pipeline

struct ReportValue {
    std::string name;
    Factorization value;
    Provenance provenance = Provenance::Computed;
    bool operator==(const ReportValue&) const = default;
};

/// An audited claim "lhs divides rhs"; holds() recomputes it exactly.
struct DividesClaim {
    std::string label;
    Factorization lhs, rhs;
    bool holds() const;
    bool operator==(const DividesClaim&) const = default;
};

/// Genus bound phi(n)^r * brauer; r may be unknown (symbolic).
struct GenusBound {
    Factorization brauer;
    Int phi;
    std::optional<Int> r;
    Provenance r_provenance = Provenance::UserAsserted;

    bool symbolic() const { return !r.has_value(); }
    Factorization value() const;  // requires r
    std::string str() const;      // "phi^r * <brauer>" when symbolic
    bool operator==(const GenusBound&) const = default;
};

struct PipelineConfig {
    enum class CurveKind { Elliptic, EllipticRoots, Hyperelliptic, Paladino } kind =
        CurveKind::Elliptic;
    Rat ca = 0, cb = 0;              // elliptic y^2 = x^3 + ca x + cb
    std::vector<Rat> roots;          // elliptic via roots
    std::vector<Rat> f_coeffs;       // hyperelliptic f, constant term first
    Rat beta_param = 1, h_param = 1; // two-parameter family
    Int n = 2;

    std::optional<std::vector<Int>> forced_S;  // finite primes; marks override
    std::optional<Int> r;                      // asserted ramification count
    bool rational_point = false;               // C(k) nonempty flag
    bool n_torsion_rational = false;           // asserted k-rational n-torsion
    bool galois_symmetric = false;             // generic hyperelliptic flag
    std::optional<FieldCertificate> ell_certificate;
};

struct BoundReport {
    std::string curve_id;
    std::string route;
    Int n;
    PlaceSet S;  // over Q
    bool s_override = false;
    TorsionFieldData torsion;
    long s_ell_size = 0;
    Provenance s_ell_provenance = Provenance::Computed;
    long a = 0, b = 0, c = 0, g = 0;
    int w_ell = 2;

    ReportValue h_k_S;
    ReportValue h_ell_S;
    ReportValue beta_value;      // beta(n, a, b)
    ReportValue beta_envelope;   // (n,2)^a n^b
    ReportValue unit_quotient;   // |U/U^n| for ell
    ReportValue pic_bound;       // n_part(h_ell(S^ell), n)
    ReportValue inflation;       // |H^1(ell/k, M)| bound
    ReportValue h1_bound;
    ReportValue brauer_bound;
    GenusBound genus;
    std::vector<DividesClaim> claims;

    /// Re-verifies every divides-claim and the internal products.
    bool self_audit() const;
    bool operator==(const BoundReport&) const = default;
};

BoundReport run_pipeline(const PipelineConfig& cfg);

}  // namespace gb

#endif
