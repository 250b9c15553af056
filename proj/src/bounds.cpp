#include "gb/bounds.hpp"

#include <sstream>

namespace gb {

Factorization fpow(const Int& x, unsigned long e) {
    if (x < 1) throw std::invalid_argument("fpow: base must be positive");
    if (e == 0 || x == 1) return Factorization{};
    return factor(x).pow(static_cast<unsigned>(e));
}

namespace {
Int ipow(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}
}  // namespace

Int beta(const Int& n, long a, long b) {
    if (n < 2) throw std::invalid_argument("beta: n >= 2 required");
    if (a < 0 || b < 0) throw std::invalid_argument("beta: a, b >= 0 required");
    Int n2 = gcd_pair(n, 2);
    Int value;
    if (b > 0)
        value = ipow(n2, a) * ipow(n, b - 1);
    else if (a > 0)
        value = ipow(n2, a - 1);
    else
        value = 1;
    Int envelope = ipow(n2, a) * ipow(n, b);
    if (!divides(value, envelope)) throw std::logic_error("beta: envelope divisibility failed");
    return value;
}

Factorization h1_unramified_bound(const Int& n, long d, long s_ell_size, int w_ell,
                                  const Int& h_ell_S, const Factorization& inflation_bound) {
    if (n < 2 || d < 0 || s_ell_size < 1 || w_ell < 1 || h_ell_S < 1)
        throw std::invalid_argument("h1_unramified_bound: bad parameters");
    Int u = s_unit_quotient_size(w_ell, static_cast<int>(s_ell_size), n);
    Int pic = n_part(h_ell_S, n);
    return inflation_bound * fpow(u * pic, static_cast<unsigned long>(d));
}

TwoBounds theorem_8_2_bound(const Int& n, long a, long b, long g, long s_size, const Int& h_k_S,
                            bool rational_point, bool n_torsion_rational) {
    if (!rational_point)
        throw RefusalError("theorem_8_2_bound: requires a rational point on the curve");
    if (!n_torsion_rational)
        throw RefusalError("theorem_8_2_bound: requires k-rational n-torsion of the Jacobian");
    if (n < 2 || a < 0 || b < 0 || g < 0 || s_size < 1 || h_k_S < 1)
        throw std::invalid_argument("theorem_8_2_bound: bad parameters");
    TwoBounds out;
    out.precise = fpow(gcd_pair(n, 2), a) * fpow(n, b + 2 * g * s_size) * fpow(h_k_S, 2 * g);
    out.simplified = fpow(n, (2 * g + 1) * s_size) * fpow(h_k_S, 2 * g);
    if (!divides(out.precise.value(), out.simplified.value()))
        throw std::logic_error("theorem_8_2_bound: precise value must divide the simplified one");
    return out;
}

Factorization corollary_8_3_genus_bound(const Int& n, const Int& r, const Factorization& brauer) {
    if (r < 0) throw std::invalid_argument("corollary_8_3_genus_bound: r >= 0 required");
    return fpow(euler_phi(n), mpz_get_ui(r.get_mpz_t())) * brauer;
}

Factorization prop_9_2_bound(const Int& p, long a, long b, long s_ell_size, const Int& h_ell_S) {
    if (!is_prime(p)) throw std::invalid_argument("prop_9_2_bound: p must be prime");
    if (a < 0 || b < 0 || s_ell_size < 1 || h_ell_S < 1)
        throw std::invalid_argument("prop_9_2_bound: bad parameters");
    long e = (p == 2 ? a + b : 1 + b) + 2 * s_ell_size;
    return fpow(p, e) * fpow(h_ell_S, 2);
}

Factorization prop_9_5_bounds(bool split, const HyperellipticBoundData& d) {
    if (d.g < 1) throw std::invalid_argument("prop_9_5_bounds: genus >= 1 required");
    if (split) {
        if (d.a < 0 || d.b < 0 || d.s_size < 1 || d.h_k_S < 1)
            throw std::invalid_argument("prop_9_5_bounds: bad split-case data");
        return fpow(2, d.a + d.b + 2 * d.g * d.s_size) * fpow(d.h_k_S, 2 * d.g);
    }
    if (d.s_ell_size < 1 || d.h_ell_S < 1)
        throw std::invalid_argument("prop_9_5_bounds: bad generic-case data");
    return fpow(2, 2 * d.g * (d.s_ell_size + 2)) * fpow(d.h_ell_S, 2 * d.g);
}

bool DividesClaim::holds() const { return divides(lhs.value(), rhs.value()); }

Factorization GenusBound::value() const {
    if (!r) throw std::domain_error("GenusBound: r not supplied (symbolic bound)");
    return fpow(phi, mpz_get_ui(r->get_mpz_t())) * brauer;
}

std::string GenusBound::str() const {
    std::string base = brauer.str();
    if (phi == 1) return base;
    if (r) return value().str();
    return phi.get_str() + "^r * " + base;
}

namespace {

std::string rat_str(const Rat& x) { return x.get_str(); }

void push_claim(std::vector<DividesClaim>& claims, std::string label, Factorization lhs,
                Factorization rhs) {
    claims.push_back(DividesClaim{std::move(label), std::move(lhs), std::move(rhs)});
}

void push_equal(std::vector<DividesClaim>& claims, const std::string& label,
                const Factorization& lhs, const Factorization& rhs) {
    push_claim(claims, label, lhs, rhs);
    push_claim(claims, label + " (reverse)", rhs, lhs);
}

struct EllData {
    long s_ell;
    int w;
    Int h;
    Provenance prov;
};

EllData ell_data_for(const TorsionFieldData& torsion, const PlaceSet& S) {
    if (torsion.field) {
        const NumberField& ell = *torsion.field;
        if (ell.is_rationals()) return {S.size(), 2, s_class_number(ell, S), Provenance::Computed};
        PlaceSet Sl = extend_place_set(S, ell);
        Int h;
        try {
            h = s_class_number(ell, Sl);
        } catch (const std::invalid_argument& e) {
            throw RefusalError(std::string("pipeline: class number unavailable for ") +
                               ell.name() + ": " + e.what());
        }
        return {Sl.size(), ell.roots_of_unity, h, Provenance::Computed};
    }
    if (torsion.certificate) {
        const FieldCertificate& cert = *torsion.certificate;
        return {certified_place_count(cert, S), cert.roots_of_unity, cert.class_number_S,
                Provenance::UserAsserted};
    }
    throw RefusalError("pipeline: torsion field unknown and no certificate supplied");
}

}  // namespace

bool BoundReport::self_audit() const {
    for (const DividesClaim& c : claims)
        if (!c.holds()) return false;
    return true;
}

BoundReport run_pipeline(const PipelineConfig& cfg) {
    if (cfg.n < 2) throw std::invalid_argument("pipeline: n >= 2 required");
    BoundReport rep;
    rep.n = cfg.n;
    rep.a = 1;  // Q has one real place
    rep.c = 0;

    // ---- curve
    std::optional<EllipticCurve> E;
    std::optional<HyperellipticCurve> C;
    switch (cfg.kind) {
        case PipelineConfig::CurveKind::Elliptic:
            E.emplace(cfg.ca, cfg.cb);
            break;
        case PipelineConfig::CurveKind::EllipticRoots:
            if (cfg.roots.size() != 3)
                throw std::invalid_argument("pipeline: exactly three roots required");
            E.emplace(elliptic_from_roots(cfg.roots[0], cfg.roots[1], cfg.roots[2]));
            break;
        case PipelineConfig::CurveKind::Paladino: {
            if (cfg.n != 3)
                throw RefusalError("pipeline: the two-parameter family carries 3-torsion data; "
                                   "n = 3 required");
            PaladinoCurve P = paladino_curve(cfg.beta_param, cfg.h_param);
            E.emplace(P.curve);
            rep.torsion = P.torsion;
            break;
        }
        case PipelineConfig::CurveKind::Hyperelliptic:
            C.emplace(QPoly(cfg.f_coeffs));
            break;
    }
    rep.g = E ? 1 : C->genus;
    if (E) {
        rep.curve_id = "y^2 = x^3 + (" + rat_str(E->a) + ") x + (" + rat_str(E->b) + ")";
    } else {
        rep.curve_id = "y^2 = " + C->f.str();
    }

    // ---- S
    if (cfg.forced_S) {
        rep.S = place_set_over_Q(*cfg.forced_S);
        rep.s_override = true;
    } else {
        rep.S = E ? build_S(*E, cfg.n) : build_S(*C, cfg.n);
    }
    rep.b = static_cast<long>(rep.S.rational_primes().size());
    rep.h_k_S = {"h_k(S)", fpow(s_class_number(NumberField::rationals(), rep.S), 1),
                 Provenance::Computed};

    const bool rational_point = E.has_value() || cfg.rational_point ||
                                (C && is_split_hyperelliptic(*C));

    // ---- torsion field ell
    if (cfg.kind == PipelineConfig::CurveKind::Paladino) {
        rep.route = "family-3-torsion";
    } else if (cfg.n_torsion_rational) {
        rep.torsion = {cfg.n, NumberField::rationals(), std::nullopt, Provenance::UserAsserted};
        rep.route = "rational-n-torsion";
    } else if (E && cfg.n == 2) {
        TwoTorsionField tt = two_torsion_field(*E);
        if (tt.field) {
            rep.torsion = {cfg.n, tt.field, std::nullopt, Provenance::Computed};
            rep.route = "two-torsion";
        } else if (cfg.ell_certificate) {
            rep.torsion = {cfg.n, std::nullopt, cfg.ell_certificate, Provenance::UserAsserted};
            rep.route = "two-torsion-certificate";
        } else {
            throw RefusalError("pipeline: 2-torsion field is a cubic extension (" + tt.describe() +
                               "); supply a field certificate");
        }
    } else if (E && cfg.n == 3 && verify_three_torsion_field(*E, NumberField::zeta3())) {
        rep.torsion = {cfg.n, NumberField::zeta3(), std::nullopt, Provenance::Computed};
        rep.route = "three-torsion-verified";
    } else if (C && cfg.n == 2 && is_split_hyperelliptic(*C)) {
        rep.torsion = {cfg.n, NumberField::rationals(), std::nullopt, Provenance::Computed};
        rep.route = "split-hyperelliptic";
    } else if (C && cfg.n == 2 && cfg.galois_symmetric && cfg.ell_certificate) {
        rep.torsion = {cfg.n, std::nullopt, cfg.ell_certificate, Provenance::UserAsserted};
        rep.route = "generic-hyperelliptic";
    } else if (cfg.ell_certificate) {
        rep.torsion = {cfg.n, std::nullopt, cfg.ell_certificate, Provenance::UserAsserted};
        rep.route = "certificate";
    } else {
        throw RefusalError("pipeline: cannot determine the n-torsion field; assert rational "
                           "n-torsion or supply a field certificate");
    }

    // ---- ell-side sizes
    EllData ed = ell_data_for(rep.torsion, rep.S);
    rep.s_ell_size = ed.s_ell;
    rep.s_ell_provenance = ed.prov;
    rep.w_ell = ed.w;
    rep.h_ell_S = {"h_ell(S_ell)", fpow(ed.h, 1),
                   ed.prov == Provenance::Computed ? Provenance::Computed
                                                   : Provenance::UserAsserted};

    // ---- universal intermediates
    rep.beta_value = {"beta(n,a,b)", fpow(beta(cfg.n, rep.a, rep.b), 1), Provenance::Computed};
    rep.beta_envelope = {"(n,2)^a n^b",
                         fpow(gcd_pair(cfg.n, 2), rep.a) * fpow(cfg.n, rep.b),
                         Provenance::Computed};
    push_claim(rep.claims, "beta(n,a,b) divides (n,2)^a n^b", rep.beta_value.value,
               rep.beta_envelope.value);

    Int u = s_unit_quotient_size(rep.w_ell, static_cast<int>(rep.s_ell_size), cfg.n);
    rep.unit_quotient = {"|U/U^n|", fpow(u, 1), Provenance::Computed};
    push_claim(rep.claims, "|U/U^n| divides n^{|S_ell|}", rep.unit_quotient.value,
               fpow(cfg.n, rep.s_ell_size));

    Int pic = n_part(ed.h, cfg.n);
    rep.pic_bound = {"nPic bound", fpow(pic, 1), rep.h_ell_S.provenance};
    push_claim(rep.claims, "nPic bound divides h_ell(S_ell)", rep.pic_bound.value,
               rep.h_ell_S.value);

    // inflation factor |H^1(ell/k, M)|
    const bool ell_is_k = rep.torsion.field && rep.torsion.field->is_rationals();
    Factorization infl;  // 1
    Provenance infl_prov = Provenance::Computed;
    if (rep.route == "generic-hyperelliptic") {
        // |Z^1| <= |M|^2 for a 2-generated Galois group
        infl = fpow(cfg.n, 4 * rep.g);
    } else if (ell_is_k) {
        // trivial Galois group
    } else if (E && is_prime(cfg.n)) {
        // rank-2 module over F_p: the cohomology of any subgroup of GL_2(F_p)
        // has order 1 or p, and 1 when p = 2
        if (cfg.n > 2) infl = fpow(cfg.n, 1);
    } else {
        int deg = rep.torsion.field ? rep.torsion.field->degree
                                    : (rep.torsion.certificate ? rep.torsion.certificate->degree
                                                               : 0);
        if (deg < 2) throw RefusalError("pipeline: cannot bound the inflation factor");
        long s = deg == 2 ? 1 : 2;  // minimal generator count of the Galois group
        infl = fpow(cfg.n, 2 * rep.g * s);
        infl_prov = rep.torsion.provenance;
    }
    rep.inflation = {"|H^1(ell/k, M)| bound", infl, infl_prov};

    rep.h1_bound = {"H^1 bound",
                    h1_unramified_bound(cfg.n, 2 * rep.g, rep.s_ell_size, rep.w_ell, ed.h, infl),
                    rep.h_ell_S.provenance};
    push_equal(rep.claims, "H^1 bound = inflation * (|U/U^n| * nPic)^{2g}", rep.h1_bound.value,
               infl * (rep.unit_quotient.value * rep.pic_bound.value).pow(
                          static_cast<unsigned>(2 * rep.g)));

    // ---- route-specific Brauer bound
    if (rep.route == "split-hyperelliptic") {
        HyperellipticBoundData d;
        d.g = rep.g;
        d.a = rep.a;
        d.b = rep.b;
        d.s_size = rep.S.size();
        d.h_k_S = rep.h_k_S.value.value();
        rep.brauer_bound = {"Brauer bound", prop_9_5_bounds(true, d), Provenance::Computed};
        // over Q with h = 1 the split formula agrees with the envelope * H^1 product
        push_equal(rep.claims, "split bound = envelope * H^1 bound", rep.brauer_bound.value,
                   rep.beta_envelope.value * rep.h1_bound.value);
    } else if (rep.route == "generic-hyperelliptic") {
        HyperellipticBoundData d;
        d.g = rep.g;
        d.s_ell_size = rep.s_ell_size;
        d.h_ell_S = ed.h;
        rep.brauer_bound = {"Brauer bound", prop_9_5_bounds(false, d), rep.h_ell_S.provenance};
        push_claim(rep.claims, "H^1 bound divides generic bound", rep.h1_bound.value,
                   rep.brauer_bound.value);
    } else {
        rep.brauer_bound = {"Brauer bound", rep.beta_envelope.value * rep.h1_bound.value,
                            rep.h1_bound.provenance};
        if (E && is_prime(cfg.n)) {
            Factorization p92 = prop_9_2_bound(cfg.n, rep.a, rep.b, rep.s_ell_size, ed.h);
            push_claim(rep.claims, "Brauer bound divides the elliptic prime-case formula",
                       rep.brauer_bound.value, p92);
        }
        if (ell_is_k) {
            TwoBounds tb = theorem_8_2_bound(cfg.n, rep.a, rep.b, rep.g, rep.S.size(),
                                             rep.h_k_S.value.value(), rational_point, true);
            push_claim(rep.claims, "Brauer bound divides the rational-torsion precise bound",
                       rep.brauer_bound.value, tb.precise);
            push_claim(rep.claims, "precise bound divides simplified bound", tb.precise,
                       tb.simplified);
        }
    }

    // ---- genus bound
    rep.genus.brauer = rep.brauer_bound.value;
    rep.genus.phi = euler_phi(cfg.n);
    if (cfg.r) {
        if (*cfg.r < 0) throw std::invalid_argument("pipeline: r >= 0 required");
        rep.genus.r = cfg.r;
        rep.genus.r_provenance = Provenance::UserAsserted;
        push_claim(rep.claims, "Brauer bound divides genus bound", rep.brauer_bound.value,
                   rep.genus.value());
    }

    if (!rep.self_audit()) throw std::logic_error("pipeline: report self-audit failed");
    return rep;
}

}  // namespace gb
