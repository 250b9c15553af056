#include "gb/report_json.hpp"

#include <stdexcept>

namespace gb {

using nlohmann::json;

namespace {

json int_to_json(const Int& n) { return n.get_str(); }

Int int_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("report: integers must be decimal strings");
    return Int(j.get<std::string>());
}

std::string provenance_to_string(Provenance p) { return provenance_name(p); }

Provenance provenance_from_string(const std::string& s) {
    if (s == "computed") return Provenance::Computed;
    if (s == "paper-asserted") return Provenance::PaperAsserted;
    if (s == "user-asserted") return Provenance::UserAsserted;
    throw std::invalid_argument("report: unknown provenance '" + s + "'");
}

json report_value_to_json(const ReportValue& v) {
    return json{{"name", v.name},
                {"value", int_to_json(v.value.value())},
                {"factorization", factorization_to_json(v.value)},
                {"provenance", provenance_to_string(v.provenance)}};
}

ReportValue report_value_from_json(const json& j) {
    ReportValue v;
    v.name = j.at("name").get<std::string>();
    v.value = factorization_from_json(j.at("factorization"));
    if (v.value.value() != int_from_json(j.at("value")))
        throw std::invalid_argument("report: factorization sidecar does not match value for " +
                                    v.name);
    v.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    return v;
}

json field_to_json(const NumberField& f) {
    std::string kind;
    switch (f.kind) {
        case NumberField::Kind::Rationals: kind = "Q"; break;
        case NumberField::Kind::Quadratic: kind = "quadratic"; break;
        case NumberField::Kind::Zeta3: kind = "zeta3"; break;
        case NumberField::Kind::Zeta4: kind = "zeta4"; break;
    }
    return json{{"kind", kind}, {"d", int_to_json(f.d)}};
}

NumberField field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return NumberField::rationals();
    if (kind == "quadratic") return NumberField::quadratic(int_from_json(j.at("d")));
    if (kind == "zeta3") return NumberField::zeta3();
    if (kind == "zeta4") return NumberField::zeta4();
    throw std::invalid_argument("report: unknown field kind '" + kind + "'");
}

}  // namespace

json certificate_to_json(const FieldCertificate& c) {
    json splittings = json::array();
    for (const auto& [p, above] : c.splittings) {
        json lst = json::array();
        for (const PrimeAbove& pa : above) lst.push_back(prime_above_to_json(pa));
        splittings.push_back(json{{"p", int_to_json(p)}, {"above", lst}});
    }
    return json{{"label", c.label},
                {"degree", c.degree},
                {"real_places", c.real_places},
                {"complex_places", c.complex_places},
                {"roots_of_unity", c.roots_of_unity},
                {"class_number_S", int_to_json(c.class_number_S)},
                {"splittings", splittings}};
}

FieldCertificate certificate_from_json(const json& j) {
    FieldCertificate c;
    c.label = j.at("label").get<std::string>();
    c.degree = j.at("degree").get<int>();
    c.real_places = j.at("real_places").get<int>();
    c.complex_places = j.at("complex_places").get<int>();
    c.roots_of_unity = j.at("roots_of_unity").get<int>();
    c.class_number_S = int_from_json(j.at("class_number_S"));
    for (const json& entry : j.at("splittings")) {
        std::vector<PrimeAbove> above;
        for (const json& pa : entry.at("above")) above.push_back(prime_above_from_json(pa));
        c.splittings[int_from_json(entry.at("p"))] = above;
    }
    return c;
}

namespace {

json torsion_to_json(const TorsionFieldData& t) {
    json j{{"p", int_to_json(t.p)}, {"provenance", provenance_to_string(t.provenance)}};
    j["field"] = t.field ? field_to_json(*t.field) : json(nullptr);
    j["certificate"] = t.certificate ? certificate_to_json(*t.certificate) : json(nullptr);
    return j;
}

TorsionFieldData torsion_from_json(const json& j) {
    TorsionFieldData t;
    t.p = int_from_json(j.at("p"));
    t.provenance = provenance_from_string(j.at("provenance").get<std::string>());
    if (!j.at("field").is_null()) t.field = field_from_json(j.at("field"));
    if (!j.at("certificate").is_null()) t.certificate = certificate_from_json(j.at("certificate"));
    return t;
}

json place_set_to_json(const PlaceSet& S) {
    json finite = json::array();
    for (const PrimeAbove& pa : S.finite) finite.push_back(prime_above_to_json(pa));
    return json{{"field", field_to_json(S.field)}, {"finite", finite}};
}

PlaceSet place_set_from_json(const json& j) {
    PlaceSet S;
    S.field = field_from_json(j.at("field"));
    for (const json& pa : j.at("finite")) S.finite.push_back(prime_above_from_json(pa));
    return S;
}

json genus_to_json(const GenusBound& g) {
    json j{{"brauer", factorization_to_json(g.brauer)},
           {"phi", int_to_json(g.phi)},
           {"r_provenance", provenance_to_string(g.r_provenance)},
           {"display", g.str()}};
    j["r"] = g.r ? json(int_to_json(*g.r)) : json(nullptr);
    if (g.r) j["value"] = int_to_json(g.value().value());
    return j;
}

GenusBound genus_from_json(const json& j) {
    GenusBound g;
    g.brauer = factorization_from_json(j.at("brauer"));
    g.phi = int_from_json(j.at("phi"));
    g.r_provenance = provenance_from_string(j.at("r_provenance").get<std::string>());
    if (!j.at("r").is_null()) {
        g.r = int_from_json(j.at("r"));
        if (g.value().value() != int_from_json(j.at("value")))
            throw std::invalid_argument("report: genus bound value mismatch");
    }
    return g;
}

json claim_to_json(const DividesClaim& c) {
    return json{{"label", c.label},
                {"lhs", factorization_to_json(c.lhs)},
                {"rhs", factorization_to_json(c.rhs)},
                {"holds", c.holds()}};
}

DividesClaim claim_from_json(const json& j) {
    DividesClaim c;
    c.label = j.at("label").get<std::string>();
    c.lhs = factorization_from_json(j.at("lhs"));
    c.rhs = factorization_from_json(j.at("rhs"));
    if (!c.holds() || !j.at("holds").get<bool>())
        throw std::invalid_argument("report: recorded claim does not hold: " + c.label);
    return c;
}

}  // namespace

json factorization_to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& [p, e] : f.factors)
        factors.push_back(json{{"p", int_to_json(p)}, {"e", e}});
    return json{{"sign", f.sign}, {"factors", factors}, {"value", int_to_json(f.value())}};
}

Factorization factorization_from_json(const json& j) {
    Factorization f;
    f.sign = j.at("sign").get<int>();
    if (f.sign != 1 && f.sign != -1)
        throw std::invalid_argument("factorization: sign must be +/-1");
    for (const json& entry : j.at("factors"))
        f.factors.emplace_back(int_from_json(entry.at("p")), entry.at("e").get<unsigned>());
    if (f.value() != int_from_json(j.at("value")))
        throw std::invalid_argument("factorization: factors do not multiply to the stated value");
    return f;
}

json prime_above_to_json(const PrimeAbove& pa) {
    return json{{"p", pa.p.get_str()}, {"e", pa.e}, {"f", pa.f}, {"count", pa.count}};
}

PrimeAbove prime_above_from_json(const json& j) {
    PrimeAbove pa;
    pa.p = Int(j.at("p").get<std::string>());
    pa.e = j.at("e").get<int>();
    pa.f = j.at("f").get<int>();
    pa.count = j.at("count").get<int>();
    return pa;
}

json report_to_json(const BoundReport& rep, std::uint64_t seed, double seconds) {
    json claims = json::array();
    for (const DividesClaim& c : rep.claims) claims.push_back(claim_to_json(c));
    return json{{"tool", kToolVersion},
                {"seed", seed},
                {"seconds", seconds},
                {"report",
                 json{{"curve_id", rep.curve_id},
                      {"route", rep.route},
                      {"n", int_to_json(rep.n)},
                      {"S", place_set_to_json(rep.S)},
                      {"s_override", rep.s_override},
                      {"torsion", torsion_to_json(rep.torsion)},
                      {"s_ell_size", rep.s_ell_size},
                      {"s_ell_provenance", provenance_to_string(rep.s_ell_provenance)},
                      {"a", rep.a},
                      {"b", rep.b},
                      {"c", rep.c},
                      {"g", rep.g},
                      {"w_ell", rep.w_ell},
                      {"h_k_S", report_value_to_json(rep.h_k_S)},
                      {"h_ell_S", report_value_to_json(rep.h_ell_S)},
                      {"beta_value", report_value_to_json(rep.beta_value)},
                      {"beta_envelope", report_value_to_json(rep.beta_envelope)},
                      {"unit_quotient", report_value_to_json(rep.unit_quotient)},
                      {"pic_bound", report_value_to_json(rep.pic_bound)},
                      {"inflation", report_value_to_json(rep.inflation)},
                      {"h1_bound", report_value_to_json(rep.h1_bound)},
                      {"brauer_bound", report_value_to_json(rep.brauer_bound)},
                      {"genus", genus_to_json(rep.genus)},
                      {"claims", claims}}}};
}

BoundReport report_from_json(const json& j) {
    const json& r = j.at("report");
    BoundReport rep;
    rep.curve_id = r.at("curve_id").get<std::string>();
    rep.route = r.at("route").get<std::string>();
    rep.n = int_from_json(r.at("n"));
    rep.S = place_set_from_json(r.at("S"));
    rep.s_override = r.at("s_override").get<bool>();
    rep.torsion = torsion_from_json(r.at("torsion"));
    rep.s_ell_size = r.at("s_ell_size").get<long>();
    rep.s_ell_provenance = provenance_from_string(r.at("s_ell_provenance").get<std::string>());
    rep.a = r.at("a").get<long>();
    rep.b = r.at("b").get<long>();
    rep.c = r.at("c").get<long>();
    rep.g = r.at("g").get<long>();
    rep.w_ell = r.at("w_ell").get<int>();
    rep.h_k_S = report_value_from_json(r.at("h_k_S"));
    rep.h_ell_S = report_value_from_json(r.at("h_ell_S"));
    rep.beta_value = report_value_from_json(r.at("beta_value"));
    rep.beta_envelope = report_value_from_json(r.at("beta_envelope"));
    rep.unit_quotient = report_value_from_json(r.at("unit_quotient"));
    rep.pic_bound = report_value_from_json(r.at("pic_bound"));
    rep.inflation = report_value_from_json(r.at("inflation"));
    rep.h1_bound = report_value_from_json(r.at("h1_bound"));
    rep.brauer_bound = report_value_from_json(r.at("brauer_bound"));
    rep.genus = genus_from_json(r.at("genus"));
    for (const json& c : r.at("claims")) rep.claims.push_back(claim_from_json(c));
    return rep;
}

std::string serialize_report(const BoundReport& rep, std::uint64_t seed, double seconds) {
    return report_to_json(rep, seed, seconds).dump(2);
}

BoundReport parse_report(const std::string& text) {
    return report_from_json(json::parse(text));
}

}  // namespace gb
