// genusbound: exact-arithmetic calculator for divisibility bounds on
// unramified Brauer groups and genus sizes of division algebras over
// function fields of curves over Q, plus supporting cohomology and
// tame-residue commands.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gb/bounds.hpp"
#include "gb/cache.hpp"
#include "gb/cohom.hpp"
#include "gb/exprparse.hpp"
#include "gb/report_json.hpp"
#include "gb/residue.hpp"

namespace {

constexpr int kExitSchema = 2;   // config / usage errors
constexpr int kExitRefusal = 3;  // hypotheses not established
constexpr int kExitCap = 4;      // computation cap exceeded

gb::Rat parse_rat(const std::string& s) {
    gb::Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

std::vector<gb::Rat> parse_rat_list(const std::string& s) {
    std::vector<gb::Rat> out;
    for (const std::string& item : split_commas(s)) out.push_back(parse_rat(item));
    return out;
}

// "inf,2,3" -> finite primes {2, 3}; "inf" must be present
std::vector<gb::Int> parse_place_list(const std::string& s) {
    std::vector<gb::Int> primes;
    bool has_inf = false;
    for (const std::string& item : split_commas(s)) {
        if (item == "inf" || item == "infinity") {
            has_inf = true;
            continue;
        }
        primes.emplace_back(item);
    }
    if (!has_inf)
        throw std::invalid_argument("the place set must contain 'inf' (archimedean places)");
    return primes;
}

struct BoundFlags {
    std::vector<std::string> elliptic;        // a b
    std::vector<std::string> elliptic_roots;  // "e1,e2,e3"
    std::string hyperelliptic;                // coefficients, constant first
    std::vector<std::string> paladino;        // beta h
    std::string n;
    std::string paper_S;
    std::string r;
    bool rational_point = false;
    bool n_torsion_rational = false;
    bool galois_symmetric = false;
    std::string certificate_file;
    std::string config_file;
    std::string report_file;
};

gb::PipelineConfig config_from_flags(const BoundFlags& fl) {
    gb::PipelineConfig cfg;
    int curve_specs = 0;
    if (!fl.elliptic.empty()) {
        ++curve_specs;
        cfg.kind = gb::PipelineConfig::CurveKind::Elliptic;
        cfg.ca = parse_rat(fl.elliptic.at(0));
        cfg.cb = parse_rat(fl.elliptic.at(1));
    }
    if (!fl.elliptic_roots.empty()) {
        ++curve_specs;
        cfg.kind = gb::PipelineConfig::CurveKind::EllipticRoots;
        cfg.roots = parse_rat_list(fl.elliptic_roots.at(0));
    }
    if (!fl.hyperelliptic.empty()) {
        ++curve_specs;
        cfg.kind = gb::PipelineConfig::CurveKind::Hyperelliptic;
        cfg.f_coeffs = parse_rat_list(fl.hyperelliptic);
    }
    if (!fl.paladino.empty()) {
        ++curve_specs;
        cfg.kind = gb::PipelineConfig::CurveKind::Paladino;
        cfg.beta_param = parse_rat(fl.paladino.at(0));
        cfg.h_param = parse_rat(fl.paladino.at(1));
    }
    if (curve_specs != 1) throw std::invalid_argument("exactly one curve specification required");
    if (fl.n.empty()) throw std::invalid_argument("--n is required");
    cfg.n = gb::Int(fl.n);
    if (!fl.paper_S.empty()) cfg.forced_S = parse_place_list(fl.paper_S);
    if (!fl.r.empty()) cfg.r = gb::Int(fl.r);
    cfg.rational_point = fl.rational_point;
    cfg.n_torsion_rational = fl.n_torsion_rational;
    cfg.galois_symmetric = fl.galois_symmetric;
    if (!fl.certificate_file.empty()) {
        std::ifstream in(fl.certificate_file);
        if (!in) throw std::invalid_argument("cannot open " + fl.certificate_file);
        cfg.ell_certificate = gb::certificate_from_json(nlohmann::json::parse(in));
    }
    return cfg;
}

void reject_unknown_keys(const nlohmann::json& j, const std::vector<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
}

gb::PipelineConfig config_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    reject_unknown_keys(j, {"curve", "n", "paper_S", "r", "rational_point", "n_torsion_rational",
                            "galois_symmetric", "ell_certificate"},
                        "config");
    gb::PipelineConfig cfg;
    const nlohmann::json& curve = j.at("curve");
    std::string kind = curve.at("kind").get<std::string>();
    if (kind == "elliptic") {
        reject_unknown_keys(curve, {"kind", "a", "b"}, "curve");
        cfg.kind = gb::PipelineConfig::CurveKind::Elliptic;
        cfg.ca = parse_rat(curve.at("a").get<std::string>());
        cfg.cb = parse_rat(curve.at("b").get<std::string>());
    } else if (kind == "elliptic-roots") {
        reject_unknown_keys(curve, {"kind", "roots"}, "curve");
        cfg.kind = gb::PipelineConfig::CurveKind::EllipticRoots;
        for (const auto& e : curve.at("roots")) cfg.roots.push_back(parse_rat(e.get<std::string>()));
    } else if (kind == "hyperelliptic") {
        reject_unknown_keys(curve, {"kind", "f"}, "curve");
        cfg.kind = gb::PipelineConfig::CurveKind::Hyperelliptic;
        for (const auto& e : curve.at("f")) cfg.f_coeffs.push_back(parse_rat(e.get<std::string>()));
    } else if (kind == "paladino") {
        reject_unknown_keys(curve, {"kind", "beta", "h"}, "curve");
        cfg.kind = gb::PipelineConfig::CurveKind::Paladino;
        cfg.beta_param = parse_rat(curve.at("beta").get<std::string>());
        cfg.h_param = parse_rat(curve.at("h").get<std::string>());
    } else {
        throw std::invalid_argument("unknown curve kind '" + kind + "'");
    }
    cfg.n = gb::Int(j.at("n").get<std::string>());
    if (j.contains("paper_S")) {
        std::vector<gb::Int> primes;
        for (const auto& e : j.at("paper_S")) {
            std::string s = e.get<std::string>();
            if (s == "inf" || s == "infinity") continue;
            primes.emplace_back(s);
        }
        cfg.forced_S = primes;
    }
    if (j.contains("r")) cfg.r = gb::Int(j.at("r").get<std::string>());
    if (j.contains("rational_point")) cfg.rational_point = j.at("rational_point").get<bool>();
    if (j.contains("n_torsion_rational"))
        cfg.n_torsion_rational = j.at("n_torsion_rational").get<bool>();
    if (j.contains("galois_symmetric")) cfg.galois_symmetric = j.at("galois_symmetric").get<bool>();
    if (j.contains("ell_certificate"))
        cfg.ell_certificate = gb::certificate_from_json(j.at("ell_certificate"));
    return cfg;
}

void print_value(const gb::ReportValue& v) {
    std::cout << "  " << v.name << ": " << v.value.value().get_str() << " = " << v.value.str()
              << "  [" << gb::provenance_name(v.provenance) << "]\n";
}

int cmd_bound(const BoundFlags& fl, std::uint64_t seed) {
    gb::PipelineConfig cfg =
        fl.config_file.empty() ? config_from_flags(fl) : config_from_json_file(fl.config_file);
    auto t0 = std::chrono::steady_clock::now();
    gb::BoundReport rep = gb::run_pipeline(cfg);
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    std::cout << "curve:  " << rep.curve_id << "\n";
    std::cout << "route:  " << rep.route << "\n";
    std::cout << "n:      " << rep.n.get_str() << "\n";
    std::cout << "S:      { inf";
    for (const gb::Int& p : rep.S.rational_primes()) std::cout << ", " << p.get_str();
    std::cout << " }" << (rep.s_override ? "  [forced; good reduction outside S NOT verified]" : "")
              << "\n";
    std::cout << "ell:    "
              << (rep.torsion.field ? rep.torsion.field->name()
                                    : "certificate '" + rep.torsion.certificate->label + "'")
              << "  [" << gb::provenance_name(rep.torsion.provenance) << "]\n";
    std::cout << "|S_ell| = " << rep.s_ell_size << ", a = " << rep.a << ", b = " << rep.b
              << ", g = " << rep.g << ", w_ell = " << rep.w_ell << "\n";
    for (const gb::ReportValue* v :
         {&rep.h_k_S, &rep.h_ell_S, &rep.beta_value, &rep.beta_envelope, &rep.unit_quotient,
          &rep.pic_bound, &rep.inflation, &rep.h1_bound})
        print_value(*v);
    std::cout << "Brauer bound: " << rep.brauer_bound.value.str() << "  (divides)\n";
    std::cout << "genus bound:  " << rep.genus.str() << "  (at most)\n";
    std::cout << "self-audit:   " << (rep.self_audit() ? "all " : "FAILED on ")
              << rep.claims.size() << " divisibility claims\n";

    if (gb::Cache::instance().enabled()) {
        for (const gb::ReportValue* v : {&rep.brauer_bound, &rep.h1_bound})
            gb::Cache::instance().store_factorization(v->value.value(), v->value);
    }
    if (!fl.report_file.empty()) {
        std::ofstream out(fl.report_file);
        out << gb::serialize_report(rep, seed, seconds) << "\n";
        std::cout << "report written to " << fl.report_file << "\n";
    }
    return rep.self_audit() ? 0 : 1;
}

struct CohomFlags {
    long mod = 0;
    int dim = 0;
    std::vector<std::string> gens;
    long sweep_p = 0;
};

gb::ModMatrix parse_matrix(long mod, int dim, const std::string& text) {
    std::vector<std::string> items = split_commas(text);
    if (static_cast<int>(items.size()) != dim * dim)
        throw std::invalid_argument("matrix needs " + std::to_string(dim * dim) + " entries");
    gb::ModMatrix m = gb::ModMatrix::identity(mod, dim);
    for (int i = 0; i < dim * dim; ++i) {
        long v = std::stol(items[i]) % mod;
        m.m[i] = v < 0 ? v + mod : v;
    }
    return m;
}

// all invertible 2x2 matrices over Z/p generate cyclic subgroups; check
// |H^1| is 1 or p (and 1 for p = 2), against the cyclic formula
bool rank2_cyclic_sweep(long p, bool verbose) {
    gb::FiniteModule M(p, 2);
    long checked = 0;
    for (long a = 0; a < p; ++a)
        for (long b = 0; b < p; ++b)
            for (long c = 0; c < p; ++c)
                for (long d = 0; d < p; ++d) {
                    gb::ModMatrix u = gb::ModMatrix::identity(p, 2);
                    u.m = {a, b, c, d};
                    if (!u.invertible()) continue;
                    gb::MatrixGroup G = gb::MatrixGroup::generate({u});
                    gb::CocycleSet cs = gb::h1(G, M);
                    std::uint64_t cyc = gb::cyclic_h1(u, M);
                    bool ok = cs.h1 == cyc &&
                              (cs.h1 == 1 || cs.h1 == static_cast<std::uint64_t>(p)) &&
                              (p != 2 || cs.h1 == 1);
                    if (!ok) {
                        std::cout << "FAIL at matrix [" << a << "," << b << ";" << c << "," << d
                                  << "] mod " << p << ": |H^1| = " << cs.h1 << ", cyclic formula "
                                  << cyc << "\n";
                        return false;
                    }
                    ++checked;
                }
    if (verbose)
        std::cout << "p = " << p << ": all " << checked
                  << " cyclic subgroups pass (|H^1| in {1, p})\n";
    return true;
}

int cmd_cohomology(const CohomFlags& fl) {
    if (fl.sweep_p != 0) {
        if (!gb::is_prime(gb::Int(fl.sweep_p)))
            throw std::invalid_argument("--sweep takes a prime modulus");
        return rank2_cyclic_sweep(fl.sweep_p, true) ? 0 : 1;
    }
    if (fl.mod < 2 || fl.dim < 1 || fl.gens.empty())
        throw std::invalid_argument("need --mod, --dim and at least one --gen");
    std::vector<gb::ModMatrix> gens;
    for (const std::string& g : fl.gens) gens.push_back(parse_matrix(fl.mod, fl.dim, g));
    gb::MatrixGroup G = gb::MatrixGroup::generate(gens);
    gb::FiniteModule M(fl.mod, fl.dim);
    gb::CocycleSet cs = gb::h1(G, M);
    std::cout << "|G| = " << G.elements.size() << "\n";
    std::cout << "|Z^1| = " << cs.z1 << ", |B^1| = " << cs.b1 << ", |H^1| = " << cs.h1 << "\n";
    if (gens.size() == 1) {
        std::uint64_t cyc = gb::cyclic_h1(gens[0], M);
        std::cout << "cyclic formula |Ker N| / |(u-1)M| = " << cyc
                  << (cyc == cs.h1 ? "  (agrees)" : "  (MISMATCH)") << "\n";
        if (cyc != cs.h1) return 1;
    }
    return 0;
}

struct ResidueFlags {
    std::string n;
    std::vector<std::string> symbols;
    std::vector<std::string> places;
    bool ramification = false;
};

int cmd_residue(const ResidueFlags& fl) {
    if (fl.n.empty() || fl.symbols.empty())
        throw std::invalid_argument("need --n and at least one --symbol");
    gb::SymbolAlgebra A;
    A.n = gb::Int(fl.n);
    for (const std::string& s : fl.symbols) A.slots.push_back(gb::parse_symbol_pair(s));

    for (const std::string& ptext : fl.places) {
        gb::GeometricPlace place = gb::parse_place(ptext);
        gb::ResidueClass rc = gb::symbol_residue(A, place);
        std::cout << "residue at " << place.str() << ": class of " << rc.rep.str();
        try {
            std::cout << (rc.is_trivial() ? "  -> trivial (unramified)" : "  -> nontrivial");
        } catch (const std::domain_error& e) {
            std::cout << "  -> power test unsupported (" << e.what() << ")";
        }
        std::cout << "\n";
    }
    if (fl.ramification || fl.places.empty()) {
        std::set<gb::GeometricPlace> ram = gb::ramification_set(A);
        if (ram.empty()) {
            std::cout << "unramified everywhere (geometric places)\n";
        } else {
            std::cout << "ramified at " << ram.size() << " geometric place(s):";
            for (const gb::GeometricPlace& w : ram) std::cout << " " << w.str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_selftest(bool quick) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << "\n";
        if (!ok) ++failures;
    };

    {  // pinned end-to-end family bound
        gb::PipelineConfig cfg;
        cfg.kind = gb::PipelineConfig::CurveKind::Paladino;
        cfg.beta_param = 1;
        cfg.h_param = 1;
        cfg.n = 3;
        cfg.forced_S = std::vector<gb::Int>{2, 3};
        gb::BoundReport rep = gb::run_pipeline(cfg);
        check("family curve, forced S = {inf,2,3}: Brauer bound 3^9",
              rep.brauer_bound.value.value() == 19683 && rep.self_audit());
        check("family curve genus bound display 2^r * 3^9", rep.genus.str() == "2^r * 3^9");
    }
    {  // unit/class sequence sweep
        bool ok = true;
        std::vector<gb::Int> pool = {2, 3, 5, 7, 11};
        for (unsigned mask = 0; mask < 32 && ok; ++mask) {
            std::vector<gb::Int> primes;
            for (unsigned i = 0; i < 5; ++i)
                if (mask & (1u << i)) primes.push_back(pool[i]);
            gb::PlaceSet S = gb::place_set_over_Q(primes);
            for (long n = 2; n <= 6 && ok; ++n)
                ok = gb::check_unit_class_sequence(S, n).consistent;
        }
        check("unit/class exact sequence sweep (S in {inf,2,3,5,7,11}, n = 2..6)", ok);
    }
    {  // cyclic subgroup cohomology sweep
        bool ok = true;
        std::vector<long> ps = {2, 3, 5};
        if (!quick) ps.push_back(7);
        for (long p : ps) ok = ok && rank2_cyclic_sweep(p, false);
        check(std::string("rank-2 cyclic subgroup |H^1| sweep, p up to ") +
                  (quick ? "5 (--quick)" : "7"),
              ok);
    }
    {  // report round-trip
        gb::PipelineConfig cfg;
        cfg.kind = gb::PipelineConfig::CurveKind::EllipticRoots;
        cfg.roots = {gb::Rat(0), gb::Rat(1), gb::Rat(-1)};
        cfg.n = 2;
        cfg.r = 5;
        gb::BoundReport rep = gb::run_pipeline(cfg);
        gb::BoundReport back = gb::parse_report(gb::serialize_report(rep, 1, 0.0));
        check("report JSON round-trip", back == rep);
    }
    std::cout << (failures == 0 ? "all self-tests passed" : "SELF-TEST FAILURES") << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact divisibility bounds for unramified Brauer groups and genus sizes "
                 "over function fields of curves over Q"};
    app.require_subcommand(1);
    std::uint64_t seed = 0x5EED;
    app.add_option("--seed", seed, "seed for the randomized factoring steps");

    BoundFlags bf;
    CLI::App* bound = app.add_subcommand("bound", "run the bound pipeline for a curve");
    bound->add_option("--elliptic", bf.elliptic, "elliptic curve y^2 = x^3 + A x + B")
        ->expected(2);
    bound->add_option("--elliptic-roots", bf.elliptic_roots,
                      "elliptic curve from three rational roots, e.g. 0,1,-1")
        ->expected(1);
    bound->add_option("--hyperelliptic", bf.hyperelliptic,
                      "hyperelliptic y^2 = f(x); coefficients of f, constant term first");
    bound->add_option("--paladino", bf.paladino, "two-parameter family member: beta h")
        ->expected(2);
    bound->add_option("--n", bf.n, "torsion exponent n >= 2");
    bound->add_option("--paper-S", bf.paper_S,
                      "force S, e.g. 'inf,2,3' (good reduction outside S is NOT verified)");
    bound->add_option("--r", bf.r, "asserted number of ramified places of the algebra");
    bound->add_flag("--ck-nonempty", bf.rational_point, "assert the curve has a rational point");
    bound->add_flag("--n-torsion-rational", bf.n_torsion_rational,
                    "assert the Jacobian has rational n-torsion");
    bound->add_flag("--galois-sm", bf.galois_symmetric,
                    "assert the splitting field of f has symmetric Galois group");
    bound->add_option("--ell-certificate", bf.certificate_file,
                      "JSON field certificate for the torsion field");
    bound->add_option("--config", bf.config_file, "JSON config file (overrides curve flags)");
    bound->add_option("--report", bf.report_file, "write the machine-readable report here");

    CohomFlags cf;
    CLI::App* cohom = app.add_subcommand("cohomology", "brute-force H^1 of matrix groups");
    cohom->add_option("--mod", cf.mod, "module exponent n");
    cohom->add_option("--dim", cf.dim, "module rank d");
    cohom->add_option("--gen", cf.gens, "generator matrix, row-major comma-separated entries");
    cohom->add_option("--sweep", cf.sweep_p,
                      "check |H^1| in {1, p} for every cyclic subgroup of GL_2(F_p)");

    ResidueFlags rf;
    CLI::App* residue = app.add_subcommand("residue", "tame residues of symbol algebras over Q(x)");
    residue->add_option("--n", rf.n, "exponent n");
    residue->add_option("--symbol", rf.symbols, "symbol slot '(u, v)'; repeatable");
    residue->add_option("--at", rf.places, "place: a monic irreducible polynomial or 'inf'");
    residue->add_flag("--ramification", rf.ramification, "also print the ramification set");

    bool quick = false;
    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification matrix");
    selftest->add_flag("--quick", quick, "skip the p = 7 cohomology sweep");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitSchema;
    }

    gb::default_factor_seed() = seed;
    gb::Cache::instance();  // opens from GENUSBOUND_CACHE if set

    try {
        if (bound->parsed()) return cmd_bound(bf, seed);
        if (cohom->parsed()) return cmd_cohomology(cf);
        if (residue->parsed()) return cmd_residue(rf);
        if (selftest->parsed()) return cmd_selftest(quick);
    } catch (const gb::RefusalError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefusal;
    } catch (const std::length_error& e) {
        std::cerr << "computation cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitSchema;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
