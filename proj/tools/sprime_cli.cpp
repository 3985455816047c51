// sprime: classify ideals, list ideal families and run verification suites.
// Exit codes: 0 pass, 1 verification failure, 2 usage/parse/unsupported.

#include "sprime/dsl.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/ideal_theory.hpp"
#include "sprime/packed.hpp"
#include "sprime/trivial_extension.hpp"
#include "sprime/verifier.hpp"
#include "sprime/z_layer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <numeric>
#include <iostream>

using namespace sprime;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kChecks{"prime",  "maximal",          "s-prime",          "s-maximal",
                                       "homogeneous", "compactly-packed", "coprimely-packed", "s-pm"};
const std::vector<std::string> kLists{"ideals", "spec", "max", "spec-s", "max-s", "submodules"};

[[noreturn]] void unsupported(const std::string& what) { throw Error(ErrorKind::unsupported, what); }

Json envelope(const std::string& command, Json inputs) {
    Json j;
    j["schemaVersion"] = "1";
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    return j;
}

Json element_list(const RingDescriptor& ring, const std::vector<RingElement>& xs) {
    Json out = Json::array();
    for (const auto& x : xs) out.push_back(ring.format(x));
    return out;
}

Json ideal_json(const Ideal& i) {
    return Json{{"label", i.to_string()}, {"generators", element_list(i.ring(), i.generators())}, {"size", i.size()}};
}

Json submodule_json(const Submodule& n) {
    Json gens = Json::array();
    for (const auto& x : n.generators()) gens.push_back(n.ambient().format(x));
    return Json{{"label", n.to_string()}, {"generators", gens}, {"size", n.size()}};
}

// --- Z and Z ⋉ M ----------------------------------------------------------

std::vector<Coord> integer_list(const RingDescriptor& z, const std::string& text) {
    std::vector<Coord> out;
    for (const auto& x : parse_elements(z, text)) out.push_back(x.coords[0]);
    return out;
}

Json z_cert_json(const ZCertificate& c) {
    return Json{{"witness", c.verdict ? Json(c.witness_product) : Json()},
                {"residual", c.residual ? Json(c.residual->to_string()) : Json()},
                {"reason", std::string(to_string(c.reason))}};
}

std::pair<bool, Json> classify_z(const std::string& ideal_text, const std::string& set_text, const std::string& check) {
    auto z = make_integer_ring();
    auto gens = integer_list(z, ideal_text);
    Coord d = 0;
    for (auto g : gens) d = std::gcd(d, g);
    auto ideal = make_z_ideal(d);
    ZMultSet s;
    if (check == "prime" || check == "maximal") {
        s = make_z_mult_set({});
    } else if (check == "s-prime" || check == "s-maximal") {
        s = make_z_mult_set(integer_list(z, set_text));
    } else {
        unsupported("check '" + check + "' is not available over Z");
    }
    bool maximal = check == "maximal" || check == "s-maximal";
    auto cert = maximal ? z_is_s_maximal(ideal, s) : z_is_s_prime(ideal, s);
    auto cj = z_cert_json(cert);
    cj["ideal"] = ideal.to_string();
    return {cert.verdict, cj};
}

std::pair<bool, Json> classify_zte(const RingDescriptor& ring, const std::string& ideal_text,
                                   const std::string& set_text, const std::string& check) {
    const auto& m = ring.module();
    auto to_gens = [&](const std::string& text) {
        std::vector<ZteGenerator> out;
        for (const auto& x : parse_elements(ring, text)) out.push_back({te_base_part(x), te_module_part(x)});
        return out;
    };
    auto j = zte_ideal(m, to_gens(ideal_text));
    Json parts{{"j0", j.j0().to_string()}, {"j1", j.j1().to_string()}};
    if (check == "homogeneous") {
        bool h = zte_is_homogeneous(j);
        parts["reason"] = h ? "J equals J0 x J1" : "J is strictly larger than J0 x J1";
        return {h, parts};
    }
    std::vector<ZteGenerator> s;
    if (check == "s-prime" || check == "s-maximal") {
        s = to_gens(set_text);
    } else if (check != "prime" && check != "maximal") {
        unsupported("check '" + check + "' needs a finite ring; " + ring.to_string() + " is infinite");
    }
    bool maximal = check == "maximal" || check == "s-maximal";
    auto cert = maximal ? zte_is_s_maximal(j, s) : zte_is_s_prime(j, s);
    Json cj = z_cert_json(cert.base);
    cj["reason"] = std::string(to_string(cert.reason));
    cj["baseReason"] = std::string(to_string(cert.base.reason));
    auto s0 = project_generators(s);
    cj["torsionWitness"] =
        cert.torsion.holds && cert.torsion.witness ? Json(cert.torsion.witness->product(s0.generators)) : Json();
    cj["j0"] = parts["j0"];
    cj["j1"] = parts["j1"];
    return {cert.verdict, cj};
}

// --- finite rings ---------------------------------------------------------

MultiplicativeSet finite_set(const RingDescriptor& ring, const std::string& text) {
    auto gens = parse_elements(ring, text);
    return mult_set_generated(ring, gens);
}

Json finite_cert_json(const SPrimalityCertificate& c) {
    Json j = certificate_json(c);
    j.erase("verdict");
    if (c.residual) j["residualGenerators"] = element_list(c.residual->ring(), c.residual->generators());
    return j;
}

std::pair<bool, Json> classify_finite(const RingDescriptor& ring, const std::string& ideal_text,
                                      const std::string& set_text, const std::string& check) {
    if (check == "compactly-packed" || check == "coprimely-packed" || check == "s-pm") {
        auto s = finite_set(ring, set_text);
        if (check == "s-pm") {
            auto d = is_s_pm(ring, s);
            Json cj{{"violating", d.violating ? Json(d.violating->to_string()) : Json()},
                    {"containingSMaximal", d.containing},
                    {"diagnostic", d.diagnostic}};
            return {d.holds, cj};
        }
        auto d = check == "compactly-packed" ? is_compactly_s_packed(ring, s) : is_coprimely_s_packed(ring, s);
        Json family = Json::array();
        for (const auto& p : d.family) family.push_back(p.to_string());
        Json cj{{"q", d.q ? Json(d.q->to_string()) : Json()},
                {"family", family},
                {"s", d.s ? Json(ring.format(*d.s)) : Json()}};
        return {d.holds, cj};
    }
    auto gens = parse_elements(ring, ideal_text);
    auto ideal = ideal_generated(ring, gens);
    Json base{{"ideal", ideal.to_string()}, {"idealGenerators", element_list(ring, ideal.generators())}};
    if (check == "homogeneous") {
        if (ring.kind() != RingKind::trivial_extension) unsupported("homogeneity needs a trivial extension A x| M");
        auto parts = components(ideal);
        base["j0"] = parts.j0.to_string();
        base["j1"] = parts.j1.to_string();
        return {parts.is_homogeneous, base};
    }
    if (check == "prime" || check == "maximal") {
        bool v = check == "prime" ? is_prime(ideal) : is_maximal(ideal);
        base["reason"] = check == "prime" ? "ab in I implies a in I or b in I" : "R/I is a field";
        return {v, base};
    }
    if (check != "s-prime" && check != "s-maximal") throw Error(ErrorKind::precondition_violated, "unknown check");
    auto s = finite_set(ring, set_text);
    bool maximal = check == "s-maximal";
    if (ring.kind() == RingKind::trivial_extension) {
        auto c = maximal ? is_s_maximal_via_components(ideal, s) : is_s_prime_via_components(ideal, s);
        auto cj = finite_cert_json(c.result);
        cj.update(base);
        cj["j0"] = c.parts.j0.to_string();
        cj["j1"] = c.parts.j1.to_string();
        cj["baseWitness"] = c.base.witness ? Json(c.base.residual->ring().format(*c.base.witness)) : Json();
        cj["torsionWitnessResidue"] = c.torsion.witness ? Json(c.torsion.witness->residue) : Json();
        return {c.result.verdict, cj};
    }
    auto c = maximal ? is_s_maximal_residual(ideal, s) : is_s_prime_residual(ideal, s);
    auto cj = finite_cert_json(c);
    cj.update(base);
    return {c.verdict, cj};
}

bool is_z_layer(const RingDescriptor& ring) {
    return ring.kind() == RingKind::trivial_extension && ring.base().kind() == RingKind::integers;
}

// --- commands -------------------------------------------------------------

struct Options {
    std::string ring;
    std::string ideal;
    std::string mult_set;
    std::string check;
    std::string what;
    std::string suite;
    bool examples = false;
    std::string search;
    std::string catalog;
    std::string json_path;
    std::size_t cap = 4096;
};

double since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

int classify(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    auto ring = parse_ring(o.ring, o.cap);
    std::pair<bool, Json> result;
    if (ring.kind() == RingKind::integers) {
        result = classify_z(o.ideal, o.mult_set, o.check);
    } else if (is_z_layer(ring)) {
        result = classify_zte(ring, o.ideal, o.mult_set, o.check);
    } else {
        result = classify_finite(ring, o.ideal, o.mult_set, o.check);
    }
    auto out = envelope("classify", Json{{"ring", ring.to_string()},
                                         {"ideal", o.ideal},
                                         {"multSet", o.mult_set},
                                         {"check", o.check}});
    out["verdict"] = result.first;
    out["certificate"] = result.second;
    out["elapsedMs"] = since(start);
    std::cout << out.dump(2) << "\n";
    return kPass;
}

int list(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    auto ring = parse_ring(o.ring, o.cap);
    if (!ring.is_finite()) unsupported("list needs a finite ring; " + ring.to_string() + " is infinite");
    Json items = Json::array();
    if (o.what == "submodules") {
        if (ring.kind() != RingKind::trivial_extension) unsupported("submodules needs a trivial extension A x| M");
        for (const auto& n : enumerate_submodules(ring.module())) items.push_back(submodule_json(n));
    } else {
        auto s = finite_set(ring, o.what == "spec-s" || o.what == "max-s" ? o.mult_set : "");
        std::vector<Ideal> ideals;
        if (o.what == "ideals") {
            ideals = enumerate_ideals(ring);
        } else if (o.what == "spec" || o.what == "spec-s") {
            ideals = spec_s(ring, s);
        } else {
            ideals = max_s(ring, s);
        }
        for (const auto& i : ideals) items.push_back(ideal_json(i));
    }
    auto out = envelope("list", Json{{"ring", ring.to_string()}, {"multSet", o.mult_set}, {"what", o.what}});
    out["items"] = std::move(items);
    out["elapsedMs"] = since(start);
    std::cout << out.dump(2) << "\n";
    return kPass;
}

CatalogSpec load_catalog(const std::string& path) {
    if (path.empty()) return CatalogSpec::defaults();
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::precondition_violated, "cannot read catalog '" + path + "'");
    try {
        return CatalogSpec::from_json(Json::parse(in));
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::syntax_error, "catalog '" + path + "': " + e.what());
    }
}

int verify(const Options& o) {
    auto start = std::chrono::steady_clock::now();
    int modes = (o.examples ? 1 : 0) + (o.suite.empty() ? 0 : 1) + (o.search.empty() ? 0 : 1);
    if (modes != 1) throw CLI::ValidationError("verify", "give exactly one of --suite, --examples, --search");
    const auto& suites = suite_names();
    const auto& targets = search_targets();
    if (!o.suite.empty() && std::find(suites.begin(), suites.end(), o.suite) == suites.end()) {
        throw CLI::ValidationError("--suite", "unknown suite '" + o.suite + "'");
    }
    if (!o.search.empty() && std::find(targets.begin(), targets.end(), o.search) == targets.end()) {
        throw CLI::ValidationError("--search", "unknown search target '" + o.search + "'");
    }
    auto catalog = load_catalog(o.catalog);
    VerificationReport report = o.examples          ? reproduce_examples()
                                : !o.suite.empty() ? run_suite(o.suite, catalog)
                                                   : search_counterexamples(o.search, catalog);
    Json inputs{{"examples", o.examples},
                {"suite", o.suite.empty() ? Json() : Json(o.suite)},
                {"search", o.search.empty() ? Json() : Json(o.search)},
                {"catalog", catalog.to_json()}};
    auto out = envelope("verify", std::move(inputs));
    out["report"] = report.to_json();
    out["elapsedMs"] = since(start);
    if (!o.json_path.empty()) {
        std::ofstream f(o.json_path);
        if (!f) throw Error(ErrorKind::precondition_violated, "cannot write '" + o.json_path + "'");
        f << out.dump(2) << "\n";
    }
    std::cout << out.dump(2) << "\n";
    std::cerr << report.suite << ": " << (report.passed() ? "PASS" : "FAIL") << " (" << report.instances
              << " instances, " << report.failures.size() << " failures";
    if (report.is_search) std::cerr << ", " << report.hits.size() << " hits recorded";
    std::cerr << ")\n";
    return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"S-prime and S-maximal ideals in trivial ring extensions"};
    app.require_subcommand(1);
    Options o;

    auto* cls = app.add_subcommand("classify", "Decide one property of an ideal (or of the ring)");
    cls->add_option("ring", o.ring, "Ring expression, e.g. \"TE(Z, Z/4)\"")->required();
    cls->add_option("--ideal", o.ideal, "Ideal generators, e.g. \"(6,1)\"");
    cls->add_option("--mult-set", o.mult_set, "Generators of S; empty means S = {1}");
    cls->add_option("--check", o.check, "Property to decide")->required()->check(CLI::IsMember(kChecks));
    cls->add_option("--cap", o.cap, "Largest ring cardinality to build");

    auto* lst = app.add_subcommand("list", "Enumerate ideals, prime spectra or submodules");
    lst->add_option("ring", o.ring, "Ring expression")->required();
    lst->add_option("--mult-set", o.mult_set, "Generators of S for spec-s/max-s");
    lst->add_option("--what", o.what, "What to list")->required()->check(CLI::IsMember(kLists));
    lst->add_option("--cap", o.cap, "Largest ring cardinality to build");

    auto* ver = app.add_subcommand("verify", "Reproduce worked instances, run a property suite or a search");
    ver->add_option("--suite", o.suite, "Suite name");
    ver->add_flag("--examples", o.examples, "Reproduce the four worked examples");
    ver->add_option("--search", o.search, "Counterexample search target");
    ver->add_option("--catalog", o.catalog, "CatalogSpec JSON file");
    ver->add_option("--json", o.json_path, "Also write the report to this path");

    try {
        app.parse(argc, argv);
        if (*cls) return classify(o);
        if (*lst) return list(o);
        return verify(o);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::Error& e) {
        app.exit(e);
        return kUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
}
