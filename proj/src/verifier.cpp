#include "sprime/verifier.hpp"

#include "sprime/dsl.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/ideal_theory.hpp"
#include "sprime/packed.hpp"
#include "sprime/trivial_extension.hpp"
#include "sprime/z_layer.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace sprime {

namespace {

constexpr std::size_t kMaxRecordedHits = 100;

// --- catalog ---------------------------------------------------------------

struct TeInstance {
    RingDescriptor ring;
    RingDescriptor base;
    ModuleDescriptor module;
};

std::vector<std::vector<Coord>> module_choices(const CatalogSpec& c, Coord n) {
    std::vector<std::vector<Coord>> out;
    if (c.module_factors.empty()) {
        for (Coord d = 1; d <= n; ++d) {
            if (n % d == 0) out.push_back({d});
        }
        if (n % 2 == 0) out.push_back({2, 2});
        return out;
    }
    for (const auto& f : c.module_factors) {
        if (std::all_of(f.begin(), f.end(), [&](Coord d) { return d >= 1 && n % d == 0; })) out.push_back(f);
    }
    return out;
}

std::vector<TeInstance> te_catalog(const CatalogSpec& c) {
    std::vector<TeInstance> out;
    for (auto n : c.base_moduli) {
        auto a = make_residue_ring(n, c.ring_cap);
        for (const auto& f : module_choices(c, n)) {
            auto m = make_module(a, f);
            if (static_cast<std::size_t>(n) * m.cardinality() > c.ring_cap) continue;
            out.push_back({make_trivial_extension(a, m, c.ring_cap), a, m});
        }
    }
    return out;
}

std::vector<RingDescriptor> generic_catalog(const CatalogSpec& c) {
    std::vector<RingDescriptor> out;
    for (auto n : c.base_moduli) out.push_back(make_residue_ring(n, c.ring_cap));
    for (const auto& text : c.extra_rings) out.push_back(parse_ring(text, c.ring_cap));
    for (auto& te : te_catalog(c)) out.push_back(te.ring);
    return out;
}

// Multiplicative sets generated by one (or two) elements, deduplicated by
// their element sets and kept in order of first appearance.
std::vector<MultiplicativeSet> mult_sets(const RingDescriptor& ring, int per_set) {
    std::vector<MultiplicativeSet> out;
    std::set<ElementSet> seen;
    auto elems = ring.elements();
    auto consider = [&](std::vector<RingElement> gens) {
        try {
            auto s = mult_set_generated(ring, gens);
            if (seen.insert(s.members()).second) out.push_back(std::move(s));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::invalid_multiplicative_set) throw;
        }
    };
    for (std::size_t i = 0; i < elems.size(); ++i) {
        consider({elems[i]});
        if (per_set < 2) continue;
        for (std::size_t j = i + 1; j < elems.size(); ++j) consider({elems[i], elems[j]});
    }
    return out;
}

// S generated by (s, 0) for s ∈ A.
std::vector<MultiplicativeSet> base_style_sets(const TeInstance& te) {
    std::vector<MultiplicativeSet> out;
    std::set<ElementSet> seen;
    for (const auto& s : te.base.elements()) {
        try {
            std::vector<RingElement> gens{te_element(te.ring, s.coords[0], te.module.zero())};
            auto set = mult_set_generated(te.ring, gens);
            if (seen.insert(set.members()).second) out.push_back(std::move(set));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::invalid_multiplicative_set) throw;
        }
    }
    return out;
}

// --- formatting ------------------------------------------------------------

std::string gens_text(const RingDescriptor& ring, const std::vector<RingElement>& gens) {
    std::string out;
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += ring.format(gens[k]);
    }
    return out;
}

std::string set_label(const MultiplicativeSet& s) { return "<" + gens_text(s.ring(), s.generators()) + ">"; }

std::string instance(const RingDescriptor& ring, const std::string& what, const MultiplicativeSet& s) {
    return ring.to_string() + " " + what + " S=" + set_label(s);
}

std::string verdict(bool b) { return b ? "true" : "false"; }

std::string zte_label(const ModuleDescriptor& m, Coord a, const ModuleElement& x) {
    return "(" + std::to_string(a) + "," + m.format(x) + ")";
}

Json z_certificate_json(const ZCertificate& c) {
    Json j;
    j["verdict"] = c.verdict;
    j["witness"] = c.verdict ? Json(c.witness_product) : Json();
    j["residual"] = c.residual ? Json(c.residual->to_string()) : Json();
    j["reason"] = std::string(to_string(c.reason));
    return j;
}

Json zte_certificate_json(const ZteCertificate& c) {
    Json j;
    j["verdict"] = c.verdict;
    j["reason"] = std::string(to_string(c.reason));
    j["base"] = z_certificate_json(c.base);
    j["torsionHolds"] = c.torsion.holds;
    j["torsionWitnessResidue"] = c.torsion.witness ? Json(c.torsion.witness->residue) : Json();
    return j;
}

// --- report plumbing -------------------------------------------------------

class Run {
public:
    explicit Run(std::string name, bool search = false) : start_(std::chrono::steady_clock::now()) {
        report_.suite = std::move(name);
        report_.is_search = search;
    }

    void count() { ++report_.instances; }

    void expect(bool ok, const std::string& inst, const std::string& expected, const std::string& got,
                Json certificate = Json::object()) {
        if (!ok) report_.failures.push_back({inst, expected, got, std::move(certificate)});
    }

    void hit(Json h) {
        ++hits_;
        if (report_.hits.size() < kMaxRecordedHits) report_.hits.push_back(std::move(h));
    }

    void note(std::string text) { report_.notes.push_back(std::move(text)); }

    VerificationReport finish() {
        if (report_.is_search) {
            note(std::to_string(hits_) + " hit(s) in total, " + std::to_string(report_.hits.size()) + " recorded");
        }
        report_.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::size_t hits_ = 0;
    std::chrono::steady_clock::time_point start_;
};

bool maximal_disjoint(const RingDescriptor& ring, const ElementSet& set, const MultiplicativeSet& s) {
    if (set.intersects(s.members())) return false;
    const auto& lattice = ring.ideal_lattice();
    return std::none_of(lattice.begin(), lattice.end(), [&](const ElementSet& k) {
        return set.is_proper_subset_of(k) && !k.intersects(s.members());
    });
}

// A positive certificate must name a member of S and a residual of the
// promised kind.
bool certificate_checks(const SPrimalityCertificate& cert, const MultiplicativeSet& s, bool maximal) {
    if (!cert.verdict) return true;
    if (!cert.witness || !cert.residual || !s.contains(*cert.witness)) return false;
    const auto& r = *cert.residual;
    return maximal ? maximal_disjoint(r.ring(), r.members(), s) : is_prime(r);
}

// --- th1 / th2 -------------------------------------------------------------

void te_component_sweep(Run& run, const CatalogSpec& c, bool maximal) {
    for (const auto& te : te_catalog(c)) {
        auto ideals = enumerate_ideals(te.ring);
        for (const auto& s : mult_sets(te.ring, c.generators_per_set)) {
            for (const auto& j : ideals) {
                run.count();
                auto oracle = maximal ? is_s_maximal_definitional(j, s) : is_s_prime_definitional(j, s);
                auto comp = maximal ? is_s_maximal_via_components(j, s) : is_s_prime_via_components(j, s);
                auto inst = instance(te.ring, "J=" + j.to_string(), s);
                run.expect(oracle.verdict == comp.result.verdict, inst, verdict(oracle.verdict),
                           verdict(comp.result.verdict),
                           Json{{"definitional", certificate_json(oracle)},
                                {"components", certificate_json(comp.result)},
                                {"j0", comp.parts.j0.to_string()},
                                {"j1", comp.parts.j1.to_string()},
                                {"torsion", comp.torsion.holds}});
                run.expect(certificate_checks(comp.result, s, maximal), inst, "checkable certificate",
                           "certificate does not check", certificate_json(comp.result));
            }
        }
    }
}

// J0 ⋉ J1 ⊆ J, J0·M ⊆ J1, and the principal-ideal homogeneity criterion
// (a,m)R homogeneous ⟺ (a,m)R = (a,0)R + (0,m)R.
void te_structure_checks(Run& run, const CatalogSpec& c) {
    for (const auto& te : te_catalog(c)) {
        for (const auto& j : enumerate_ideals(te.ring)) {
            run.count();
            auto parts = components(j);
            auto inst = te.ring.to_string() + " J=" + j.to_string();
            try {
                auto inner = homogeneous_ideal(te.ring, parts.j0, parts.j1);
                run.expect(inner.is_subset_of(j), inst, "J0 x J1 inside J", "J0 x J1 not inside J");
                run.expect((inner == j) == parts.is_homogeneous, inst, "homogeneity flag matches set equality",
                           "mismatch");
            } catch (const Error& e) {
                run.expect(false, inst, "J0 M inside J1", e.what());
            }
        }
        bool all_principal = true;
        bool all_ideals = true;
        for (const auto& x : te.ring.elements()) {
            run.count();
            std::vector<RingElement> g{x};
            auto p = ideal_generated(te.ring, g);
            std::vector<RingElement> split{te_element(te.ring, x.coords[0], te.module.zero()),
                                           te_element(te.ring, 0, te_module_part(x))};
            bool criterion = p == ideal_generated(te.ring, split);
            bool homogeneous = components(p).is_homogeneous;
            all_principal = all_principal && homogeneous;
            run.expect(criterion == homogeneous, te.ring.to_string() + " (" + te.ring.format(x) + ")R",
                       verdict(homogeneous), verdict(criterion));
        }
        for (const auto& j : enumerate_ideals(te.ring)) all_ideals = all_ideals && components(j).is_homogeneous;
        run.expect(all_principal == all_ideals, te.ring.to_string(), "all ideals homogeneous iff all principal are",
                   "mismatch");
    }
}

// J = (a,m)(Z ⋉ Z/d) contains (a·d, 0), so Z ⋉ Z/d → Z/(a·d) ⋉ Z/d is a
// quotient in which J's S-primality (S-maximality) can be decided by brute
// force.
void zlayer_quotient_sweep(Run& run, const CatalogSpec& c, bool maximal) {
    auto z = make_integer_ring();
    for (Coord d = 2; d <= c.zlayer_max_d; ++d) {
        auto m = make_module(z, {d});
        for (Coord a = 1; a <= c.zlayer_max_a; ++a) {
            Coord dd = a * m.exponent();
            auto qa = make_residue_ring(dd, c.ring_cap);
            auto qm = make_module(qa, {d});
            auto qr = make_trivial_extension(qa, qm, c.ring_cap);
            for (Coord mx = 0; mx < d; ++mx) {
                ModuleElement x{{mx}};
                auto j = zte_ideal(m, {{a, x}});
                std::vector<RingElement> qgen{te_element(qr, a, x)};
                auto qj = ideal_generated(qr, qgen);
                for (Coord s = 1; s <= c.zlayer_max_s; ++s) {
                    for (Coord t = 0; t <= 1; ++t) {
                        run.count();
                        std::vector<ZteGenerator> sg{{s, m.normalize({t})}};
                        auto got = maximal ? zte_is_s_maximal(j, sg) : zte_is_s_prime(j, sg);
                        bool expected = false;
                        try {
                            std::vector<RingElement> qs{te_element(qr, s, qm.normalize({t}))};
                            auto qset = mult_set_generated(qr, qs);
                            expected = maximal ? is_s_maximal_definitional(qj, qset).verdict
                                               : is_s_prime_definitional(qj, qset).verdict;
                        } catch (const Error& e) {
                            if (e.kind() != ErrorKind::invalid_multiplicative_set) throw;
                        }
                        run.expect(got.verdict == expected,
                                   "TE(Z, Z/" + std::to_string(d) + ") J=" + zte_label(m, a, x) + " S=<" +
                                       zte_label(m, s, m.normalize({t})) + ">",
                                   verdict(expected), verdict(got.verdict), zte_certificate_json(got));
                    }
                }
            }
        }
    }
}

VerificationReport suite_th(const CatalogSpec& c, bool maximal) {
    Run run(maximal ? "th2" : "th1");
    te_component_sweep(run, c, maximal);
    if (!maximal) te_structure_checks(run, c);
    zlayer_quotient_sweep(run, c, maximal);
    return run.finish();
}

// --- ideal-theory properties ---------------------------------------------------

VerificationReport suite_sat(const CatalogSpec& c) {
    Run run("sat");
    for (const auto& ring : generic_catalog(c)) {
        auto ideals = enumerate_ideals(ring);
        for (const auto& s : mult_sets(ring, c.generators_per_set)) {
            auto star = saturation(s);
            run.expect(s.members().is_subset_of(star.members()), ring.to_string() + " S=" + set_label(s),
                       "S inside S*", "not contained");
            for (const auto& i : ideals) {
                run.count();
                bool a = is_s_prime_definitional(i, s).verdict;
                bool b = is_s_prime_definitional(i, star).verdict;
                run.expect(a == b, instance(ring, "I=" + i.to_string(), s), verdict(a), verdict(b));
            }
        }
    }
    // Sets generated by (s,0) in A ⋉ M saturate to S0* ⋉ M.
    for (const auto& te : te_catalog(c)) {
        for (const auto& s : base_style_sets(te)) {
            run.count();
            auto star = saturation(s);
            auto base_star = saturation(project_to_base(s));
            ElementSet expected(te.ring.cardinality());
            for (const auto& x : te.ring.elements()) {
                if (base_star.contains(RingElement{{x.coords[0]}})) expected.set(te.ring.index_of(x));
            }
            run.expect(star.members() == expected, te.ring.to_string() + " S=" + set_label(s), "S0* x M",
                       star.to_string());
        }
    }
    return run.finish();
}

VerificationReport suite_smax(const CatalogSpec& c) {
    Run run("smax");
    run.note("checks the S-maximal reading: p S-maximal => tp S-maximal for every t in S*");
    for (const auto& ring : generic_catalog(c)) {
        auto ideals = enumerate_ideals(ring);
        for (const auto& s : mult_sets(ring, c.generators_per_set)) {
            auto star = saturation(s).elements();
            for (const auto& p : ideals) {
                if (!is_s_maximal_definitional(p, s).verdict) continue;
                for (const auto& t : star) {
                    run.count();
                    auto tp = scaled_ideal(t, p);
                    auto cert = is_s_maximal_definitional(tp, s);
                    run.expect(cert.verdict, instance(ring, "p=" + p.to_string() + " t=" + ring.format(t), s),
                               "tp S-maximal", "tp=" + tp.to_string() + " not S-maximal", certificate_json(cert));
                }
            }
        }
    }
    return run.finish();
}

VerificationReport suite_sp(const CatalogSpec& c) {
    Run run("s-p");
    for (const auto& ring : generic_catalog(c)) {
        auto ideals = enumerate_ideals(ring);
        for (const auto& s : mult_sets(ring, c.generators_per_set)) {
            for (const auto& i : ideals) {
                if (meets(i, s)) continue;
                run.count();
                auto inst = instance(ring, "I=" + i.to_string(), s);
                try {
                    auto p = find_disjoint_prime(i, s);
                    bool ok = is_prime(p) && i.is_subset_of(p) && !meets(p, s);
                    run.expect(ok, inst, "prime P containing I, disjoint from S", p.to_string());
                } catch (const Error& e) {
                    run.expect(false, inst, "a disjoint prime", e.what());
                }
            }
        }
    }
    return run.finish();
}

VerificationReport suite_oracle(const CatalogSpec& c) {
    Run run("oracle-equivalence");
    for (const auto& ring : generic_catalog(c)) {
        auto ideals = enumerate_ideals(ring);
        for (const auto& s : mult_sets(ring, c.generators_per_set)) {
            for (const auto& i : ideals) {
                run.count();
                auto inst = instance(ring, "I=" + i.to_string(), s);
                auto pd = is_s_prime_definitional(i, s);
                auto pr = is_s_prime_residual(i, s);
                run.expect(pd.verdict == pr.verdict, inst + " [s-prime]", verdict(pd.verdict), verdict(pr.verdict),
                           certificate_json(pr));
                run.expect(certificate_checks(pr, s, false), inst + " [s-prime certificate]", "checks", "fails");
                auto md = is_s_maximal_definitional(i, s);
                auto mr = is_s_maximal_residual(i, s);
                run.expect(md.verdict == mr.verdict, inst + " [s-maximal]", verdict(md.verdict), verdict(mr.verdict),
                           certificate_json(mr));
                run.expect(certificate_checks(mr, s, true), inst + " [s-maximal certificate]", "checks", "fails");
                run.expect(!md.verdict || pd.verdict, inst, "S-maximal implies S-prime", "S-maximal only");
            }
        }
    }
    return run.finish();
}

// --- corollaries -----------------------------------------------------------

bool same_sets(const std::vector<Ideal>& a, const std::vector<Ideal>& b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](const Ideal& x, const Ideal& y) {
               return x.members() == y.members();
           });
}

VerificationReport suite_imp_rec(const CatalogSpec& c) {
    Run run("imp-rec");
    for (const auto& te : te_catalog(c)) {
        for (const auto& s : mult_sets(te.ring, c.generators_per_set)) {
            run.count();
            auto s0 = project_to_base(s);
            bool divisible = is_s_divisible(te.module, s0).holds;
            auto spec = spec_s(te.ring, s);
            bool all_form = true;
            std::string offender;
            for (const auto& j : spec) {
                auto parts = components(j);
                bool form = parts.is_homogeneous && parts.j1.is_whole() &&
                            is_s_prime_definitional(parts.j0, s0).verdict;
                if (!form && all_form) offender = j.to_string();
                all_form = all_form && form;
            }
            auto inst = te.ring.to_string() + " S=" + set_label(s);
            run.expect(all_form == divisible, inst, "P x M form " + verdict(divisible),
                       verdict(all_form) + (offender.empty() ? "" : " (" + offender + ")"));
            if (divisible) {
                run.expect(same_sets(spec_s_extension(te.ring, s, true), spec), inst, "fast Spec_S = exhaustive",
                           "differs");
                run.expect(same_sets(max_s_extension(te.ring, s, true), max_s(te.ring, s)), inst,
                           "fast Max_S = exhaustive", "differs");
            }
        }
    }
    return run.finish();
}

VerificationReport suite_s_torsion(const CatalogSpec& c) {
    Run run("s-torsion");
    std::size_t skipped = 0;
    for (const auto& te : te_catalog(c)) {
        auto ideals = enumerate_ideals(te.ring);
        for (const auto& s : mult_sets(te.ring, c.generators_per_set)) {
            auto s0 = project_to_base(s);
            if (!is_uniformly_s_torsion(zero_submodule(te.module), s0).holds) {
                ++skipped;
                continue;
            }
            for (const auto& j : ideals) {
                run.count();
                bool got = is_s_prime_definitional(j, s).verdict;
                auto parts = components(j);
                bool expected = is_s_prime_definitional(parts.j0, s0).verdict;
                run.expect(got == expected, instance(te.ring, "J=" + j.to_string(), s), verdict(expected),
                           verdict(got));
            }
        }
    }
    run.note(std::to_string(skipped) + " (ring, S) pairs skipped: no s in S0 with sM = 0");
    return run.finish();
}

// --- packed properties -----------------------------------------------------

VerificationReport suite_packing(const CatalogSpec& c, bool compact) {
    Run run(compact ? "th3" : "th4");
    auto decide = [&](const RingDescriptor& r, const MultiplicativeSet& s) {
        return (compact ? is_compactly_s_packed(r, s) : is_coprimely_s_packed(r, s)).holds;
    };
    auto exhaustive = [&](const RingDescriptor& r, const MultiplicativeSet& s) {
        return (compact ? is_compactly_s_packed_exhaustive(r, s, c.family_cap)
                        : is_coprimely_s_packed_exhaustive(r, s, c.family_cap))
            .holds;
    };
    std::size_t cross_checked = 0;
    std::size_t too_large = 0;
    auto cross_check = [&](const RingDescriptor& r, const MultiplicativeSet& s, bool reduced) {
        if (spec_s(r, s).size() > c.family_cap) {
            ++too_large;
            return;
        }
        ++cross_checked;
        bool full = exhaustive(r, s);
        run.expect(full == reduced, instance(r, "reduction", s), verdict(full), verdict(reduced));
    };
    for (const auto& te : te_catalog(c)) {
        for (const auto& s : base_style_sets(te)) {
            run.count();
            auto s0 = project_to_base(s);
            bool on_a = decide(te.base, s0);
            bool on_r = decide(te.ring, s);
            run.expect(on_a == on_r, te.ring.to_string() + " S=" + set_label(s), verdict(on_a), verdict(on_r));
            cross_check(te.base, s0, on_a);
            cross_check(te.ring, s, on_r);
            if (compact) {
                bool coprime_r = is_coprimely_s_packed(te.ring, s).holds;
                run.expect(!on_r || coprime_r, te.ring.to_string() + " S=" + set_label(s),
                           "compact implies coprime", "coprime fails");
            }
        }
    }
    run.note(std::to_string(cross_checked) + " reductions cross-checked by full family enumeration, " +
             std::to_string(too_large) + " skipped (|Spec_S| > " + std::to_string(c.family_cap) + ")");
    return run.finish();
}

VerificationReport suite_th5(const CatalogSpec& c) {
    Run run("th5");
    for (const auto& te : te_catalog(c)) {
        for (const auto& s : base_style_sets(te)) {
            run.count();
            auto s0 = project_to_base(s);
            auto on_r = is_s_pm(te.ring, s);
            auto on_a = is_s_pm(te.base, s0);
            bool divisible = is_s_divisible(te.module, s0).holds;
            bool expected = on_a.holds && divisible;
            Json cert{{"pmA", on_a.holds}, {"divisible", divisible}, {"diagnostic", on_r.diagnostic}};
            run.expect(on_r.holds == expected, te.ring.to_string() + " S=" + set_label(s), verdict(expected),
                       verdict(on_r.holds), cert);
            if (!on_r.holds && on_r.diagnostic == "no-s-maximal") {
                run.note(te.ring.to_string() + " S=" + set_label(s) + ": S-prime " + on_r.violating->to_string() +
                         " lies in no S-maximal ideal");
            }
        }
    }
    return run.finish();
}

// --- Z-layer ---------------------------------------------------------------

Coord order_mod(const ModuleDescriptor& m, const ModuleElement& x, const Submodule& n) {
    Coord k = 1;
    while (!n.contains(m.scale(k, x))) ++k;
    return k;
}

VerificationReport suite_pm_zlayer(const CatalogSpec& c) {
    Run run("pm-zlayer");
    std::mt19937_64 rng(c.seed);
    auto z = make_integer_ring();
    auto pick = [&](Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng); };
    auto nonzero = [&](Coord bound) {
        Coord v = 0;
        while (v == 0) v = pick(-bound, bound);
        return v;
    };
    for (std::size_t k = 0; k < c.zlayer_samples; ++k) {
        Coord d = c.zlayer_moduli[static_cast<std::size_t>(pick(0, static_cast<Coord>(c.zlayer_moduli.size()) - 1))];
        auto m = make_module(z, {d});
        Coord a = nonzero(60);
        ModuleElement x{{pick(0, d - 1)}};
        Coord s = nonzero(12);
        ModuleElement t{{pick(0, d - 1)}};
        auto j = zte_ideal(m, {{a, x}});
        std::vector<ZteGenerator> sg{{s, t}};
        run.count();
        auto inst = "TE(Z, Z/" + std::to_string(d) + ") J=" + zte_label(m, a, x) + " S=<" + zte_label(m, s, t) + ">";
        auto prime = zte_is_s_prime(j, sg);
        auto maximal = zte_is_s_maximal(j, sg);
        run.expect(prime.verdict == maximal.verdict, inst, "S-prime " + verdict(prime.verdict),
                   "S-maximal " + verdict(maximal.verdict),
                   Json{{"prime", zte_certificate_json(prime)}, {"maximal", zte_certificate_json(maximal)}});
        // Principal ideals: j1 = aM and j0 = |a|·ord(m mod aM)·Z.
        auto am = scaled_submodule(a, whole_module(m));
        Coord expected_j0 = std::abs(a) * order_mod(m, x, am);
        run.expect(j.j1() == am && j.j0().d == expected_j0, inst, "j0=" + std::to_string(expected_j0) + "Z, j1=aM",
                   "j0=" + j.j0().to_string() + ", j1=" + j.j1().to_string());
    }
    return run.finish();
}

// --- worked instances ---------------------------------------------------------

ModuleDescriptor z_module(Coord d) { return make_module(make_integer_ring(), {d}); }

ModuleElement me(Coord v) { return ModuleElement{{v}}; }

}  // namespace

Json certificate_json(const SPrimalityCertificate& cert) {
    Json j;
    j["verdict"] = cert.verdict;
    if (cert.witness && cert.residual) {
        j["witness"] = cert.residual->ring().format(*cert.witness);
    } else {
        j["witness"] = nullptr;
    }
    j["residual"] = cert.residual ? Json(cert.residual->to_string()) : Json();
    j["reason"] = std::string(to_string(cert.reason));
    return j;
}

// --- CatalogSpec / VerificationReport --------------------------------------

CatalogSpec CatalogSpec::from_json(const Json& j) {
    CatalogSpec c;
    if (!j.is_object()) throw Error(ErrorKind::precondition_violated, "catalog must be a JSON object");
    c.base_moduli = j.value("baseModuli", c.base_moduli);
    c.module_factors = j.value("moduleFactors", c.module_factors);
    c.extra_rings = j.value("extraRings", c.extra_rings);
    c.generators_per_set = j.value("generatorsPerSet", c.generators_per_set);
    c.ring_cap = j.value("ringCap", c.ring_cap);
    c.family_cap = j.value("familyCap", c.family_cap);
    c.seed = j.value("seed", c.seed);
    c.zlayer_samples = j.value("zlayerSamples", c.zlayer_samples);
    c.zlayer_moduli = j.value("zlayerModuli", c.zlayer_moduli);
    c.zlayer_max_a = j.value("zlayerMaxA", c.zlayer_max_a);
    c.zlayer_max_d = j.value("zlayerMaxD", c.zlayer_max_d);
    c.zlayer_max_s = j.value("zlayerMaxS", c.zlayer_max_s);
    for (auto n : c.base_moduli) {
        if (n < 2) throw Error(ErrorKind::invalid_ring, "catalog base modulus " + std::to_string(n) + " < 2");
    }
    if (c.generators_per_set < 1 || c.generators_per_set > 2) {
        throw Error(ErrorKind::precondition_violated, "generatorsPerSet must be 1 or 2");
    }
    if (c.zlayer_moduli.empty()) throw Error(ErrorKind::precondition_violated, "zlayerModuli is empty");
    return c;
}

Json CatalogSpec::to_json() const {
    return Json{{"baseModuli", base_moduli},        {"moduleFactors", module_factors},
                {"extraRings", extra_rings},        {"generatorsPerSet", generators_per_set},
                {"ringCap", ring_cap},              {"familyCap", family_cap},
                {"seed", seed},                     {"zlayerSamples", zlayer_samples},
                {"zlayerModuli", zlayer_moduli},    {"zlayerMaxA", zlayer_max_a},
                {"zlayerMaxD", zlayer_max_d},       {"zlayerMaxS", zlayer_max_s}};
}

bool VerificationReport::passed() const { return is_search ? !hits.empty() : failures.empty(); }

Json VerificationReport::to_json() const {
    Json j;
    j["suite"] = suite;
    j["passed"] = passed();
    j["instances"] = instances;
    Json fails = Json::array();
    for (const auto& f : failures) {
        fails.push_back(
            Json{{"instance", f.instance}, {"expected", f.expected}, {"got", f.got}, {"certificate", f.certificate}});
    }
    j["failures"] = std::move(fails);
    if (is_search) j["hits"] = hits;
    j["notes"] = notes;
    j["elapsedMs"] = elapsed_ms;
    return j;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"th1", "th2", "sat",  "smax", "s-p",       "imp-rec",
                                                "s-torsion", "th3", "th4", "th5", "pm-zlayer", "oracle-equivalence"};
    return names;
}

const std::vector<std::string>& search_targets() {
    static const std::vector<std::string> names{"nonhomogeneous-s-prime", "s-prime-not-PxM", "pm-not-s-pm"};
    return names;
}

VerificationReport reproduce_examples() {
    Run run("examples");
    // 0 ⋉ 2Z/6Z is S-prime for S = <(2,0)> in Z ⋉ Z/6.
    {
        run.count();
        auto m = z_module(6);
        auto j = zte_ideal(m, {{0, me(2)}});
        std::vector<ZteGenerator> s{{2, me(0)}};
        auto cert = zte_is_s_prime(j, s);
        run.expect(cert.verdict, "TE(Z, Z/6) J=0x2Z/6 S=<(2,0)> S-prime", "S-prime true", verdict(cert.verdict),
                   zte_certificate_json(cert));
    }
    // P = (6,1)R in Z ⋉ Z/2 is S-maximal for S = <(2,0)>, (P : (4,0)) = 3Z ⋉ Z/2, (0,1) ∉ P.
    {
        run.count();
        auto m = z_module(2);
        auto p = zte_ideal(m, {{6, me(1)}});
        std::vector<ZteGenerator> s{{2, me(0)}};
        auto cert = zte_is_s_maximal(p, s);
        run.expect(cert.verdict, "TE(Z, Z/2) P=(6,1) S=<(2,0)> S-maximal", "true", verdict(cert.verdict), zte_certificate_json(cert));
        auto res = zte_residual(p, 4, me(0));
        auto target = zte_ideal(m, {{3, me(0)}, {0, me(1)}});
        run.expect(zte_equal(res, target), "TE(Z, Z/2) (P:(4,0))", "3Z x Z/2",
                   "j0=" + res.j0().to_string() + " j1=" + res.j1().to_string());
        run.expect(!zte_membership(0, me(1), p), "TE(Z, Z/2) (0,1) in P", "false", "true");
        run.expect(!zte_is_homogeneous(p), "TE(Z, Z/2) P homogeneous", "false", "true");
    }
    // P = (2,1)R in Z ⋉ Z/2 is not S-prime for S = <(3,0)>, but π_A(P) = 2Z is S0-prime.
    {
        run.count();
        auto m = z_module(2);
        auto p = zte_ideal(m, {{2, me(1)}});
        std::vector<ZteGenerator> s{{3, me(0)}};
        auto cert = zte_is_s_prime(p, s);
        run.expect(!cert.verdict, "TE(Z, Z/2) P=(2,1) S=<(3,0)> S-prime", "false", verdict(cert.verdict), zte_certificate_json(cert));
        run.expect(p.proj_a() == ZIdeal{2}, "TE(Z, Z/2) proj_A(P)", "2Z", p.proj_a().to_string());
        auto base = z_is_s_prime(p.proj_a(), make_z_mult_set({3}));
        run.expect(base.verdict, "2Z <3>-prime", "true", verdict(base.verdict), z_certificate_json(base));
    }
    // J = (6,1)R in Z ⋉ Z/4, S = <(2,0)>: j0 = 12Z, (12Z : 4) = 3Z prime, S-prime, (6,0) ∉ J.
    {
        run.count();
        auto m = z_module(4);
        auto j = zte_ideal(m, {{6, me(1)}});
        std::vector<ZteGenerator> s{{2, me(0)}};
        run.expect(j.j0() == ZIdeal{12}, "TE(Z, Z/4) J=(6,1) j0", "12Z", j.j0().to_string());
        auto r = z_residual(j.j0(), 4);
        run.expect(r == ZIdeal{3} && z_is_prime(r), "(12Z:4)", "3Z prime", r.to_string());
        auto cert = zte_is_s_prime(j, s);
        run.expect(cert.verdict, "TE(Z, Z/4) J=(6,1) S=<(2,0)> S-prime", "true", verdict(cert.verdict), zte_certificate_json(cert));
        run.expect(!zte_membership(6, me(0), j), "TE(Z, Z/4) (6,0) in J", "false", "true");
        run.expect(!zte_is_homogeneous(j), "TE(Z, Z/4) J homogeneous", "false", "true");
    }
    return run.finish();
}

VerificationReport run_suite(std::string_view name, const CatalogSpec& c) {
    if (name == "th1") return suite_th(c, false);
    if (name == "th2") return suite_th(c, true);
    if (name == "sat") return suite_sat(c);
    if (name == "smax") return suite_smax(c);
    if (name == "s-p") return suite_sp(c);
    if (name == "imp-rec") return suite_imp_rec(c);
    if (name == "s-torsion") return suite_s_torsion(c);
    if (name == "th3") return suite_packing(c, true);
    if (name == "th4") return suite_packing(c, false);
    if (name == "th5") return suite_th5(c);
    if (name == "pm-zlayer") return suite_pm_zlayer(c);
    if (name == "oracle-equivalence") return suite_oracle(c);
    throw Error(ErrorKind::precondition_violated, "unknown suite '" + std::string(name) + "'");
}

VerificationReport search_counterexamples(std::string_view target, const CatalogSpec& c) {
    Run run(std::string(target), true);
    auto z = make_integer_ring();

    if (target == "nonhomogeneous-s-prime" || target == "s-prime-not-PxM") {
        bool want_nonhomogeneous = target == "nonhomogeneous-s-prime";
        // Z-layer: J = (a,m)(Z ⋉ Z/d), S = <(s,0)>.
        for (Coord d = 2; d <= c.zlayer_max_d; ++d) {
            auto m = make_module(z, {d});
            for (Coord a = 0; a <= 2 * c.zlayer_max_a; ++a) {
                for (Coord mx = 0; mx < d; ++mx) {
                    auto j = zte_ideal(m, {{a, me(mx)}});
                    for (Coord s = 2; s <= c.zlayer_max_s; ++s) {
                        run.count();
                        std::vector<ZteGenerator> sg{{s, me(0)}};
                        auto cert = zte_is_s_prime(j, sg);
                        if (!cert.verdict) continue;
                        bool homogeneous = zte_is_homogeneous(j);
                        bool pxm = homogeneous && j.j1().is_whole();
                        if (want_nonhomogeneous ? homogeneous : pxm) continue;
                        run.hit(Json{{"ring", "TE(Z, Z/" + std::to_string(d) + ")"},
                                     {"ideal", zte_label(m, a, me(mx))},
                                     {"multSet", zte_label(m, s, me(0))},
                                     {"j0", j.j0().to_string()},
                                     {"j1", j.j1().to_string()},
                                     {"homogeneous", homogeneous},
                                     {"certificate", zte_certificate_json(cert)}});
                    }
                }
            }
        }
        // Finite catalog.
        for (const auto& te : te_catalog(c)) {
            auto ideals = enumerate_ideals(te.ring);
            for (const auto& s : mult_sets(te.ring, c.generators_per_set)) {
                for (const auto& j : ideals) {
                    run.count();
                    auto cert = is_s_prime_definitional(j, s);
                    if (!cert.verdict) continue;
                    auto parts = components(j);
                    bool pxm = parts.is_homogeneous && parts.j1.is_whole();
                    if (want_nonhomogeneous ? parts.is_homogeneous : pxm) continue;
                    run.hit(Json{{"ring", te.ring.to_string()},
                                 {"ideal", j.to_string()},
                                 {"multSet", set_label(s)},
                                 {"j0", parts.j0.to_string()},
                                 {"j1", parts.j1.to_string()},
                                 {"homogeneous", parts.is_homogeneous},
                                 {"certificate", certificate_json(cert)}});
                }
            }
        }
        return run.finish();
    }

    if (target == "pm-not-s-pm") {
        // A hit is A ⋉ M pm for S = {1}, not S-pm, with A S0-pm and M not
        // S0-divisible, so that the failure is caused by M alone.
        std::size_t base_caused = 0;
        std::set<std::pair<Coord, ElementSet>> base_pm_nonunit;
        for (const auto& te : te_catalog(c)) {
            auto one = mult_set_generated(te.ring, {});
            if (!is_s_pm(te.ring, one).holds) continue;
            for (const auto& s : mult_sets(te.ring, c.generators_per_set)) {
                run.count();
                auto s0 = project_to_base(s);
                bool base_pm = is_s_pm(te.base, s0).holds;
                auto s0_elems = s0.elements();
                bool nonunit = std::any_of(s0_elems.begin(), s0_elems.end(), [&](const RingElement& x) {
                    return std::gcd(x.coords[0], te.base.modulus()) != 1;
                });
                if (base_pm && nonunit) base_pm_nonunit.insert({te.base.modulus(), s0.members()});
                auto pm = is_s_pm(te.ring, s);
                if (pm.holds) continue;
                auto div = is_s_divisible(te.module, s0);
                if (div.holds || !base_pm) {
                    ++base_caused;
                    continue;
                }
                run.hit(Json{{"ring", te.ring.to_string()},
                             {"multSet", set_label(s)},
                             {"violating", pm.violating ? Json(pm.violating->to_string()) : Json()},
                             {"containingSMaximal", pm.containing},
                             {"diagnostic", pm.diagnostic},
                             {"moduleDivisible", div.holds},
                             {"divisibilityCounterexample", div.witness ? Json(div.witness->residue) : Json()}});
            }
        }
        run.note(std::to_string(base_caused) + " (ring, S) pairs fail S-pm because A is not S0-pm (M divisible or not)");
        run.note(std::to_string(base_pm_nonunit.size()) +
                 " (A, S0) pairs with a non-unit in S0 have A S0-pm; M is S0-divisible whenever S0 consists of units");
        return run.finish();
    }

    throw Error(ErrorKind::precondition_violated, "unknown search target '" + std::string(target) + "'");
}

}  // namespace sprime
