// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include "sprime/dsl.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/trivial_extension.hpp"
#include "sprime/verifier.hpp"
#include "sprime/z_layer.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

using namespace sprime;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& title, double limit_s, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_s > 0 && secs > limit_s) {
        out.ok = false;
        out.detail += " (time limit " + std::to_string(limit_s) + " s exceeded)";
    }
    if (!out.ok) ++failures;
    std::printf("%s criterion %2d: %s [%.3f s] %s\n", out.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
                out.detail.c_str());
    std::fflush(stdout);
}

// Z ⋉ M instances go through the DSL exactly as the command line would.
struct ZteCase {
    ModuleDescriptor module;
    ZteIdeal ideal;
    std::vector<ZteGenerator> s;
};

std::vector<ZteGenerator> pairs(const RingDescriptor& ring, const std::string& text) {
    std::vector<ZteGenerator> out;
    for (const auto& x : parse_elements(ring, text)) out.push_back({te_base_part(x), te_module_part(x)});
    return out;
}

ZteCase zte_case(const std::string& ring_text, const std::string& ideal, const std::string& s) {
    auto ring = parse_ring(ring_text);
    return {ring.module(), zte_ideal(ring.module(), pairs(ring, ideal)), pairs(ring, s)};
}

ModuleElement me(Coord v) { return ModuleElement{{v}}; }

std::string verdict(bool b) { return b ? "true" : "false"; }

Outcome suite(const std::string& name, const CatalogSpec& catalog) {
    auto r = run_suite(name, catalog);
    std::string detail = std::to_string(r.instances) + " instances, " + std::to_string(r.failures.size()) + " failures";
    if (!r.failures.empty()) detail += "; first: " + r.failures.front().instance + " expected " +
                                       r.failures.front().expected + " got " + r.failures.front().got;
    return {r.passed() && r.instances > 0, detail};
}

}  // namespace

int main() {
    auto catalog = CatalogSpec::defaults();

    criterion(1, "0 x 2Z/6 is S-prime in TE(Z,Z/6), S=<(2,0)>", 1.0, [] {
        auto c = zte_case("TE(Z, Z/6)", "(0,2)", "(2,0)");
        auto cert = zte_is_s_prime(c.ideal, c.s);
        return Outcome{cert.verdict, "S-prime=" + verdict(cert.verdict) + " j1=" + c.ideal.j1().to_string()};
    });

    criterion(2, "(6,1)R S-maximal in TE(Z,Z/2), S=<(2,0)>; (P:(4,0)) = 3Z x Z/2; (0,1) not in P", 1.0, [] {
        auto c = zte_case("TE(Z, Z/2)", "(6,1)", "(2,0)");
        bool smax = zte_is_s_maximal(c.ideal, c.s).verdict;
        auto res = zte_residual(c.ideal, 4, me(0));
        bool residual_ok = zte_equal(res, zte_ideal(c.module, {{3, me(0)}, {0, me(1)}}));
        bool outside = !zte_membership(0, me(1), c.ideal);
        bool nonhomogeneous = !zte_is_homogeneous(c.ideal);
        return Outcome{smax && residual_ok && outside && nonhomogeneous,
                       "S-maximal=" + verdict(smax) + " residual j0=" + res.j0().to_string() + " j1=" +
                           res.j1().to_string() + " (0,1) in P=" + verdict(!outside)};
    });

    criterion(3, "(2,1)R not S-prime in TE(Z,Z/2), S=<(3,0)>; 2Z is <3>-prime", 1.0, [] {
        auto c = zte_case("TE(Z, Z/2)", "(2,1)", "(3,0)");
        bool sprime = zte_is_s_prime(c.ideal, c.s).verdict;
        bool base = z_is_s_prime(make_z_ideal(2), make_z_mult_set({3})).verdict;
        bool proj = c.ideal.proj_a() == make_z_ideal(2);
        return Outcome{!sprime && base && proj, "S-prime=" + verdict(sprime) + " proj_A=" + c.ideal.proj_a().to_string() +
                                                    " z_is_S_prime(2Z,<3>)=" + verdict(base)};
    });

    criterion(4, "(6,1)R in TE(Z,Z/4), S=<(2,0)>: j0=12Z, (12Z:4)=3Z prime, S-prime, (6,0) not in J", 1.0, [] {
        auto c = zte_case("TE(Z, Z/4)", "(6,1)", "(2,0)");
        auto r = z_residual(c.ideal.j0(), 4);
        auto cert = zte_is_s_prime(c.ideal, c.s);
        bool outside = !zte_membership(6, me(0), c.ideal);
        bool ok = c.ideal.j0() == make_z_ideal(12) && r == make_z_ideal(3) && z_is_prime(r) && cert.verdict && outside;
        return Outcome{ok, "j0=" + c.ideal.j0().to_string() + " residual=" + r.to_string() +
                               " S-prime=" + verdict(cert.verdict) + " witness=" + cert.base.witness_product};
    });

    criterion(5, "th1 suite: definitional S-prime == component characterization", 300.0,
              [&] { return suite("th1", catalog); });
    criterion(6, "th2 suite: definitional S-maximal == component characterization", 600.0,
              [&] { return suite("th2", catalog); });
    criterion(7, "sat suite: S-prime w.r.t. S == S-prime w.r.t. S*", 0, [&] { return suite("sat", catalog); });
    criterion(8, "smax suite: p S-maximal => tp S-maximal for t in S*", 0, [&] { return suite("smax", catalog); });
    criterion(9, "S-P suite: find_disjoint_prime succeeds on every disjoint (I,S)", 0,
              [&] { return suite("s-p", catalog); });
    criterion(10, "imp/rec suite: all S-primes are P x M <=> M S0-divisible", 0,
              [&] { return suite("imp-rec", catalog); });
    criterion(11, "S-torsion suite: sM = 0 => (J S-prime <=> J0 S0-prime)", 0,
              [&] { return suite("s-torsion", catalog); });
    criterion(12, "th3/th4 suites: packing verdicts of A and A x| M agree", 600.0, [&] {
        auto a = suite("th3", catalog);
        auto b = suite("th4", catalog);
        return Outcome{a.ok && b.ok, "th3: " + a.detail + "; th4: " + b.detail};
    });
    criterion(13, "th5 suite: S-pm(A x| M) == S0-pm(A) and M S0-divisible", 0,
              [&] { return suite("th5", catalog); });
    criterion(14, "oracle-equivalence suite: residual tests == definitional tests", 0,
              [&] { return suite("oracle-equivalence", catalog); });
    criterion(15, "pm-zlayer suite: S-prime == S-maximal on >= 500 principal Z x| M ideals", 0, [&] {
        auto out = suite("pm-zlayer", catalog);
        out.ok = out.ok && catalog.zlayer_samples >= 500;
        return out;
    });

    std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
