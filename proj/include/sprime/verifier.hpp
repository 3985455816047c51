#pragma once

/**
 * @file verifier.hpp
 * @brief Reproduction of the worked examples, exhaustive property suites over a
 * catalog of small rings, and counterexample searches.
 *
 * Suites: th1 th2 sat smax s-p imp-rec s-torsion th3 th4 th5 pm-zlayer
 * oracle-equivalence. Search targets: nonhomogeneous-s-prime,
 * s-prime-not-PxM, pm-not-s-pm.
 */

#include "sprime/finite_ring.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace sprime {

using Json = nlohmann::ordered_json;

struct SPrimalityCertificate;

struct CatalogSpec {
    /// A = Z/n for each n.
    std::vector<Coord> base_moduli{2, 3, 4, 5, 6, 7, 8, 9, 10};
    /// Module factor lists for A ⋉ M. Empty means: every cyclic Z/d with
    /// d | n, plus Z/2 x Z/2 when 2 | n. Lists that violate d | n for a given
    /// n are skipped for that n.
    std::vector<std::vector<Coord>> module_factors;
    /// Extra finite rings (DSL text) for the ring-generic suites.
    std::vector<std::string> extra_rings{"Z/2 x Z/2", "Z/2 x Z/3", "Z/2 x Z/4", "Z/3 x Z/3", "Z/2 x Z/2 x Z/2"};
    /// Multiplicative sets are generated by this many elements (1 or 2).
    int generators_per_set = 1;
    std::size_t ring_cap = 256;
    /// Exhaustive family cross-checks only when |Spec_S| is at most this.
    std::size_t family_cap = 12;
    std::uint64_t seed = 20240617;
    /// pm-zlayer: number of sampled principal ideals and the module range.
    std::size_t zlayer_samples = 600;
    std::vector<Coord> zlayer_moduli{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
    /// th1/th2 Z-layer part: J = (a,m)(Z ⋉ Z/d), S = <(s,t)>.
    Coord zlayer_max_a = 6;
    Coord zlayer_max_d = 6;
    Coord zlayer_max_s = 6;

    static CatalogSpec defaults() { return {}; }
    static CatalogSpec from_json(const Json& j);
    Json to_json() const;
};

struct Failure {
    std::string instance;
    std::string expected;
    std::string got;
    Json certificate;
};

struct VerificationReport {
    std::string suite;
    std::size_t instances = 0;
    std::vector<Failure> failures;
    std::vector<Json> hits;           // search targets only
    std::vector<std::string> notes;
    bool is_search = false;
    double elapsed_ms = 0.0;

    /// Suites pass with zero failures; searches pass with at least one hit.
    bool passed() const;
    Json to_json() const;
};

/// {verdict, witness, residual, reason} with elements in DSL notation.
Json certificate_json(const SPrimalityCertificate& cert);

const std::vector<std::string>& suite_names();
const std::vector<std::string>& search_targets();

VerificationReport reproduce_examples();
/// Throws precondition_violated for an unknown suite.
VerificationReport run_suite(std::string_view name, const CatalogSpec& catalog = {});
VerificationReport search_counterexamples(std::string_view target, const CatalogSpec& catalog = {});

}  // namespace sprime
