#pragma once

/**
 * @file z_layer.hpp
 * @brief Exact decisions over Z and over Z ⋉ M with M finite.
 *
 * Ideals of Z are dZ (d >= 0). Multiplicative sets are products of a list of
 * nonzero integers; every infinite quantifier over them is finitized by
 * working with residues modulo d (ideal tests) or modulo exponent(M) (torsion
 * tests).
 *
 * A finitely generated ideal J of Z ⋉ M is reduced by integer row operations
 * on its generators to one generator (g, c) with g = gcd of the first
 * coordinates plus generators (0, c'_j). Then
 *     J1 = gM + <c'_j>           (plus <c> when g = 0)
 *     J0 = g·ord(c mod J1)·Z     (0 when g = 0)
 * and (a, x) ∈ J  iff  g | a and x - (a/g)c ∈ J1.
 */

#include "sprime/finite_module.hpp"
#include "sprime/finite_ring.hpp"
#include "sprime/ideal_theory.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sprime {

struct ZIdeal {
    Coord d = 0;

    std::string to_string() const { return std::to_string(d) + "Z"; }
    friend bool operator==(const ZIdeal&, const ZIdeal&) = default;
};

ZIdeal make_z_ideal(Coord d);

struct ZMultSet {
    std::vector<Coord> generators;  // nonzero; the empty product 1 is implicit
};

/// Throws invalid_multiplicative_set when a generator is 0.
ZMultSet make_z_mult_set(std::vector<Coord> generators);

/// Residues mod m of all products of generators, ascending.
std::vector<Coord> z_reachable_residues(const ZMultSet& s, Coord m);
bool z_is_disjoint(const ZIdeal& ideal, const ZMultSet& s);
/// (dZ : s) = (d / gcd(d, s))Z.
ZIdeal z_residual(const ZIdeal& ideal, Coord s);
bool z_is_prime(const ZIdeal& ideal);

struct ZCertificate {
    bool verdict = false;
    std::optional<ScalarWitness> witness;
    std::string witness_product;  // e.g. "2^2"; empty when there is no witness
    std::optional<ZIdeal> residual;
    CertificateReason reason = CertificateReason::no_witness;
};

ZCertificate z_is_s_prime(const ZIdeal& ideal, const ZMultSet& s);
ZCertificate z_is_s_maximal(const ZIdeal& ideal, const ZMultSet& s);

struct ZteGenerator {
    Coord a = 0;
    ModuleElement m;
};

class ZteIdeal {
public:
    const ModuleDescriptor& module() const { return module_; }
    const std::vector<ZteGenerator>& generators() const { return generators_; }
    const ZIdeal& j0() const { return j0_; }
    const Submodule& j1() const { return j1_; }
    /// π_A(J) = gZ.
    ZIdeal proj_a() const { return ZIdeal{g_}; }
    /// The reduced generator (g, c).
    Coord g() const { return g_; }
    const ModuleElement& c() const { return c_; }

    std::string to_string() const;

private:
    ZteIdeal(ModuleDescriptor module, std::vector<ZteGenerator> gens, ZIdeal j0, Submodule j1, Coord g, ModuleElement c)
        : module_(std::move(module)), generators_(std::move(gens)), j0_(j0), j1_(std::move(j1)), g_(g),
          c_(std::move(c)) {}

    ModuleDescriptor module_;
    std::vector<ZteGenerator> generators_;
    ZIdeal j0_;
    Submodule j1_;
    Coord g_;
    ModuleElement c_;

    friend ZteIdeal zte_ideal(const ModuleDescriptor&, std::vector<ZteGenerator>);
};

/// M must be a module over Z.
ZteIdeal zte_ideal(const ModuleDescriptor& module, std::vector<ZteGenerator> generators);
bool zte_membership(Coord a, const ModuleElement& x, const ZteIdeal& j);
bool zte_equal(const ZteIdeal& a, const ZteIdeal& b);
bool zte_is_subset(const ZteIdeal& a, const ZteIdeal& b);
/// (J : (s, t)).
ZteIdeal zte_residual(const ZteIdeal& j, Coord s, const ModuleElement& t);
bool zte_is_homogeneous(const ZteIdeal& j);

struct ZteCertificate {
    bool verdict = false;
    ZCertificate base;       // J0 against S0
    TorsionDecision torsion; // ∃s ∈ S0 : sM ⊆ J1
    CertificateReason reason = CertificateReason::no_witness;
};

/// S is given by generator pairs; only first coordinates matter. Throws
/// invalid_multiplicative_set for a generator (0, t), whose square is 0.
ZteCertificate zte_is_s_prime(const ZteIdeal& j, std::span<const ZteGenerator> s);
ZteCertificate zte_is_s_maximal(const ZteIdeal& j, std::span<const ZteGenerator> s);

ZMultSet project_generators(std::span<const ZteGenerator> s);

}  // namespace sprime
