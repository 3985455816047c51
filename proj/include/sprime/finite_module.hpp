#pragma once

/**
 * @file finite_module.hpp
 * @brief Finite modules ⊕ Z/d_i over Z or Z/nZ: submodule lattice, scaled
 * submodules sN, and the uniform S-torsion / S-divisibility tests.
 *
 * Multiplicative sets of scalars are given by generators. The scalar action
 * factors through Z/m (m = n for base Z/nZ, m = exponent(M) for base Z), so
 * the possibly infinite set of products of generators is searched as the
 * finite set of its residues mod m, in breadth-first discovery order.
 */

#include "sprime/element_set.hpp"
#include "sprime/finite_ring.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sprime {

class MultiplicativeSet;

/// make_module: throws invalid_module unless every d_i >= 1 and, for base
/// Z/nZ, every d_i divides n.
ModuleDescriptor make_module(const RingDescriptor& base, std::vector<Coord> factors);

ModuleElement scalar_action(const ModuleDescriptor& module, Coord a, const ModuleElement& x);

class Submodule {
public:
    const ModuleDescriptor& ambient() const { return ambient_; }
    const ElementSet& members() const { return members_; }
    const std::vector<ModuleElement>& generators() const { return generators_; }

    std::size_t size() const { return members_.count(); }
    bool contains(const ModuleElement& x) const;
    bool contains_index(std::size_t i) const { return members_.test(i); }
    bool is_subset_of(const Submodule& other) const { return members_.is_subset_of(other.members_); }
    bool is_whole() const { return members_.all(); }
    std::vector<ModuleElement> elements() const;
    std::string to_string() const;

    friend bool operator==(const Submodule& a, const Submodule& b) {
        return a.members_ == b.members_ && a.ambient_ == b.ambient_;
    }

private:
    Submodule(ModuleDescriptor ambient, ElementSet members, std::vector<ModuleElement> generators)
        : ambient_(std::move(ambient)), members_(std::move(members)), generators_(std::move(generators)) {}

    ModuleDescriptor ambient_;
    ElementSet members_;
    std::vector<ModuleElement> generators_;

    friend struct SubmoduleAccess;
};

Submodule submodule_generated(const ModuleDescriptor& module, std::span<const ModuleElement> generators);
/// Throws invalid_module when `members` is not a submodule.
Submodule submodule_from_members(const ModuleDescriptor& module, ElementSet members);
Submodule whole_module(const ModuleDescriptor& module);
Submodule zero_submodule(const ModuleDescriptor& module);
Submodule submodule_sum(const Submodule& a, const Submodule& b);
std::vector<Submodule> enumerate_submodules(const ModuleDescriptor& module);
/// sN = {s·x : x ∈ N}.
Submodule scaled_submodule(Coord s, const Submodule& n);

/// A product of generators, recorded by exponents so it stays checkable even
/// when the integer itself would overflow.
struct ScalarWitness {
    Coord residue = 1;                 // value mod the search modulus
    std::vector<unsigned> exponents;   // one per generator
    std::optional<Coord> value;        // exact product when it fits in 64 bits

    std::string product(std::span<const Coord> generators) const;
};

/// Residues of all products of generators mod `modulus`, in BFS discovery
/// order starting from the empty product.
std::vector<ScalarWitness> reachable_scalars(std::span<const Coord> generators, Coord modulus);

struct TorsionDecision {
    bool holds = false;
    std::optional<ScalarWitness> witness;  // sM ⊆ N witness, or divisibility counterexample
};

/// ∃ s in the generated set with s·M ⊆ N (M = N.ambient()).
TorsionDecision is_uniformly_s_torsion(const Submodule& n, std::span<const Coord> scalar_generators);
TorsionDecision is_uniformly_s_torsion(const Submodule& n, const MultiplicativeSet& base_set);

/// sM = M for every s in the generated set; on failure the witness is the
/// first violating s.
TorsionDecision is_s_divisible(const ModuleDescriptor& module, std::span<const Coord> scalar_generators);
TorsionDecision is_s_divisible(const ModuleDescriptor& module, const MultiplicativeSet& base_set);

/// Search modulus for scalar sets acting on `module`.
Coord scalar_modulus(const ModuleDescriptor& module);

}  // namespace sprime
