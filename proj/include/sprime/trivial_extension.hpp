#pragma once

/**
 * @file trivial_extension.hpp
 * @brief R = A ⋉ M: construction, graded projections, the components
 * J0 = {a : (a,0) ∈ J} and J1 = {x : (0,x) ∈ J}, and S-prime / S-maximal
 * decisions through those components.
 *
 * Multiplicative sets of R enter only through their image S0 = π_A(S) in A.
 */

#include "sprime/finite_module.hpp"
#include "sprime/finite_ring.hpp"
#include "sprime/ideal_theory.hpp"

#include <vector>

namespace sprime {

/// A must be Z/n or Z, and M must be a module over exactly A. The Z case
/// yields an arithmetic-only ring; finite questions about it go to z_layer.
RingDescriptor make_trivial_extension(const RingDescriptor& base, const ModuleDescriptor& module,
                                      std::size_t cap = kDefaultCardinalityCap);

RingElement te_element(const RingDescriptor& ring, Coord a, const ModuleElement& x);
Coord te_base_part(const RingElement& x);
ModuleElement te_module_part(const RingElement& x);

/// π_A(J) and π_M(J) as full setwise images.
Ideal proj_a(const Ideal& j);
Submodule proj_m(const Ideal& j);

struct HomogeneousDecomposition {
    Ideal j0;
    Submodule j1;
    bool is_homogeneous;
};

HomogeneousDecomposition components(const Ideal& j);

/// I ⋉ N; throws not_an_ideal unless IM ⊆ N.
Ideal homogeneous_ideal(const RingDescriptor& ring, const Ideal& i, const Submodule& n);

/// S0 = π_A(S), generated by the first coordinates of S's generators.
MultiplicativeSet project_to_base(const MultiplicativeSet& s);

struct ComponentCertificate {
    /// Verdict over R. On success the witness is (σ1σ2)², where σ1, σ2 ∈ S
    /// lift the base witness and the torsion witness, and the residual is
    /// (J0 : s1) ⋉ M.
    SPrimalityCertificate result;
    SPrimalityCertificate base;  // J0 against S0
    TorsionDecision torsion;     // ∃s ∈ S0 : sM ⊆ J1
    HomogeneousDecomposition parts;
};

ComponentCertificate is_s_prime_via_components(const Ideal& j, const MultiplicativeSet& s);
ComponentCertificate is_s_maximal_via_components(const Ideal& j, const MultiplicativeSet& s);

/// All S-prime (S-maximal) ideals of A ⋉ M in canonical order. When M is
/// S0-divisible and `fast_path` is set, the list is built directly as
/// {P ⋉ M : P ∈ Spec_S0(A)} (resp. Max_S0(A)).
std::vector<Ideal> spec_s_extension(const RingDescriptor& ring, const MultiplicativeSet& s, bool fast_path = true);
std::vector<Ideal> max_s_extension(const RingDescriptor& ring, const MultiplicativeSet& s, bool fast_path = true);

}  // namespace sprime
