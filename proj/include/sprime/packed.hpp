#pragma once

/**
 * @file packed.hpp
 * @brief Compactly / coprimely S-packed rings and S-pm rings, for finite
 * rings.
 *
 * Both packing properties quantify over every family of S-prime ideals. The
 * default deciders check one worst family per ideal Q instead:
 *   compact:  fails iff Q ⊆ ⋃{P ∈ Spec_S : sQ ⊄ P for all s ∈ S}
 *   coprime:  fails iff sQ ⊆ ⋃{P ∈ Spec_S : Q + P = R} for some s ∈ S,
 *             the family being nonempty.
 * The *_exhaustive variants enumerate every family and exist to cross-check
 * the reductions.
 */

#include "sprime/ideal_theory.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sprime {

struct PackingDecision {
    bool holds = true;
    // Counterexample: the ideal Q, the family, and (coprime case) the s.
    std::optional<Ideal> q;
    std::vector<Ideal> family;
    std::optional<RingElement> s;
};

PackingDecision is_compactly_s_packed(const RingDescriptor& ring, const MultiplicativeSet& s);
PackingDecision is_coprimely_s_packed(const RingDescriptor& ring, const MultiplicativeSet& s);

/// Full subset enumeration; throws cap_exceeded when |Spec_S| > max_family.
PackingDecision is_compactly_s_packed_exhaustive(const RingDescriptor& ring, const MultiplicativeSet& s,
                                                 std::size_t max_family = 12);
PackingDecision is_coprimely_s_packed_exhaustive(const RingDescriptor& ring, const MultiplicativeSet& s,
                                                 std::size_t max_family = 12);

struct PmDecision {
    bool holds = true;
    std::optional<Ideal> violating;  // S-prime ideal without exactly one S-maximal ideal above it
    std::size_t containing = 0;      // how many S-maximal ideals contain it
    std::string diagnostic;          // "no-s-maximal" or "several-s-maximal"
};

PmDecision is_s_pm(const RingDescriptor& ring, const MultiplicativeSet& s);

}  // namespace sprime
