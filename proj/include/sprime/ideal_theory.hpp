#pragma once

/**
 * @file ideal_theory.hpp
 * @brief Ideals, multiplicative sets, residuals and S-prime / S-maximal
 * decision procedures over finite rings.
 *
 * Every decision comes in two independent forms:
 *   - definitional: the quantifier from the definition, checked by brute force;
 *   - residual: search for s in S such that (I : s) is prime (resp. a maximal
 *     element of the ideals disjoint from S).
 * The two forms are cross-checked against each other by the verifier.
 *
 * Witnesses are always the first valid s in canonical element order.
 */

#include "sprime/element_set.hpp"
#include "sprime/finite_ring.hpp"

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sprime {

class Ideal {
public:
    /// Wraps an element set that is known to be an ideal of `ring`. Throws
    /// not_an_ideal when `members` is not closed.
    static Ideal from_members(const RingDescriptor& ring, ElementSet members);

    const RingDescriptor& ring() const { return ring_; }
    const ElementSet& members() const { return members_; }
    const std::vector<RingElement>& generators() const { return generators_; }

    std::size_t size() const { return members_.count(); }
    bool contains(const RingElement& x) const;
    bool contains_index(std::size_t i) const { return members_.test(i); }
    bool is_proper() const { return !members_.test(ring_.one_index()); }
    bool is_zero() const { return members_.count() == 1; }
    bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

    std::vector<RingElement> elements() const;
    /// Short label such as "<(2,1)>" built from minimal generators.
    std::string to_string() const;

    friend bool operator==(const Ideal& a, const Ideal& b) {
        return a.members_ == b.members_ && a.ring_ == b.ring_;
    }

private:
    Ideal(RingDescriptor ring, ElementSet members, std::vector<RingElement> generators)
        : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

    RingDescriptor ring_;
    ElementSet members_;
    std::vector<RingElement> generators_;

    friend struct IdealAccess;
};

class MultiplicativeSet {
public:
    const RingDescriptor& ring() const { return ring_; }
    const ElementSet& members() const { return members_; }
    const std::vector<RingElement>& generators() const { return generators_; }

    std::size_t size() const { return members_.count(); }
    bool contains(const RingElement& x) const;
    bool contains_index(std::size_t i) const { return members_.test(i); }
    std::vector<RingElement> elements() const;
    std::string to_string() const;

    friend bool operator==(const MultiplicativeSet& a, const MultiplicativeSet& b) {
        return a.members_ == b.members_ && a.ring_ == b.ring_;
    }

private:
    MultiplicativeSet(RingDescriptor ring, ElementSet members, std::vector<RingElement> generators)
        : ring_(std::move(ring)), members_(std::move(members)), generators_(std::move(generators)) {}

    RingDescriptor ring_;
    ElementSet members_;
    std::vector<RingElement> generators_;

    friend struct IdealAccess;
};

enum class CertificateReason {
    disjointness_failure,
    no_witness,
    residual_prime,
    residual_maximal_disjoint,
    component_split,
    definition_witness,
};

std::string_view to_string(CertificateReason reason);

struct SPrimalityCertificate {
    bool verdict = false;
    std::optional<RingElement> witness;
    std::optional<Ideal> residual;  // (I : witness)
    CertificateReason reason = CertificateReason::no_witness;
};

Ideal ideal_generated(const RingDescriptor& ring, std::span<const RingElement> generators);
Ideal zero_ideal(const RingDescriptor& ring);
Ideal unit_ideal(const RingDescriptor& ring);
Ideal ideal_sum(const Ideal& a, const Ideal& b);

/// Greedy generating set: scan elements in canonical order, keep those not
/// already in the ideal generated so far.
std::vector<RingElement> minimal_generators(const Ideal& ideal);

/// Every ideal of a finite ring, canonical order. Throws unsupported for Z.
std::vector<Ideal> enumerate_ideals(const RingDescriptor& ring);

Ideal residual(const Ideal& ideal, const RingElement& x);
Ideal residual(const Ideal& ideal, const Ideal& by);
Ideal scaled_ideal(const RingElement& t, const Ideal& ideal);

/// Multiplicative closure of generators ∪ {1}; throws
/// invalid_multiplicative_set when the closure reaches 0.
MultiplicativeSet mult_set_generated(const RingDescriptor& ring, std::span<const RingElement> generators);
/// S* = {x : xy ∈ S for some y}.
MultiplicativeSet saturation(const MultiplicativeSet& s);

bool meets(const Ideal& ideal, const MultiplicativeSet& s);

bool is_prime(const Ideal& ideal);
/// Proper, and every x outside the ideal is invertible modulo it.
bool is_maximal(const Ideal& ideal);

SPrimalityCertificate is_s_prime_definitional(const Ideal& ideal, const MultiplicativeSet& s);
SPrimalityCertificate is_s_prime_residual(const Ideal& ideal, const MultiplicativeSet& s);
SPrimalityCertificate is_s_maximal_definitional(const Ideal& ideal, const MultiplicativeSet& s);
SPrimalityCertificate is_s_maximal_residual(const Ideal& ideal, const MultiplicativeSet& s);

std::vector<Ideal> spec_s(const RingDescriptor& ring, const MultiplicativeSet& s);
std::vector<Ideal> max_s(const RingDescriptor& ring, const MultiplicativeSet& s);

/// First prime ideal (canonical order) containing `ideal` and disjoint from s.
/// Throws precondition_violated if ideal meets s.
Ideal find_disjoint_prime(const Ideal& ideal, const MultiplicativeSet& s);

}  // namespace sprime
