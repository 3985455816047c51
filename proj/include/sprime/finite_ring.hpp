#pragma once

/**
 * @file finite_ring.hpp
 * @brief Descriptors and exact arithmetic for finite commutative rings.
 *
 * A RingDescriptor is one of
 *   - Z/nZ (n >= 2),
 *   - a direct product of two finite rings,
 *   - a trivial extension A ⋉ M of a base ring by a module
 *     (built by make_trivial_extension in trivial_extension.hpp),
 *   - the marker ring Z, which supports arithmetic but never enumeration.
 *
 * Elements are flat coordinate vectors. Finite rings number their elements
 * 0..|R|-1 in lexicographic coordinate order; every set-valued result in the
 * library is expressed over these indices.
 */

#include "sprime/element_set.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace sprime {

using Coord = std::int64_t;

inline constexpr std::size_t kDefaultCardinalityCap = 4096;

struct RingElement {
    std::vector<Coord> coords;

    friend auto operator<=>(const RingElement&, const RingElement&) = default;
};

struct ModuleElement {
    std::vector<Coord> coords;

    friend auto operator<=>(const ModuleElement&, const ModuleElement&) = default;
};

enum class RingKind { residue, product, trivial_extension, integers };

class ModuleDescriptor;
class Ideal;

class RingDescriptor {
public:
    RingKind kind() const;
    bool is_finite() const;
    /// Number of elements; throws unsupported for infinite rings.
    std::size_t cardinality() const;

    Coord modulus() const;  // residue rings only
    const RingDescriptor& left() const;
    const RingDescriptor& right() const;
    const RingDescriptor& base() const;
    const ModuleDescriptor& module() const;

    /// Coordinates per element.
    std::size_t arity() const;
    /// Per-coordinate modulus; 0 marks an unbounded Z coordinate.
    std::span<const Coord> radices() const;

    RingElement zero() const;
    RingElement one() const;
    RingElement add(const RingElement& x, const RingElement& y) const;
    RingElement sub(const RingElement& x, const RingElement& y) const;
    RingElement mul(const RingElement& x, const RingElement& y) const;
    RingElement neg(const RingElement& x) const;

    /// Reduce raw coordinates into canonical range; throws invalid_element on
    /// a shape mismatch.
    RingElement normalize(std::vector<Coord> coords) const;
    /// Throws invalid_element unless x is a canonical element of this ring.
    void check(const RingElement& x) const;
    bool contains(const RingElement& x) const;

    // Index-level interface (finite rings only).
    std::size_t index_of(const RingElement& x) const;
    RingElement element_at(std::size_t index) const;
    std::size_t add_index(std::size_t i, std::size_t j) const;
    std::size_t mul_index(std::size_t i, std::size_t j) const;
    std::size_t neg_index(std::size_t i) const;
    std::size_t zero_index() const { return 0; }
    std::size_t one_index() const;

    /// All elements in canonical order.
    std::vector<RingElement> elements() const;

    /// Element sets of every ideal, canonical order. Computed once per ring
    /// and shared by all copies of this descriptor.
    const std::vector<ElementSet>& ideal_lattice() const;

    std::string to_string() const;
    std::string format(const RingElement& x) const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

    struct Impl;

private:
    explicit RingDescriptor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    void require_finite(const char* what) const;

    std::shared_ptr<const Impl> impl_;

    friend struct RingBuilder;
};

/// A module ⊕ Z/d_i over Z/nZ or Z.
class ModuleDescriptor {
public:
    const RingDescriptor& base() const;
    std::span<const Coord> factors() const;
    std::size_t cardinality() const;
    Coord exponent() const;

    ModuleElement zero() const;
    ModuleElement add(const ModuleElement& x, const ModuleElement& y) const;
    ModuleElement neg(const ModuleElement& x) const;
    /// Integer scalar action a·x, componentwise mod d_i.
    ModuleElement scale(Coord a, const ModuleElement& x) const;

    ModuleElement normalize(std::vector<Coord> coords) const;
    void check(const ModuleElement& x) const;

    std::size_t index_of(const ModuleElement& x) const;
    ModuleElement element_at(std::size_t index) const;
    std::vector<ModuleElement> elements() const;

    std::string to_string() const;
    std::string format(const ModuleElement& x) const;

    friend bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b);

    struct Impl;

private:
    explicit ModuleDescriptor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    std::shared_ptr<const Impl> impl_;

    friend struct RingBuilder;
};

RingDescriptor make_residue_ring(Coord n, std::size_t cap = kDefaultCardinalityCap);
RingDescriptor make_product_ring(const RingDescriptor& r1, const RingDescriptor& r2,
                                 std::size_t cap = kDefaultCardinalityCap);
RingDescriptor make_integer_ring();

/// {x : xy = 1 for some y}, canonical order.
std::vector<RingElement> units(const RingDescriptor& ring);
/// {x : x^k = 0 for some k <= |R|}.
Ideal nilradical(const RingDescriptor& ring);

namespace detail {
RingDescriptor build_trivial_extension(const RingDescriptor& base, const ModuleDescriptor& module,
                                       std::size_t cap);
ModuleDescriptor build_module(const RingDescriptor& base, std::vector<Coord> factors);

Coord mod_floor(Coord a, Coord m);
Coord checked_mul(Coord a, Coord b);
Coord checked_add(Coord a, Coord b);
Coord mul_mod(Coord a, Coord b, Coord m);
}  // namespace detail

}  // namespace sprime
