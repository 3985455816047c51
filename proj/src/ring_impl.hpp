#pragma once

// Private representation shared by the finite_ring and ideal_theory sources.

#include "sprime/element_set.hpp"
#include "sprime/finite_ring.hpp"

#include <mutex>
#include <optional>
#include <vector>

namespace sprime {

struct ModuleDescriptor::Impl {
    std::optional<RingDescriptor> base;
    std::vector<Coord> factors;
    std::vector<std::size_t> strides;
    std::size_t cardinality = 1;
    Coord exponent = 1;
};

struct RingDescriptor::Impl {
    RingKind kind = RingKind::residue;
    Coord n = 0;
    std::optional<RingDescriptor> left;   // product left, or trivial-extension base
    std::optional<RingDescriptor> right;  // product right
    std::optional<ModuleDescriptor> module;
    std::vector<Coord> radices;
    bool finite = true;
    std::size_t cardinality = 0;
    std::vector<std::size_t> strides;
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<std::uint16_t> neg_table;
    std::size_t one_index = 0;

    // Ideal lattice, computed on first use by ideal_theory.
    mutable std::once_flag lattice_once;
    mutable std::vector<ElementSet> lattice;
};

}  // namespace sprime
