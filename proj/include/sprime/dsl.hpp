#pragma once

/**
 * @file dsl.hpp
 * @brief Ring-expression language for the command line.
 *
 *   ring   := term ("x" term)*
 *   term   := "Z" | "Z/" INT | "TE(" ring "," module ")" | "(" ring ")"
 *   module := mterm ("x" mterm)*
 *   mterm  := "Z/" INT | "(" module ")"
 *   elem   := INT | "(" elem ("," elem)* ")"
 *
 * Element literals are flattened, so in TE(Z/4, Z/2 x Z/2) the element
 * (1,(0,1)) may also be written (1,0,1). Integers may be negative and are
 * reduced on parse.
 */

#include "sprime/finite_ring.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sprime {

struct RingExpr {
    enum class Kind { integers, residue, product, trivial_extension };

    Kind kind = Kind::integers;
    Coord n = 0;                        // residue
    std::shared_ptr<const RingExpr> left, right;  // product operands, or TE base in `left`
    std::vector<Coord> module_factors;  // trivial extension
    std::size_t position = 0;           // offset of the expression in the source text

    /// Canonical text, e.g. "TE(Z/4, Z/2 x Z/2)".
    std::string to_string() const;
};

/// Syntax errors throw syntax_error; constraint violations (Z/1, TE(Z/4, Z/3),
/// products with Z) throw semantic_error. Messages start with "position N:".
RingExpr parse_ring_expr(std::string_view text);
RingDescriptor elaborate(const RingExpr& expr, std::size_t cap = kDefaultCardinalityCap);
RingDescriptor parse_ring(std::string_view text, std::size_t cap = kDefaultCardinalityCap);

/// Comma-separated element literals; the empty string is the empty list.
std::vector<RingElement> parse_elements(const RingDescriptor& ring, std::string_view text);
RingElement parse_element(const RingDescriptor& ring, std::string_view text);

}  // namespace sprime
