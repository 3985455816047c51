#include <gtest/gtest.h>

#include "sprime/dsl.hpp"
#include "sprime/error.hpp"

using namespace sprime;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::internal_error;
}

}  // namespace

// =============================================================================
// Ring expressions
// =============================================================================

TEST(Dsl, ParseTrivialExtensionOverZ) {
    auto e = parse_ring_expr("TE(Z, Z/6)");
    EXPECT_EQ(e.kind, RingExpr::Kind::trivial_extension);
    EXPECT_EQ(e.to_string(), "TE(Z, Z/6)");
    auto r = elaborate(e);
    EXPECT_FALSE(r.is_finite());
    EXPECT_EQ(r.module().cardinality(), 6u);
}

TEST(Dsl, ParseResidue) {
    auto r = parse_ring("Z/12");
    EXPECT_EQ(r.cardinality(), 12u);
}

TEST(Dsl, SemanticErrors) {
    EXPECT_EQ(kind_of([] { parse_ring_expr("TE(Z/4, Z/3)"); }), ErrorKind::semantic_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("Z/1"); }), ErrorKind::semantic_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("Z x Z/2"); }), ErrorKind::semantic_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("TE(Z/2 x Z/2, Z/2)"); }), ErrorKind::semantic_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("TE(Z, Z)"); }), ErrorKind::semantic_error);
}

TEST(Dsl, SyntaxErrorsCarryPosition) {
    try {
        parse_ring_expr("TE(Z/4, Z/2");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::syntax_error);
        EXPECT_NE(std::string(e.what()).find("position 11"), std::string::npos) << e.what();
    }
    EXPECT_EQ(kind_of([] { parse_ring_expr("Q"); }), ErrorKind::syntax_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("Z/"); }), ErrorKind::syntax_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr("Z/4 Z/2"); }), ErrorKind::syntax_error);
    EXPECT_EQ(kind_of([] { parse_ring_expr(""); }), ErrorKind::syntax_error);
}

TEST(Dsl, CanonicalRoundTrip) {
    for (const char* text : {"Z", "Z/6", "Z/2 x Z/3", "Z/2 x (Z/2 x Z/2)", "TE(Z/4, Z/2 x Z/2)", "TE(Z, Z/6)",
                             "TE(Z/4, Z/2) x Z/3"}) {
        auto printed = parse_ring_expr(text).to_string();
        EXPECT_EQ(parse_ring_expr(printed).to_string(), printed) << text;
    }
    EXPECT_EQ(parse_ring_expr("  TE( Z/4 ,Z/2 x  Z/2 )").to_string(), "TE(Z/4, Z/2 x Z/2)");
    EXPECT_EQ(parse_ring_expr("(Z/2 x Z/2) x Z/2").to_string(), "Z/2 x Z/2 x Z/2");
}

TEST(Dsl, ProductCardinality) {
    EXPECT_EQ(parse_ring("Z/2 x Z/2 x Z/2").cardinality(), 8u);
    EXPECT_EQ(parse_ring("TE(Z/4, Z/2 x Z/2)").cardinality(), 16u);
}

TEST(Dsl, CapExceeded) {
    EXPECT_EQ(kind_of([] { parse_ring("Z/100 x Z/100", 1000); }), ErrorKind::cap_exceeded);
}

// =============================================================================
// Element literals
// =============================================================================

TEST(Dsl, ElementsNormalized) {
    auto r = parse_ring("Z/6");
    auto xs = parse_elements(r, "-1, 8");
    EXPECT_EQ(xs, (std::vector<RingElement>{RingElement{{5}}, RingElement{{2}}}));
    EXPECT_TRUE(parse_elements(r, "").empty());
    EXPECT_TRUE(parse_elements(r, "   ").empty());
}

TEST(Dsl, NestedLiteralsFlatten) {
    auto r = parse_ring("TE(Z/4, Z/2 x Z/2)");
    EXPECT_EQ(parse_element(r, "(1,(0,1))"), parse_element(r, "(1,0,1)"));
    EXPECT_EQ(parse_elements(r, "(1,0,1); (2,1,1)").size(), 2u);
}

TEST(Dsl, ElementArityChecked) {
    auto r = parse_ring("TE(Z/4, Z/2)");
    EXPECT_EQ(kind_of([&] { parse_elements(r, "(1,0,1)"); }), ErrorKind::semantic_error);
    EXPECT_EQ(kind_of([&] { parse_elements(r, "(1,"); }), ErrorKind::syntax_error);
}

TEST(Dsl, IntegerElementsKeepSign) {
    auto r = parse_ring("TE(Z, Z/4)");
    auto x = parse_element(r, "(-6, 5)");
    EXPECT_EQ(x.coords, (std::vector<Coord>{-6, 1}));
}
