#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/ideal_theory.hpp"
#include "sprime/trivial_extension.hpp"

using namespace sprime;

namespace {

RingElement el(std::vector<Coord> c) { return RingElement{std::move(c)}; }

RingDescriptor te(Coord n, std::vector<Coord> factors) {
    auto a = make_residue_ring(n);
    return make_trivial_extension(a, make_module(a, std::move(factors)));
}

RingDescriptor zte(Coord d) {
    auto z = make_integer_ring();
    return make_trivial_extension(z, make_module(z, {d}));
}

void expect_kind(ErrorKind kind, const std::function<void()>& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

}  // namespace

// =============================================================================
// Construction
// =============================================================================

TEST(FiniteRing, ResidueCardinality) {
    EXPECT_EQ(make_residue_ring(6).cardinality(), 6u);
    EXPECT_EQ(make_residue_ring(2).cardinality(), 2u);
    EXPECT_EQ(make_residue_ring(6).to_string(), "Z/6");
}

TEST(FiniteRing, ZeroRingRejected) {
    expect_kind(ErrorKind::invalid_ring, [] { make_residue_ring(1); });
    expect_kind(ErrorKind::invalid_ring, [] { make_residue_ring(0); });
}

TEST(FiniteRing, ProductCardinality) {
    auto r = make_product_ring(make_residue_ring(2), make_residue_ring(3));
    EXPECT_EQ(r.cardinality(), 6u);
}

TEST(FiniteRing, KleinProductHasIdempotents) {
    auto r = make_product_ring(make_residue_ring(2), make_residue_ring(2));
    EXPECT_EQ(r.cardinality(), 4u);
    for (const auto& e : {el({1, 0}), el({0, 1})}) EXPECT_EQ(r.mul(e, e), e);
}

TEST(FiniteRing, ProductWithIntegersUnsupported) {
    expect_kind(ErrorKind::unsupported, [] { make_product_ring(make_integer_ring(), make_residue_ring(2)); });
}

TEST(FiniteRing, CardinalityCap) {
    expect_kind(ErrorKind::cap_exceeded, [] { make_residue_ring(100, 50); });
}

TEST(FiniteRing, TrivialExtensionCardinality) {
    EXPECT_EQ(te(4, {2}).cardinality(), 8u);
    EXPECT_EQ(te(6, {2, 3}).cardinality(), 36u);
}

// =============================================================================
// Arithmetic
// =============================================================================

TEST(FiniteRing, TrivialExtensionMultiplicationRule) {
    auto r = zte(2);
    EXPECT_EQ(r.mul(el({6, 1}), el({2, 1})), el({12, 0}));  // (12, 6·1 + 2·1)
    EXPECT_EQ(r.mul(el({0, 1}), el({0, 1})), el({0, 0}));
}

TEST(FiniteRing, ResidueZeroDivisor) {
    auto r = make_residue_ring(6);
    EXPECT_EQ(r.mul(el({2}), el({3})), r.zero());
}

TEST(FiniteRing, NormalizeReducesNegatives) {
    auto r = make_residue_ring(7);
    EXPECT_EQ(r.normalize({-1}), el({6}));
    EXPECT_EQ(r.normalize({-8}), el({6}));
    expect_kind(ErrorKind::invalid_element, [&] { r.normalize({1, 2}); });
}

TEST(FiniteRing, RingAxiomsOnCatalog) {
    for (auto r : {make_residue_ring(12), te(4, {2}), te(6, {2, 2}),
                   make_product_ring(make_residue_ring(2), make_residue_ring(4))}) {
        auto xs = r.elements();
        for (const auto& a : xs) {
            EXPECT_EQ(r.add(a, r.neg(a)), r.zero());
            EXPECT_EQ(r.mul(a, r.one()), a);
            for (const auto& b : xs) {
                EXPECT_EQ(r.mul(a, b), r.mul(b, a));
                for (const auto& c : xs) EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
            }
        }
    }
}

TEST(FiniteRing, IndexTablesMatchArithmetic) {
    auto r = te(4, {2, 2});
    for (std::size_t i = 0; i < r.cardinality(); ++i) {
        EXPECT_EQ(r.index_of(r.element_at(i)), i);
        for (std::size_t j = 0; j < r.cardinality(); ++j) {
            EXPECT_EQ(r.element_at(r.mul_index(i, j)), r.mul(r.element_at(i), r.element_at(j)));
            EXPECT_EQ(r.element_at(r.add_index(i, j)), r.add(r.element_at(i), r.element_at(j)));
        }
    }
}

// =============================================================================
// Enumeration, units, nilradical
// =============================================================================

TEST(FiniteRing, EnumerateResidue) {
    auto xs = make_residue_ring(3).elements();
    EXPECT_EQ(xs, (std::vector<RingElement>{el({0}), el({1}), el({2})}));
}

TEST(FiniteRing, EnumerateTrivialExtensionLexicographic) {
    auto xs = te(2, {2}).elements();
    EXPECT_EQ(xs, (std::vector<RingElement>{el({0, 0}), el({0, 1}), el({1, 0}), el({1, 1})}));
}

TEST(FiniteRing, EnumerateIntegersUnsupported) {
    expect_kind(ErrorKind::unsupported, [] { make_integer_ring().elements(); });
    expect_kind(ErrorKind::unsupported, [] { units(zte(2)); });
}

TEST(FiniteRing, Units) {
    EXPECT_EQ(units(make_residue_ring(6)), (std::vector<RingElement>{el({1}), el({5})}));
    EXPECT_EQ(units(make_residue_ring(5)).size(), 4u);
}

TEST(FiniteRing, UnitsMatchOracle) {
    for (auto r : {make_residue_ring(12), te(4, {2}), te(9, {3})}) {
        oracle::Ring o(r);
        std::size_t count = 0;
        for (std::size_t a = 0; a < o.n; ++a) {
            for (std::size_t b = 0; b < o.n; ++b) {
                if (o.mul[a][b] == o.one) {
                    ++count;
                    break;
                }
            }
        }
        EXPECT_EQ(units(r).size(), count) << r.to_string();
    }
}

TEST(FiniteRing, Nilradical) {
    EXPECT_EQ(nilradical(make_residue_ring(4)).elements(), (std::vector<RingElement>{el({0}), el({2})}));
    EXPECT_EQ(nilradical(make_residue_ring(6)).size(), 1u);
    EXPECT_EQ(nilradical(te(2, {2})).elements(), (std::vector<RingElement>{el({0, 0}), el({0, 1})}));
}

TEST(FiniteRing, FormatNested) {
    auto r = te(4, {2, 2});
    EXPECT_EQ(r.to_string(), "TE(Z/4, Z/2 x Z/2)");
    EXPECT_EQ(r.format(el({1, 0, 1})), "(1,(0,1))");
}
