#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/ideal_theory.hpp"
#include "sprime/trivial_extension.hpp"

using namespace sprime;

namespace {

RingElement el(std::vector<Coord> c) { return RingElement{std::move(c)}; }

std::vector<RingElement> els(std::initializer_list<Coord> vs) {
    std::vector<RingElement> out;
    for (auto v : vs) out.push_back(el({v}));
    return out;
}

Ideal gen(const RingDescriptor& r, std::vector<RingElement> g) { return ideal_generated(r, g); }

MultiplicativeSet mset(const RingDescriptor& r, std::vector<RingElement> g) { return mult_set_generated(r, g); }

RingDescriptor te(Coord n, std::vector<Coord> factors) {
    auto a = make_residue_ring(n);
    return make_trivial_extension(a, make_module(a, std::move(factors)));
}

std::vector<RingDescriptor> catalog() {
    std::vector<RingDescriptor> out;
    for (Coord n : {4, 6, 8, 9, 12}) out.push_back(make_residue_ring(n));
    out.push_back(make_product_ring(make_residue_ring(2), make_residue_ring(2)));
    out.push_back(make_product_ring(make_residue_ring(2), make_residue_ring(4)));
    out.push_back(te(4, {2}));
    out.push_back(te(6, {3}));
    out.push_back(te(4, {2, 2}));
    out.push_back(te(8, {4}));
    return out;
}

// Every single-generator multiplicative set.
std::vector<MultiplicativeSet> sets(const RingDescriptor& r) {
    std::vector<MultiplicativeSet> out;
    for (const auto& x : r.elements()) {
        try {
            out.push_back(mset(r, {x}));
        } catch (const Error&) {
        }
    }
    return out;
}

}  // namespace

// =============================================================================
// Ideals
// =============================================================================

TEST(IdealTheory, IdealGenerated) {
    auto z12 = make_residue_ring(12);
    EXPECT_EQ(gen(z12, els({4})).elements(), els({0, 4, 8}));
    EXPECT_EQ(gen(z12, {}).size(), 1u);
}

TEST(IdealTheory, PrincipalIdealInTrivialExtensionHasTwoElements) {
    // (2,1)(a,x) = (2a, a mod 2): the ideal is {(0,0),(2,1)}, two elements
    // (not four).
    auto r = te(4, {2});
    auto i = gen(r, {el({2, 1})});
    oracle::Ring o(r);
    EXPECT_EQ(i.size(), o.ideal({o.index(el({2, 1}))}).size());
    EXPECT_EQ(i.size(), 2u);
}

TEST(IdealTheory, EnumerateIdealCounts) {
    EXPECT_EQ(enumerate_ideals(make_residue_ring(12)).size(), 6u);
    EXPECT_EQ(enumerate_ideals(make_product_ring(make_residue_ring(2), make_residue_ring(2))).size(), 4u);
}

TEST(IdealTheory, EnumerateIdealsTrivialExtension) {
    auto r = te(4, {2});
    auto ideals = enumerate_ideals(r);
    auto a = r.base();
    auto m = r.module();
    auto zero_m = homogeneous_ideal(r, zero_ideal(a), whole_module(m));
    auto two_m = homogeneous_ideal(r, gen(a, els({2})), whole_module(m));
    EXPECT_NE(std::find(ideals.begin(), ideals.end(), zero_m), ideals.end());
    EXPECT_NE(std::find(ideals.begin(), ideals.end(), two_m), ideals.end());
}

TEST(IdealTheory, EnumerateIdealsMatchesOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        auto expected = o.all_ideals();
        std::set<oracle::Set> got;
        for (const auto& i : enumerate_ideals(r)) got.insert(o.from_bits(i.members()));
        EXPECT_EQ(got, std::set<oracle::Set>(expected.begin(), expected.end())) << r.to_string();
    }
}

TEST(IdealTheory, EnumerateIdealsIntegersUnsupported) {
    EXPECT_THROW(enumerate_ideals(make_integer_ring()), Error);
}

TEST(IdealTheory, MinimalGeneratorsRegenerate) {
    for (const auto& r : catalog()) {
        for (const auto& i : enumerate_ideals(r)) EXPECT_EQ(gen(r, minimal_generators(i)), i);
    }
}

// =============================================================================
// Residuals and scaling
// =============================================================================

TEST(IdealTheory, Residual) {
    auto z12 = make_residue_ring(12);
    auto i = gen(z12, els({4}));
    EXPECT_EQ(residual(i, el({2})).elements(), els({0, 2, 4, 6, 8, 10}));
    EXPECT_EQ(residual(i, z12.one()), i);
    EXPECT_EQ(residual(i, z12.zero()), unit_ideal(z12));
}

TEST(IdealTheory, ScaledIdeal) {
    auto z12 = make_residue_ring(12);
    auto i = gen(z12, els({3}));
    EXPECT_EQ(scaled_ideal(z12.one(), i), i);
    EXPECT_TRUE(scaled_ideal(z12.zero(), i).is_zero());
    EXPECT_EQ(scaled_ideal(el({2}), i), gen(z12, els({6})));
}

// =============================================================================
// Multiplicative sets
// =============================================================================

TEST(IdealTheory, MultSetGenerated) {
    auto z12 = make_residue_ring(12);
    EXPECT_EQ(mset(z12, els({4})).elements(), els({1, 4}));
    EXPECT_EQ(mset(z12, {}).elements(), els({1}));
    try {
        mset(z12, els({6}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::invalid_multiplicative_set);
    }
}

TEST(IdealTheory, SaturationContainsUnits) {
    auto z12 = make_residue_ring(12);
    auto star = saturation(mset(z12, {}));
    for (const auto& u : units(z12)) EXPECT_TRUE(star.contains(u));
}

TEST(IdealTheory, SaturationMatchesOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        for (const auto& s : sets(r)) {
            auto star = saturation(s);
            EXPECT_EQ(o.from_bits(star.members()), o.saturation(o.from_bits(s.members())));
            EXPECT_TRUE(s.members().is_subset_of(star.members()));
            for (const auto& a : star.elements()) {
                for (const auto& b : star.elements()) EXPECT_TRUE(star.contains(r.mul(a, b)));
            }
        }
    }
}

TEST(IdealTheory, SaturationOfBaseStyleSet) {
    auto r = te(12, {4});
    auto s = mset(r, {el({4, 0})});
    auto star = saturation(s);
    auto base_star = saturation(mset(r.base(), els({4})));
    for (const auto& x : r.elements()) EXPECT_EQ(star.contains(x), base_star.contains(el({x.coords[0]})));
}

// =============================================================================
// Prime, maximal, S-prime, S-maximal
// =============================================================================

TEST(IdealTheory, PrimeAndMaximal) {
    auto z6 = make_residue_ring(6);
    auto i = gen(z6, els({2}));
    EXPECT_TRUE(is_prime(i));
    EXPECT_TRUE(is_maximal(i));
    EXPECT_FALSE(is_prime(zero_ideal(make_residue_ring(4))));
    auto r = te(4, {2});
    EXPECT_TRUE(is_maximal(homogeneous_ideal(r, gen(r.base(), els({2})), whole_module(r.module()))));
}

TEST(IdealTheory, PrimeMaximalMatchOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        for (const auto& i : enumerate_ideals(r)) {
            auto set = o.from_bits(i.members());
            EXPECT_EQ(is_prime(i), o.is_prime(set)) << r.to_string() << " " << i.to_string();
            EXPECT_EQ(is_maximal(i), o.is_maximal(set)) << r.to_string() << " " << i.to_string();
        }
    }
}

TEST(IdealTheory, SPrimeZ12) {
    auto z12 = make_residue_ring(12);
    auto s = mset(z12, els({4}));
    auto d = is_s_prime_definitional(zero_ideal(z12), s);
    EXPECT_TRUE(d.verdict);
    ASSERT_TRUE(d.witness.has_value());
    EXPECT_EQ(*d.witness, el({4}));
    auto r = is_s_prime_residual(zero_ideal(z12), s);
    EXPECT_TRUE(r.verdict);
    EXPECT_EQ(r.reason, CertificateReason::residual_prime);
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_EQ(*r.residual, gen(z12, els({3})));
}

TEST(IdealTheory, SPrimeDisjointnessFailure) {
    auto z12 = make_residue_ring(12);
    auto s = mset(z12, els({4}));
    auto i = gen(z12, els({2}));
    auto d = is_s_prime_definitional(i, s);
    EXPECT_FALSE(d.verdict);
    EXPECT_EQ(d.reason, CertificateReason::disjointness_failure);
    EXPECT_FALSE(is_s_prime_residual(unit_ideal(z12), s).verdict);
    EXPECT_FALSE(is_s_maximal_definitional(i, s).verdict);
}

TEST(IdealTheory, TrivialSetReducesToPrimeAndMaximal) {
    for (const auto& r : catalog()) {
        auto one = mset(r, {});
        for (const auto& i : enumerate_ideals(r)) {
            EXPECT_EQ(is_s_prime_definitional(i, one).verdict, is_prime(i));
            EXPECT_EQ(is_s_maximal_residual(i, one).verdict, is_maximal(i));
        }
    }
}

TEST(IdealTheory, SMaximalUnitsCase) {
    auto z6 = make_residue_ring(6);
    auto d = is_s_maximal_definitional(gen(z6, els({2})), mset(z6, {}));
    EXPECT_TRUE(d.verdict);
}

TEST(IdealTheory, SPrimeSMaximalMatchOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        for (const auto& s : sets(r)) {
            auto sset = o.from_bits(s.members());
            for (const auto& i : enumerate_ideals(r)) {
                auto iset = o.from_bits(i.members());
                bool p = o.s_prime(iset, sset);
                bool m = o.s_maximal(iset, sset);
                EXPECT_EQ(is_s_prime_definitional(i, s).verdict, p) << r.to_string() << " " << i.to_string();
                EXPECT_EQ(is_s_prime_residual(i, s).verdict, p) << r.to_string() << " " << i.to_string();
                EXPECT_EQ(is_s_maximal_definitional(i, s).verdict, m) << r.to_string() << " " << i.to_string();
                EXPECT_EQ(is_s_maximal_residual(i, s).verdict, m) << r.to_string() << " " << i.to_string();
            }
        }
    }
}

TEST(IdealTheory, ResidualCertificatesCheck) {
    for (const auto& r : catalog()) {
        for (const auto& s : sets(r)) {
            for (const auto& i : enumerate_ideals(r)) {
                auto c = is_s_prime_residual(i, s);
                if (!c.verdict) continue;
                ASSERT_TRUE(c.witness && c.residual);
                EXPECT_TRUE(s.contains(*c.witness));
                EXPECT_EQ(*c.residual, residual(i, *c.witness));
                EXPECT_TRUE(is_prime(*c.residual));
            }
        }
    }
}

// =============================================================================
// Spectra
// =============================================================================

TEST(IdealTheory, SpecWithTrivialSetIsSpec) {
    for (const auto& r : catalog()) {
        auto one = mset(r, {});
        for (const auto& p : spec_s(r, one)) EXPECT_TRUE(is_prime(p));
        auto ideals = enumerate_ideals(r);
        auto primes = std::count_if(ideals.begin(), ideals.end(), [](const Ideal& i) { return is_prime(i); });
        EXPECT_EQ(spec_s(r, one).size(), static_cast<std::size_t>(primes));
    }
}

TEST(IdealTheory, MaxSInsideSpecS) {
    for (const auto& r : catalog()) {
        for (const auto& s : sets(r)) {
            auto spec = spec_s(r, s);
            for (const auto& m : max_s(r, s)) EXPECT_NE(std::find(spec.begin(), spec.end(), m), spec.end());
        }
    }
}

TEST(IdealTheory, SpecZ12WithFour) {
    // Oracle-derived: with S = {1,4}, the S-prime ideals of Z/12 are
    // <0>, <6>, <3>, all of them S-maximal.
    auto z12 = make_residue_ring(12);
    auto s = mset(z12, els({4}));
    oracle::Ring o(z12);
    std::vector<Ideal> expected;
    for (const auto& i : enumerate_ideals(z12)) {
        if (o.s_prime(o.from_bits(i.members()), o.from_bits(s.members()))) expected.push_back(i);
    }
    EXPECT_EQ(spec_s(z12, s), expected);
    ASSERT_EQ(expected.size(), 3u);
    EXPECT_EQ(expected[0], zero_ideal(z12));
    EXPECT_EQ(expected[1], gen(z12, els({6})));
    EXPECT_EQ(expected[2], gen(z12, els({3})));
    EXPECT_EQ(max_s(z12, s), expected);
}

// =============================================================================
// Disjoint primes
// =============================================================================

TEST(IdealTheory, FindDisjointPrime) {
    auto z12 = make_residue_ring(12);
    auto s = mset(z12, els({4}));
    EXPECT_EQ(find_disjoint_prime(zero_ideal(z12), s), gen(z12, els({3})));
    auto p = gen(z12, els({3}));
    EXPECT_EQ(find_disjoint_prime(p, s), p);
    try {
        find_disjoint_prime(gen(z12, els({2})), s);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition_violated);
    }
}
