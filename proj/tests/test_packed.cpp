#include <gtest/gtest.h>

#include "oracle.hpp"
#include "sprime/error.hpp"
#include "sprime/finite_module.hpp"
#include "sprime/packed.hpp"
#include "sprime/trivial_extension.hpp"

using namespace sprime;

namespace {

RingElement el(std::vector<Coord> c) { return RingElement{std::move(c)}; }

RingDescriptor te(Coord n, std::vector<Coord> factors) {
    auto a = make_residue_ring(n);
    return make_trivial_extension(a, make_module(a, std::move(factors)));
}

MultiplicativeSet mset(const RingDescriptor& r, std::vector<RingElement> g) { return mult_set_generated(r, g); }

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

bool subset(const oracle::Set& a, const oracle::Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

oracle::Set scale(const oracle::Ring& o, std::size_t s, const oracle::Set& q) {
    oracle::Set out;
    for (auto x : q) out.insert(o.mul[s][x]);
    return out;
}

struct PackingOracle {
    bool compact = true;
    bool coprime = true;
};

// Every nonempty family Γ ⊆ Spec_S and every ideal Q, straight from the
// definitions.
PackingOracle packing_oracle(const oracle::Ring& o, const oracle::Set& s) {
    auto ideals = o.all_ideals();
    std::vector<oracle::Set> spec;
    for (const auto& p : ideals) {
        if (o.s_prime(p, s)) spec.push_back(p);
    }
    PackingOracle out;
    const std::size_t families = std::size_t{1} << spec.size();
    for (std::size_t mask = 1; mask < families; ++mask) {
        oracle::Set cover;
        std::vector<const oracle::Set*> fam;
        for (std::size_t k = 0; k < spec.size(); ++k) {
            if (mask >> k & 1) {
                fam.push_back(&spec[k]);
                cover.insert(spec[k].begin(), spec[k].end());
            }
        }
        for (const auto& q : ideals) {
            if (subset(q, cover)) {
                bool inside = false;
                for (auto w : s) {
                    for (auto p : fam) inside = inside || subset(scale(o, w, q), *p);
                }
                out.compact = out.compact && inside;
            }
            bool comaximal = true;
            for (auto p : fam) {
                oracle::Set sum(q.begin(), q.end());
                sum.insert(p->begin(), p->end());
                comaximal = comaximal && o.ideal(sum).count(o.one) > 0;
            }
            if (!comaximal) continue;
            for (auto w : s) out.coprime = out.coprime && !subset(scale(o, w, q), cover);
        }
    }
    return out;
}

std::vector<RingDescriptor> catalog() {
    return {make_residue_ring(5), make_residue_ring(6), make_residue_ring(8), make_residue_ring(12),
            make_product_ring(make_residue_ring(2), make_residue_ring(2)),
            make_product_ring(make_residue_ring(2), make_residue_ring(3)),
            te(4, {2}), te(6, {2}), te(6, {3})};
}

}  // namespace

// =============================================================================
// Compact and coprime packing
// =============================================================================

TEST(Packed, FieldIsPacked) {
    auto f = make_residue_ring(7);
    auto one = mset(f, {});
    EXPECT_TRUE(is_compactly_s_packed(f, one).holds);
    EXPECT_TRUE(is_coprimely_s_packed(f, one).holds);
}

TEST(Packed, Z6Compact) {
    auto r = make_residue_ring(6);
    EXPECT_TRUE(is_compactly_s_packed(r, mset(r, {})).holds);
}

TEST(Packed, Z12WithFourMatchesExhaustive) {
    auto r = make_residue_ring(12);
    auto s = mset(r, {el({4})});
    EXPECT_EQ(is_compactly_s_packed(r, s).holds, is_compactly_s_packed_exhaustive(r, s).holds);
    EXPECT_EQ(is_coprimely_s_packed(r, s).holds, is_coprimely_s_packed_exhaustive(r, s).holds);
}

TEST(Packed, ReductionsMatchDefinitionOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        for (const auto& s : sets(r)) {
            auto expected = packing_oracle(o, o.from_bits(s.members()));
            EXPECT_EQ(is_compactly_s_packed(r, s).holds, expected.compact) << r.to_string() << " " << s.to_string();
            EXPECT_EQ(is_coprimely_s_packed(r, s).holds, expected.coprime) << r.to_string() << " " << s.to_string();
            EXPECT_EQ(is_compactly_s_packed_exhaustive(r, s).holds, expected.compact);
            EXPECT_EQ(is_coprimely_s_packed_exhaustive(r, s).holds, expected.coprime);
        }
    }
}

TEST(Packed, CompactImpliesCoprime) {
    for (const auto& r : catalog()) {
        for (const auto& s : sets(r)) {
            if (is_compactly_s_packed(r, s).holds) EXPECT_TRUE(is_coprimely_s_packed(r, s).holds);
        }
    }
}

TEST(Packed, CounterexampleIsConsistent) {
    for (const auto& r : catalog()) {
        for (const auto& s : sets(r)) {
            auto d = is_compactly_s_packed(r, s);
            if (d.holds) continue;
            ASSERT_TRUE(d.q.has_value());
            ASSERT_FALSE(d.family.empty());
            for (const auto& p : d.family) {
                for (const auto& w : s.elements()) EXPECT_FALSE(scaled_ideal(w, *d.q).is_subset_of(p));
            }
        }
    }
}

TEST(Packed, ExhaustiveCap) {
    auto r = make_residue_ring(30);
    auto one = mset(r, {});
    try {
        is_compactly_s_packed_exhaustive(r, one, 2);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
    }
}

// =============================================================================
// S-pm
// =============================================================================

TEST(Packed, LocalRingIsPm) {
    auto r = make_residue_ring(8);
    EXPECT_TRUE(is_s_pm(r, mset(r, {})).holds);
}

TEST(Packed, Z6IsPm) {
    auto r = make_residue_ring(6);
    EXPECT_TRUE(is_s_pm(r, mset(r, {})).holds);
}

TEST(Packed, PmMatchesOracle) {
    for (const auto& r : catalog()) {
        oracle::Ring o(r);
        auto ideals = o.all_ideals();
        for (const auto& s : sets(r)) {
            auto sset = o.from_bits(s.members());
            bool expected = true;
            for (const auto& p : ideals) {
                if (!o.s_prime(p, sset)) continue;
                std::size_t above = 0;
                for (const auto& m : ideals) above += o.s_maximal(m, sset) && subset(p, m);
                expected = expected && above == 1;
            }
            auto d = is_s_pm(r, s);
            EXPECT_EQ(d.holds, expected) << r.to_string() << " " << s.to_string();
            if (!d.holds) {
                ASSERT_TRUE(d.violating.has_value());
                EXPECT_EQ(d.diagnostic, d.containing == 0 ? "no-s-maximal" : "several-s-maximal");
            }
        }
    }
}

TEST(Packed, Z6WithTwoHasSeveralSMaximal) {
    // S = {1,2,4}: <0> is S-maximal ((0:2) = <3>) and lies in <0> and <3>.
    auto r = make_residue_ring(6);
    auto d = is_s_pm(r, mset(r, {el({2})}));
    EXPECT_FALSE(d.holds);
    EXPECT_EQ(d.diagnostic, "several-s-maximal");
    EXPECT_EQ(d.containing, 2u);
}
