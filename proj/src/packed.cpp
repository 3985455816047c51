#include "sprime/packed.hpp"

#include "sprime/error.hpp"

namespace sprime {

namespace {

ElementSet scaled(const RingDescriptor& ring, std::size_t s, const ElementSet& q) {
    ElementSet out(ring.cardinality());
    for_each_index(q, [&](std::size_t x) { out.set(ring.mul_index(s, x)); });
    return out;
}

// Shared precomputation: ideals, Spec_S, and which S-primes absorb some sQ.
struct Landscape {
    std::vector<Ideal> ideals;
    std::vector<Ideal> spec;
    std::vector<std::size_t> s_members;

    Landscape(const RingDescriptor& ring, const MultiplicativeSet& s)
        : ideals(enumerate_ideals(ring)), spec(spec_s(ring, s)), s_members(indices_of(s.members())) {
        if (!(ring == s.ring())) throw Error(ErrorKind::invalid_multiplicative_set, "S lives in another ring");
    }

    // ∃s ∈ S : sQ ⊆ P
    bool absorbs(const RingDescriptor& ring, const Ideal& q, const Ideal& p) const {
        for (auto s : s_members) {
            if (scaled(ring, s, q.members()).is_subset_of(p.members())) return true;
        }
        return false;
    }

    bool comaximal(const Ideal& q, const Ideal& p) const { return !ideal_sum(q, p).is_proper(); }
};

ElementSet union_of(const RingDescriptor& ring, const std::vector<Ideal>& family) {
    ElementSet out(ring.cardinality());
    for (const auto& p : family) out |= p.members();
    return out;
}

// Unions of every subfamily of `pool`, indexed by bitmask.
std::vector<ElementSet> subset_unions(const RingDescriptor& ring, const std::vector<Ideal>& pool,
                                      std::size_t max_family) {
    if (pool.size() > max_family) {
        throw Error(ErrorKind::cap_exceeded,
                    "exhaustive family search over " + std::to_string(pool.size()) + " S-prime ideals");
    }
    std::vector<ElementSet> unions(std::size_t{1} << pool.size(), ElementSet(ring.cardinality()));
    for (std::size_t mask = 1; mask < unions.size(); ++mask) {
        auto low = static_cast<std::size_t>(__builtin_ctzll(mask));
        unions[mask] = unions[mask & (mask - 1)] | pool[low].members();
    }
    return unions;
}

std::vector<Ideal> family_of(const std::vector<Ideal>& pool, std::size_t mask) {
    std::vector<Ideal> out;
    for (std::size_t k = 0; k < pool.size(); ++k) {
        if (mask >> k & 1) out.push_back(pool[k]);
    }
    return out;
}

}  // namespace

PackingDecision is_compactly_s_packed(const RingDescriptor& ring, const MultiplicativeSet& s) {
    Landscape land(ring, s);
    for (const auto& q : land.ideals) {
        std::vector<Ideal> bad;
        for (const auto& p : land.spec) {
            if (!land.absorbs(ring, q, p)) bad.push_back(p);
        }
        if (q.members().is_subset_of(union_of(ring, bad))) return {false, q, std::move(bad), std::nullopt};
    }
    return {};
}

PackingDecision is_coprimely_s_packed(const RingDescriptor& ring, const MultiplicativeSet& s) {
    Landscape land(ring, s);
    for (const auto& q : land.ideals) {
        std::vector<Ideal> family;
        for (const auto& p : land.spec) {
            if (land.comaximal(q, p)) family.push_back(p);
        }
        if (family.empty()) continue;
        auto cover = union_of(ring, family);
        for (auto sx : land.s_members) {
            if (scaled(ring, sx, q.members()).is_subset_of(cover)) {
                return {false, q, std::move(family), ring.element_at(sx)};
            }
        }
    }
    return {};
}

PackingDecision is_compactly_s_packed_exhaustive(const RingDescriptor& ring, const MultiplicativeSet& s,
                                                 std::size_t max_family) {
    Landscape land(ring, s);
    auto unions = subset_unions(ring, land.spec, max_family);
    for (const auto& q : land.ideals) {
        std::size_t absorbing = 0;
        for (std::size_t k = 0; k < land.spec.size(); ++k) {
            if (land.absorbs(ring, q, land.spec[k])) absorbing |= std::size_t{1} << k;
        }
        for (std::size_t mask = 1; mask < unions.size(); ++mask) {
            if ((mask & absorbing) == 0 && q.members().is_subset_of(unions[mask])) {
                return {false, q, family_of(land.spec, mask), std::nullopt};
            }
        }
    }
    return {};
}

PackingDecision is_coprimely_s_packed_exhaustive(const RingDescriptor& ring, const MultiplicativeSet& s,
                                                 std::size_t max_family) {
    Landscape land(ring, s);
    auto unions = subset_unions(ring, land.spec, max_family);
    for (const auto& q : land.ideals) {
        std::size_t comaximal = 0;
        for (std::size_t k = 0; k < land.spec.size(); ++k) {
            if (land.comaximal(q, land.spec[k])) comaximal |= std::size_t{1} << k;
        }
        std::vector<ElementSet> scaled_q;
        for (auto sx : land.s_members) scaled_q.push_back(scaled(ring, sx, q.members()));
        for (std::size_t mask = 1; mask < unions.size(); ++mask) {
            if ((mask & ~comaximal) != 0) continue;
            for (std::size_t k = 0; k < scaled_q.size(); ++k) {
                if (scaled_q[k].is_subset_of(unions[mask])) {
                    return {false, q, family_of(land.spec, mask), ring.element_at(land.s_members[k])};
                }
            }
        }
    }
    return {};
}

PmDecision is_s_pm(const RingDescriptor& ring, const MultiplicativeSet& s) {
    auto maxes = max_s(ring, s);
    for (const auto& p : spec_s(ring, s)) {
        std::size_t count = 0;
        for (const auto& m : maxes) {
            if (p.is_subset_of(m)) ++count;
        }
        if (count != 1) return {false, p, count, count == 0 ? "no-s-maximal" : "several-s-maximal"};
    }
    return {};
}

}  // namespace sprime
