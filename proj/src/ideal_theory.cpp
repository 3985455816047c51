#include "sprime/ideal_theory.hpp"

#include "ring_impl.hpp"
#include "sprime/error.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace sprime {

struct IdealAccess {
    static Ideal make_ideal(const RingDescriptor& ring, ElementSet members, std::vector<RingElement> gens) {
        return Ideal(ring, std::move(members), std::move(gens));
    }
    static MultiplicativeSet make_set(const RingDescriptor& ring, ElementSet members,
                                      std::vector<RingElement> gens) {
        return MultiplicativeSet(ring, std::move(members), std::move(gens));
    }
};

namespace {

void require_finite(const RingDescriptor& ring, const char* what) {
    if (!ring.is_finite()) {
        throw Error(ErrorKind::unsupported, std::string(what) + " requires a finite ring, got " + ring.to_string());
    }
}

void require_same_ring(const RingDescriptor& a, const RingDescriptor& b) {
    if (!(a == b)) throw Error(ErrorKind::invalid_element, "operands live in different rings");
}

ElementSet empty_set(const RingDescriptor& ring) { return ElementSet(ring.cardinality()); }

ElementSet principal_set(const RingDescriptor& ring, std::size_t x) {
    auto n = ring.cardinality();
    ElementSet out(n);
    for (std::size_t r = 0; r < n; ++r) out.set(ring.mul_index(r, x));
    return out;
}

// Grow the additive subgroup `group` to contain g by adjoining the cosets
// group + k·g until k·g falls back into the group.
void adjoin_to_subgroup(const RingDescriptor& ring, ElementSet& group, std::size_t g) {
    if (group.test(g)) return;
    auto base = indices_of(group);
    ElementSet grown = group;
    auto step = g;
    while (!group.test(step)) {
        for (auto h : base) grown.set(ring.add_index(h, step));
        step = ring.add_index(step, g);
    }
    group = std::move(grown);
}

ElementSet sum_sets(const RingDescriptor& ring, ElementSet a, const ElementSet& b) {
    for_each_index(b, [&](std::size_t x) { adjoin_to_subgroup(ring, a, x); });
    return a;
}

ElementSet closure_of(const RingDescriptor& ring, std::span<const std::size_t> gens) {
    auto out = empty_set(ring);
    out.set(ring.zero_index());
    for (auto g : gens) {
        if (out.test(g)) continue;
        out = sum_sets(ring, std::move(out), principal_set(ring, g));
    }
    return out;
}

bool is_ideal_set(const RingDescriptor& ring, const ElementSet& set) {
    if (!set.test(ring.zero_index())) return false;
    auto members = indices_of(set);
    auto n = ring.cardinality();
    for (auto x : members) {
        for (auto y : members) {
            if (!set.test(ring.add_index(x, y))) return false;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (!set.test(ring.mul_index(r, x))) return false;
        }
    }
    return true;
}

// (I : x) as an element set.
ElementSet colon_set(const RingDescriptor& ring, const ElementSet& ideal, std::size_t x) {
    auto n = ring.cardinality();
    ElementSet out(n);
    for (std::size_t r = 0; r < n; ++r) {
        if (ideal.test(ring.mul_index(r, x))) out.set(r);
    }
    return out;
}

std::vector<std::size_t> element_indices(const RingDescriptor& ring, std::span<const RingElement> elems) {
    std::vector<std::size_t> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(ring.index_of(e));
    return out;
}

std::vector<RingElement> greedy_generators(const RingDescriptor& ring, const ElementSet& set) {
    std::vector<RingElement> gens;
    auto span = empty_set(ring);
    span.set(ring.zero_index());
    for_each_index(set, [&](std::size_t x) {
        if (span.test(x)) return;
        gens.push_back(ring.element_at(x));
        span = sum_sets(ring, std::move(span), principal_set(ring, x));
    });
    return gens;
}

bool prime_set(const RingDescriptor& ring, const ElementSet& set) {
    if (set.test(ring.one_index())) return false;
    auto n = ring.cardinality();
    for (std::size_t a = 0; a < n; ++a) {
        if (set.test(a)) continue;
        for (std::size_t b = a; b < n; ++b) {
            if (set.test(b)) continue;
            if (set.test(ring.mul_index(a, b))) return false;
        }
    }
    return true;
}

std::vector<Ideal> wrap_lattice(const RingDescriptor& ring, const std::vector<ElementSet>& sets,
                                bool with_generators) {
    std::vector<Ideal> out;
    out.reserve(sets.size());
    for (const auto& set : sets) {
        auto gens = with_generators ? greedy_generators(ring, set) : std::vector<RingElement>{};
        out.push_back(IdealAccess::make_ideal(ring, set, std::move(gens)));
    }
    return out;
}

}  // namespace

const std::vector<ElementSet>& RingDescriptor::ideal_lattice() const {
    require_finite("enumerate_ideals");
    std::call_once(impl_->lattice_once, [this] {
        const auto& ring = *this;
        auto n = ring.cardinality();
        // Distinct principal ideals; every ideal is a sum of these.
        std::set<ElementSet> principal;
        for (std::size_t x = 0; x < n; ++x) principal.insert(principal_set(ring, x));

        std::set<ElementSet> seen;
        std::deque<ElementSet> queue;
        auto zero = empty_set(ring);
        zero.set(ring.zero_index());
        seen.insert(zero);
        queue.push_back(zero);
        while (!queue.empty()) {
            auto current = std::move(queue.front());
            queue.pop_front();
            for (const auto& p : principal) {
                if (p.is_subset_of(current)) continue;
                auto next = sum_sets(ring, current, p);
                if (seen.insert(next).second) queue.push_back(std::move(next));
            }
        }
        std::vector<ElementSet> sorted(seen.begin(), seen.end());
        std::sort(sorted.begin(), sorted.end(), canonical_less);
        impl_->lattice = std::move(sorted);
    });
    return impl_->lattice;
}

std::string_view to_string(CertificateReason reason) {
    switch (reason) {
        case CertificateReason::disjointness_failure: return "disjointness-failure";
        case CertificateReason::no_witness: return "no-witness";
        case CertificateReason::residual_prime: return "residual-prime";
        case CertificateReason::residual_maximal_disjoint: return "residual-maximal-disjoint";
        case CertificateReason::component_split: return "component-split";
        case CertificateReason::definition_witness: return "definition-witness";
    }
    return "unknown";
}

// --- Ideal / MultiplicativeSet ---------------------------------------------

Ideal Ideal::from_members(const RingDescriptor& ring, ElementSet members) {
    require_finite(ring, "Ideal");
    if (members.size() != ring.cardinality() || !is_ideal_set(ring, members)) {
        throw Error(ErrorKind::not_an_ideal, "element set is not an ideal of " + ring.to_string());
    }
    auto gens = greedy_generators(ring, members);
    return Ideal(ring, std::move(members), std::move(gens));
}

bool Ideal::contains(const RingElement& x) const { return members_.test(ring_.index_of(x)); }

std::vector<RingElement> Ideal::elements() const {
    std::vector<RingElement> out;
    for_each_index(members_, [&](std::size_t i) { out.push_back(ring_.element_at(i)); });
    return out;
}

std::string Ideal::to_string() const {
    auto gens = greedy_generators(ring_, members_);
    if (gens.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t k = 0; k < gens.size(); ++k) {
        if (k) out += ",";
        out += ring_.format(gens[k]);
    }
    return out + ">";
}

bool MultiplicativeSet::contains(const RingElement& x) const {
    return ring_.contains(x) && members_.test(ring_.index_of(x));
}

std::vector<RingElement> MultiplicativeSet::elements() const {
    std::vector<RingElement> out;
    for_each_index(members_, [&](std::size_t i) { out.push_back(ring_.element_at(i)); });
    return out;
}

std::string MultiplicativeSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each_index(members_, [&](std::size_t i) {
        if (!first) out += ",";
        first = false;
        out += ring_.format(ring_.element_at(i));
    });
    return out + "}";
}

// --- constructions ---------------------------------------------------------

Ideal ideal_generated(const RingDescriptor& ring, std::span<const RingElement> generators) {
    require_finite(ring, "ideal_generated");
    auto idx = element_indices(ring, generators);
    auto members = closure_of(ring, idx);
    return IdealAccess::make_ideal(ring, std::move(members), {generators.begin(), generators.end()});
}

Ideal zero_ideal(const RingDescriptor& ring) { return ideal_generated(ring, {}); }

Ideal unit_ideal(const RingDescriptor& ring) {
    auto one = ring.one();
    return ideal_generated(ring, std::span<const RingElement>(&one, 1));
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a.ring(), b.ring());
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return IdealAccess::make_ideal(a.ring(), sum_sets(a.ring(), a.members(), b.members()), std::move(gens));
}

std::vector<RingElement> minimal_generators(const Ideal& ideal) {
    return greedy_generators(ideal.ring(), ideal.members());
}

std::vector<Ideal> enumerate_ideals(const RingDescriptor& ring) {
    require_finite(ring, "enumerate_ideals");
    return wrap_lattice(ring, ring.ideal_lattice(), true);
}

Ideal residual(const Ideal& ideal, const RingElement& x) {
    const auto& ring = ideal.ring();
    auto set = colon_set(ring, ideal.members(), ring.index_of(x));
    auto gens = greedy_generators(ring, set);
    return IdealAccess::make_ideal(ring, std::move(set), std::move(gens));
}

Ideal residual(const Ideal& ideal, const Ideal& by) {
    require_same_ring(ideal.ring(), by.ring());
    const auto& ring = ideal.ring();
    ElementSet set(ring.cardinality());
    set.set();
    for_each_index(by.members(), [&](std::size_t j) { set &= colon_set(ring, ideal.members(), j); });
    auto gens = greedy_generators(ring, set);
    return IdealAccess::make_ideal(ring, std::move(set), std::move(gens));
}

Ideal scaled_ideal(const RingElement& t, const Ideal& ideal) {
    const auto& ring = ideal.ring();
    auto ti = ring.index_of(t);
    auto set = empty_set(ring);
    for_each_index(ideal.members(), [&](std::size_t x) { set.set(ring.mul_index(ti, x)); });
    std::vector<RingElement> gens;
    for (const auto& g : ideal.generators()) gens.push_back(ring.mul(t, g));
    return IdealAccess::make_ideal(ring, std::move(set), std::move(gens));
}

MultiplicativeSet mult_set_generated(const RingDescriptor& ring, std::span<const RingElement> generators) {
    require_finite(ring, "mult_set_generated");
    auto idx = element_indices(ring, generators);
    auto members = empty_set(ring);
    std::deque<std::size_t> queue{ring.one_index()};
    members.set(ring.one_index());
    while (!queue.empty()) {
        auto x = queue.front();
        queue.pop_front();
        for (auto g : idx) {
            auto y = ring.mul_index(x, g);
            if (!members.test(y)) {
                members.set(y);
                queue.push_back(y);
            }
        }
    }
    if (members.test(ring.zero_index())) {
        throw Error(ErrorKind::invalid_multiplicative_set,
                    "multiplicative closure of the generators contains 0 in " + ring.to_string());
    }
    return IdealAccess::make_set(ring, std::move(members), {generators.begin(), generators.end()});
}

MultiplicativeSet saturation(const MultiplicativeSet& s) {
    const auto& ring = s.ring();
    auto n = ring.cardinality();
    auto members = empty_set(ring);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (s.contains_index(ring.mul_index(x, y))) {
                members.set(x);
                break;
            }
        }
    }
    std::vector<RingElement> gens;
    for_each_index(members, [&](std::size_t i) { gens.push_back(ring.element_at(i)); });
    return IdealAccess::make_set(ring, std::move(members), std::move(gens));
}

bool meets(const Ideal& ideal, const MultiplicativeSet& s) {
    require_same_ring(ideal.ring(), s.ring());
    return ideal.members().intersects(s.members());
}

// --- primality -------------------------------------------------------------

bool is_prime(const Ideal& ideal) { return prime_set(ideal.ring(), ideal.members()); }

bool is_maximal(const Ideal& ideal) {
    const auto& ring = ideal.ring();
    const auto& set = ideal.members();
    if (!ideal.is_proper()) return false;
    auto n = ring.cardinality();
    auto minus_one = ring.neg_index(ring.one_index());
    for (std::size_t x = 0; x < n; ++x) {
        if (set.test(x)) continue;
        bool invertible = false;
        for (std::size_t y = 0; y < n && !invertible; ++y) {
            invertible = set.test(ring.add_index(ring.mul_index(x, y), minus_one));
        }
        if (!invertible) return false;
    }
    return true;
}

SPrimalityCertificate is_s_prime_definitional(const Ideal& ideal, const MultiplicativeSet& s) {
    if (meets(ideal, s)) return {false, std::nullopt, std::nullopt, CertificateReason::disjointness_failure};
    const auto& ring = ideal.ring();
    const auto& set = ideal.members();
    auto n = ring.cardinality();
    // partners[a] = {b : ab ∈ I}
    std::vector<ElementSet> partners(n, ElementSet(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (set.test(ring.mul_index(a, b))) partners[a].set(b);
        }
    }
    std::optional<std::size_t> witness;
    for_each_index(s.members(), [&](std::size_t sx) {
        if (witness) return;
        // ab ∈ I ⇒ sa ∈ I or sb ∈ I, i.e. for every a with sa ∉ I each
        // partner b of a has sb ∈ I. The set {x : sx ∈ I} is partners[s].
        const auto& scaled_in = partners[sx];
        for (std::size_t a = 0; a < n; ++a) {
            if (scaled_in.test(a)) continue;
            if (!partners[a].is_subset_of(scaled_in)) return;
        }
        witness = sx;
    });
    if (!witness) return {false, std::nullopt, std::nullopt, CertificateReason::no_witness};
    auto w = ring.element_at(*witness);
    return {true, w, residual(ideal, w), CertificateReason::definition_witness};
}

SPrimalityCertificate is_s_prime_residual(const Ideal& ideal, const MultiplicativeSet& s) {
    if (meets(ideal, s)) return {false, std::nullopt, std::nullopt, CertificateReason::disjointness_failure};
    const auto& ring = ideal.ring();
    for (auto sx : indices_of(s.members())) {
        auto colon = colon_set(ring, ideal.members(), sx);
        if (prime_set(ring, colon)) {
            auto w = ring.element_at(sx);
            return {true, w, residual(ideal, w), CertificateReason::residual_prime};
        }
    }
    return {false, std::nullopt, std::nullopt, CertificateReason::no_witness};
}

SPrimalityCertificate is_s_maximal_definitional(const Ideal& ideal, const MultiplicativeSet& s) {
    if (meets(ideal, s)) return {false, std::nullopt, std::nullopt, CertificateReason::disjointness_failure};
    const auto& ring = ideal.ring();
    const auto& set = ideal.members();
    std::vector<const ElementSet*> above;
    for (const auto& q : ring.ideal_lattice()) {
        if (set.is_subset_of(q)) above.push_back(&q);
    }
    for (auto sx : indices_of(s.members())) {
        bool ok = std::all_of(above.begin(), above.end(), [&](const ElementSet* q) {
            if (q->intersects(s.members())) return true;
            for (auto x = q->find_first(); x != ElementSet::npos; x = q->find_next(x)) {
                if (!set.test(ring.mul_index(sx, x))) return false;
            }
            return true;
        });
        if (ok) {
            auto w = ring.element_at(sx);
            return {true, w, residual(ideal, w), CertificateReason::definition_witness};
        }
    }
    return {false, std::nullopt, std::nullopt, CertificateReason::no_witness};
}

SPrimalityCertificate is_s_maximal_residual(const Ideal& ideal, const MultiplicativeSet& s) {
    if (meets(ideal, s)) return {false, std::nullopt, std::nullopt, CertificateReason::disjointness_failure};
    const auto& ring = ideal.ring();
    const auto& lattice = ring.ideal_lattice();
    for (auto sx : indices_of(s.members())) {
        auto colon = colon_set(ring, ideal.members(), sx);
        bool maximal = std::none_of(lattice.begin(), lattice.end(), [&](const ElementSet& k) {
            return colon.is_proper_subset_of(k) && !k.intersects(s.members());
        });
        if (maximal) {
            auto w = ring.element_at(sx);
            return {true, w, residual(ideal, w), CertificateReason::residual_maximal_disjoint};
        }
    }
    return {false, std::nullopt, std::nullopt, CertificateReason::no_witness};
}

std::vector<Ideal> spec_s(const RingDescriptor& ring, const MultiplicativeSet& s) {
    require_same_ring(ring, s.ring());
    std::vector<Ideal> out;
    for (auto& ideal : wrap_lattice(ring, ring.ideal_lattice(), false)) {
        if (!is_s_prime_definitional(ideal, s).verdict) continue;
        out.push_back(IdealAccess::make_ideal(ring, ideal.members(), greedy_generators(ring, ideal.members())));
    }
    return out;
}

std::vector<Ideal> max_s(const RingDescriptor& ring, const MultiplicativeSet& s) {
    require_same_ring(ring, s.ring());
    std::vector<Ideal> out;
    for (auto& ideal : wrap_lattice(ring, ring.ideal_lattice(), false)) {
        if (!is_s_maximal_definitional(ideal, s).verdict) continue;
        out.push_back(IdealAccess::make_ideal(ring, ideal.members(), greedy_generators(ring, ideal.members())));
    }
    return out;
}

Ideal find_disjoint_prime(const Ideal& ideal, const MultiplicativeSet& s) {
    if (meets(ideal, s)) {
        throw Error(ErrorKind::precondition_violated, "ideal " + ideal.to_string() + " meets the multiplicative set");
    }
    const auto& ring = ideal.ring();
    for (const auto& k : ring.ideal_lattice()) {
        if (ideal.members().is_subset_of(k) && !k.intersects(s.members()) && prime_set(ring, k)) {
            return IdealAccess::make_ideal(ring, k, greedy_generators(ring, k));
        }
    }
    throw Error(ErrorKind::internal_error,
                "no prime ideal contains " + ideal.to_string() + " while avoiding the multiplicative set");
}

}  // namespace sprime
