#include "sprime/finite_module.hpp"

#include "sprime/error.hpp"
#include "sprime/ideal_theory.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sprime {

struct SubmoduleAccess {
    static Submodule make(const ModuleDescriptor& m, ElementSet members, std::vector<ModuleElement> gens) {
        return Submodule(m, std::move(members), std::move(gens));
    }
};

namespace {

// Submodules of ⊕ Z/d_i over Z or Z/nZ are exactly the additive subgroups,
// since every scalar acts as repeated addition.
void adjoin(const ModuleDescriptor& m, ElementSet& group, const ModuleElement& g) {
    if (group.test(m.index_of(g))) return;
    auto base = indices_of(group);
    std::vector<ModuleElement> base_elems;
    base_elems.reserve(base.size());
    for (auto i : base) base_elems.push_back(m.element_at(i));
    ElementSet grown = group;
    auto step = g;
    while (!group.test(m.index_of(step))) {
        for (const auto& h : base_elems) grown.set(m.index_of(m.add(h, step)));
        step = m.add(step, g);
    }
    group = std::move(grown);
}

ElementSet zero_set(const ModuleDescriptor& m) {
    ElementSet out(m.cardinality());
    out.set(m.index_of(m.zero()));
    return out;
}

ElementSet closure(const ModuleDescriptor& m, std::span<const ModuleElement> gens) {
    auto out = zero_set(m);
    for (const auto& g : gens) adjoin(m, out, g);
    return out;
}

std::vector<ModuleElement> greedy_generators(const ModuleDescriptor& m, const ElementSet& set) {
    std::vector<ModuleElement> gens;
    auto span = zero_set(m);
    for_each_index(set, [&](std::size_t i) {
        if (span.test(i)) return;
        auto x = m.element_at(i);
        adjoin(m, span, x);
        gens.push_back(std::move(x));
    });
    return gens;
}

std::vector<Coord> base_generators(const MultiplicativeSet& s) {
    const auto& ring = s.ring();
    if (ring.kind() != RingKind::residue) {
        throw Error(ErrorKind::unsupported, "scalar sets must live in a residue ring, got " + ring.to_string());
    }
    std::vector<Coord> out;
    for (const auto& g : s.generators()) out.push_back(g.coords[0]);
    return out;
}

void require_base(const ModuleDescriptor& module, const MultiplicativeSet& s) {
    if (!(module.base() == s.ring())) {
        throw Error(ErrorKind::invalid_module, "multiplicative set lives in " + s.ring().to_string() +
                                                   ", module base is " + module.base().to_string());
    }
}

}  // namespace

ModuleDescriptor make_module(const RingDescriptor& base, std::vector<Coord> factors) {
    if (base.kind() != RingKind::residue && base.kind() != RingKind::integers) {
        throw Error(ErrorKind::invalid_module, "module base must be Z or Z/n, got " + base.to_string());
    }
    if (factors.empty()) throw Error(ErrorKind::invalid_module, "module needs at least one cyclic factor");
    std::size_t card = 1;
    for (auto d : factors) {
        if (d < 1) throw Error(ErrorKind::invalid_module, "cyclic factor Z/" + std::to_string(d) + " is invalid");
        if (base.kind() == RingKind::residue && base.modulus() % d != 0) {
            throw Error(ErrorKind::invalid_module, "Z/" + std::to_string(d) + " is not a module over " +
                                                       base.to_string() + " (" + std::to_string(d) +
                                                       " does not divide " + std::to_string(base.modulus()) + ")");
        }
        if (__builtin_mul_overflow(card, static_cast<std::size_t>(d), &card) || card > kDefaultCardinalityCap) {
            throw Error(ErrorKind::cap_exceeded, "module cardinality exceeds cap");
        }
    }
    return detail::build_module(base, std::move(factors));
}

ModuleElement scalar_action(const ModuleDescriptor& module, Coord a, const ModuleElement& x) {
    return module.scale(a, x);
}

bool Submodule::contains(const ModuleElement& x) const { return members_.test(ambient_.index_of(x)); }

std::vector<ModuleElement> Submodule::elements() const {
    std::vector<ModuleElement> out;
    for_each_index(members_, [&](std::size_t i) { out.push_back(ambient_.element_at(i)); });
    return out;
}

std::string Submodule::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each_index(members_, [&](std::size_t i) {
        if (!first) out += ",";
        first = false;
        out += ambient_.format(ambient_.element_at(i));
    });
    return out + "}";
}

Submodule submodule_generated(const ModuleDescriptor& module, std::span<const ModuleElement> generators) {
    for (const auto& g : generators) module.check(g);
    return SubmoduleAccess::make(module, closure(module, generators), {generators.begin(), generators.end()});
}

Submodule submodule_from_members(const ModuleDescriptor& module, ElementSet members) {
    if (members.size() != module.cardinality()) throw Error(ErrorKind::invalid_module, "element set has wrong size");
    auto gens = greedy_generators(module, members);
    if (closure(module, gens) != members) {
        throw Error(ErrorKind::invalid_module, "element set is not a submodule of " + module.to_string());
    }
    return SubmoduleAccess::make(module, std::move(members), std::move(gens));
}

Submodule whole_module(const ModuleDescriptor& module) {
    ElementSet all(module.cardinality());
    all.set();
    return SubmoduleAccess::make(module, all, greedy_generators(module, all));
}

Submodule zero_submodule(const ModuleDescriptor& module) {
    return SubmoduleAccess::make(module, zero_set(module), {});
}

Submodule submodule_sum(const Submodule& a, const Submodule& b) {
    if (!(a.ambient() == b.ambient())) throw Error(ErrorKind::invalid_module, "submodules of different modules");
    auto set = a.members();
    for_each_index(b.members(), [&](std::size_t i) { adjoin(a.ambient(), set, a.ambient().element_at(i)); });
    auto gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return SubmoduleAccess::make(a.ambient(), std::move(set), std::move(gens));
}

std::vector<Submodule> enumerate_submodules(const ModuleDescriptor& module) {
    std::set<ElementSet> seen;
    std::deque<ElementSet> queue;
    auto zero = zero_set(module);
    seen.insert(zero);
    queue.push_back(zero);
    auto all = module.elements();
    while (!queue.empty()) {
        auto current = std::move(queue.front());
        queue.pop_front();
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (current.test(i)) continue;
            auto next = current;
            adjoin(module, next, all[i]);
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::vector<ElementSet> sorted(seen.begin(), seen.end());
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<Submodule> out;
    out.reserve(sorted.size());
    for (auto& set : sorted) {
        auto gens = greedy_generators(module, set);
        out.push_back(SubmoduleAccess::make(module, std::move(set), std::move(gens)));
    }
    return out;
}

Submodule scaled_submodule(Coord s, const Submodule& n) {
    const auto& m = n.ambient();
    ElementSet set(m.cardinality());
    for_each_index(n.members(), [&](std::size_t i) { set.set(m.index_of(m.scale(s, m.element_at(i)))); });
    std::vector<ModuleElement> gens;
    for (const auto& g : n.generators()) gens.push_back(m.scale(s, g));
    return SubmoduleAccess::make(m, std::move(set), std::move(gens));
}

// --- scalar sets -----------------------------------------------------------

std::string ScalarWitness::product(std::span<const Coord> generators) const {
    std::string out;
    for (std::size_t k = 0; k < exponents.size() && k < generators.size(); ++k) {
        if (exponents[k] == 0) continue;
        if (!out.empty()) out += "*";
        auto g = generators[k] < 0 ? "(" + std::to_string(generators[k]) + ")" : std::to_string(generators[k]);
        out += g;
        if (exponents[k] > 1) out += "^" + std::to_string(exponents[k]);
    }
    return out.empty() ? "1" : out;
}

std::vector<ScalarWitness> reachable_scalars(std::span<const Coord> generators, Coord modulus) {
    if (modulus < 1) throw Error(ErrorKind::precondition_violated, "scalar modulus must be >= 1");
    std::vector<ScalarWitness> order;
    std::map<Coord, std::size_t> seen;
    ScalarWitness start;
    start.residue = detail::mod_floor(1, modulus);
    start.exponents.assign(generators.size(), 0);
    start.value = 1;
    seen.emplace(start.residue, 0);
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            auto r = detail::mul_mod(order[head].residue, generators[k], modulus);
            if (seen.contains(r)) continue;
            ScalarWitness next = order[head];
            next.residue = r;
            next.exponents[k] += 1;
            Coord v = 0;
            if (next.value && !__builtin_mul_overflow(*next.value, generators[k], &v)) {
                next.value = v;
            } else {
                next.value.reset();
            }
            seen.emplace(r, order.size());
            order.push_back(std::move(next));
        }
    }
    return order;
}

Coord scalar_modulus(const ModuleDescriptor& module) {
    if (module.base().kind() == RingKind::residue) return module.base().modulus();
    return module.exponent();
}

TorsionDecision is_uniformly_s_torsion(const Submodule& n, std::span<const Coord> scalar_generators) {
    const auto& m = n.ambient();
    auto whole = whole_module(m);
    for (const auto& s : reachable_scalars(scalar_generators, scalar_modulus(m))) {
        if (scaled_submodule(s.residue, whole).is_subset_of(n)) return {true, s};
    }
    return {false, std::nullopt};
}

TorsionDecision is_uniformly_s_torsion(const Submodule& n, const MultiplicativeSet& base_set) {
    require_base(n.ambient(), base_set);
    auto gens = base_generators(base_set);
    return is_uniformly_s_torsion(n, gens);
}

TorsionDecision is_s_divisible(const ModuleDescriptor& module, std::span<const Coord> scalar_generators) {
    auto whole = whole_module(module);
    for (const auto& s : reachable_scalars(scalar_generators, scalar_modulus(module))) {
        if (!scaled_submodule(s.residue, whole).is_whole()) return {false, s};
    }
    return {true, std::nullopt};
}

TorsionDecision is_s_divisible(const ModuleDescriptor& module, const MultiplicativeSet& base_set) {
    require_base(module, base_set);
    auto gens = base_generators(base_set);
    return is_s_divisible(module, gens);
}

}  // namespace sprime
