#include "sprime/trivial_extension.hpp"

#include "sprime/error.hpp"

#include <algorithm>

namespace sprime {

namespace {

void require_finite_extension(const RingDescriptor& ring, const char* what) {
    if (ring.kind() != RingKind::trivial_extension) {
        throw Error(ErrorKind::precondition_violated, std::string(what) + " needs a trivial extension, got " +
                                                          ring.to_string());
    }
    if (!ring.is_finite()) {
        throw Error(ErrorKind::unsupported,
                    std::string(what) + " needs a finite ring; use the Z-layer for " + ring.to_string());
    }
}

RingElement lift(const MultiplicativeSet& s, Coord a) {
    for (const auto& x : s.elements()) {
        if (x.coords[0] == a) return x;
    }
    throw Error(ErrorKind::internal_error, "no element of S projects to " + std::to_string(a));
}

ComponentCertificate decide(const Ideal& j, const MultiplicativeSet& s, bool maximal) {
    const auto& ring = j.ring();
    require_finite_extension(ring, maximal ? "is_s_maximal_via_components" : "is_s_prime_via_components");
    if (!(ring == s.ring())) throw Error(ErrorKind::invalid_multiplicative_set, "S lives in another ring");

    auto parts = components(j);
    auto s0 = project_to_base(s);
    auto base = maximal ? is_s_maximal_residual(parts.j0, s0) : is_s_prime_residual(parts.j0, s0);
    auto torsion = is_uniformly_s_torsion(parts.j1, s0);

    SPrimalityCertificate result;
    if (!base.verdict) {
        result.reason = base.reason;
    } else if (!torsion.holds) {
        result.reason = CertificateReason::no_witness;
    } else {
        auto sigma = ring.mul(lift(s, base.witness->coords[0]), lift(s, torsion.witness->residue));
        auto w = ring.mul(sigma, sigma);
        result = {true, w, residual(j, w), CertificateReason::component_split};
    }
    return {std::move(result), std::move(base), std::move(torsion), std::move(parts)};
}

std::vector<Ideal> lift_homogeneous(const RingDescriptor& ring, const std::vector<Ideal>& base_ideals) {
    auto whole = whole_module(ring.module());
    std::vector<Ideal> out;
    for (const auto& p : base_ideals) out.push_back(homogeneous_ideal(ring, p, whole));
    std::sort(out.begin(), out.end(),
              [](const Ideal& a, const Ideal& b) { return canonical_less(a.members(), b.members()); });
    return out;
}

std::vector<Ideal> filter_extension(const RingDescriptor& ring, const MultiplicativeSet& s, bool maximal) {
    std::vector<Ideal> out;
    for (auto& j : enumerate_ideals(ring)) {
        if (decide(j, s, maximal).result.verdict) out.push_back(std::move(j));
    }
    return out;
}

}  // namespace

RingDescriptor make_trivial_extension(const RingDescriptor& base, const ModuleDescriptor& module, std::size_t cap) {
    if (base.kind() != RingKind::residue && base.kind() != RingKind::integers) {
        throw Error(ErrorKind::unsupported, "trivial extensions need base Z or Z/n, got " + base.to_string());
    }
    if (!(module.base() == base)) {
        throw Error(ErrorKind::invalid_module,
                    "module " + module.to_string() + " is over " + module.base().to_string() + ", not " +
                        base.to_string());
    }
    return detail::build_trivial_extension(base, module, cap);
}

RingElement te_element(const RingDescriptor& ring, Coord a, const ModuleElement& x) {
    std::vector<Coord> coords{a};
    coords.insert(coords.end(), x.coords.begin(), x.coords.end());
    return ring.normalize(std::move(coords));
}

Coord te_base_part(const RingElement& x) { return x.coords.at(0); }

ModuleElement te_module_part(const RingElement& x) { return ModuleElement{{x.coords.begin() + 1, x.coords.end()}}; }

Ideal proj_a(const Ideal& j) {
    const auto& ring = j.ring();
    require_finite_extension(ring, "proj_a");
    const auto& a = ring.base();
    ElementSet set(a.cardinality());
    for (const auto& x : j.elements()) set.set(a.index_of(RingElement{{te_base_part(x)}}));
    return Ideal::from_members(a, std::move(set));
}

Submodule proj_m(const Ideal& j) {
    const auto& ring = j.ring();
    require_finite_extension(ring, "proj_m");
    const auto& m = ring.module();
    ElementSet set(m.cardinality());
    for (const auto& x : j.elements()) set.set(m.index_of(te_module_part(x)));
    return submodule_from_members(m, std::move(set));
}

HomogeneousDecomposition components(const Ideal& j) {
    const auto& ring = j.ring();
    require_finite_extension(ring, "components");
    const auto& a = ring.base();
    const auto& m = ring.module();
    auto zero_m = m.zero();

    ElementSet j0(a.cardinality());
    for (std::size_t i = 0; i < a.cardinality(); ++i) {
        if (j.contains(te_element(ring, a.element_at(i).coords[0], zero_m))) j0.set(i);
    }
    ElementSet j1(m.cardinality());
    for (std::size_t i = 0; i < m.cardinality(); ++i) {
        if (j.contains(te_element(ring, 0, m.element_at(i)))) j1.set(i);
    }
    // J0 ⋉ J1 ⊆ J always, so equality is a cardinality check.
    bool homogeneous = j.size() == j0.count() * j1.count();
    return {Ideal::from_members(a, std::move(j0)), submodule_from_members(m, std::move(j1)), homogeneous};
}

Ideal homogeneous_ideal(const RingDescriptor& ring, const Ideal& i, const Submodule& n) {
    require_finite_extension(ring, "homogeneous_ideal");
    if (!(i.ring() == ring.base()) || !(n.ambient() == ring.module())) {
        throw Error(ErrorKind::invalid_element, "components do not match " + ring.to_string());
    }
    const auto& m = ring.module();
    auto module_elems = m.elements();
    for (const auto& a : i.elements()) {
        for (const auto& x : module_elems) {
            if (!n.contains(m.scale(a.coords[0], x))) {
                throw Error(ErrorKind::not_an_ideal, "IM is not contained in N for I = " + i.to_string() +
                                                         ", N = " + n.to_string());
            }
        }
    }
    ElementSet set(ring.cardinality());
    auto n_elems = n.elements();
    for (const auto& a : i.elements()) {
        for (const auto& x : n_elems) set.set(ring.index_of(te_element(ring, a.coords[0], x)));
    }
    return Ideal::from_members(ring, std::move(set));
}

MultiplicativeSet project_to_base(const MultiplicativeSet& s) {
    const auto& ring = s.ring();
    if (ring.kind() != RingKind::trivial_extension) {
        throw Error(ErrorKind::precondition_violated, "project_to_base needs a trivial extension");
    }
    std::vector<RingElement> gens;
    for (const auto& g : s.generators()) gens.push_back(RingElement{{te_base_part(g)}});
    return mult_set_generated(ring.base(), gens);
}

ComponentCertificate is_s_prime_via_components(const Ideal& j, const MultiplicativeSet& s) {
    return decide(j, s, false);
}

ComponentCertificate is_s_maximal_via_components(const Ideal& j, const MultiplicativeSet& s) {
    return decide(j, s, true);
}

std::vector<Ideal> spec_s_extension(const RingDescriptor& ring, const MultiplicativeSet& s, bool fast_path) {
    require_finite_extension(ring, "spec_s_extension");
    auto s0 = project_to_base(s);
    if (fast_path && is_s_divisible(ring.module(), s0).holds) return lift_homogeneous(ring, spec_s(ring.base(), s0));
    return filter_extension(ring, s, false);
}

std::vector<Ideal> max_s_extension(const RingDescriptor& ring, const MultiplicativeSet& s, bool fast_path) {
    require_finite_extension(ring, "max_s_extension");
    auto s0 = project_to_base(s);
    if (fast_path && is_s_divisible(ring.module(), s0).holds) return lift_homogeneous(ring, max_s(ring.base(), s0));
    return filter_extension(ring, s, true);
}

}  // namespace sprime
