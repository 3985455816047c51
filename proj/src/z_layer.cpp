#include "sprime/z_layer.hpp"

#include "sprime/error.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace sprime {

namespace {

bool is_prime_number(Coord p) {
    if (p < 2) return false;
    for (Coord k = 2; k * k <= p; ++k) {
        if (p % k == 0) return false;
    }
    return true;
}

void require_z_module(const ModuleDescriptor& m) {
    if (m.base().kind() != RingKind::integers) {
        throw Error(ErrorKind::invalid_module, "Z-layer ideals need a module over Z, got one over " +
                                                   m.base().to_string());
    }
}

ModuleElement axpy(const ModuleDescriptor& m, const ModuleElement& y, Coord q, const ModuleElement& x) {
    return m.add(y, m.scale(q, x));
}

ZCertificate decide(const ZIdeal& ideal, const ZMultSet& s, bool maximal) {
    ZCertificate cert;
    if (ideal.d == 0) {
        // 0Z is prime; it is never maximal among disjoint ideals because
        // infinitely many primes avoid the finitely many generators.
        if (maximal) return cert;
        ScalarWitness one;
        one.exponents.assign(s.generators.size(), 0);
        one.value = 1;
        cert.verdict = true;
        cert.witness_product = one.product(s.generators);
        cert.witness = std::move(one);
        cert.residual = ideal;
        cert.reason = CertificateReason::residual_prime;
        return cert;
    }
    if (!z_is_disjoint(ideal, s)) {
        cert.reason = CertificateReason::disjointness_failure;
        return cert;
    }
    for (auto& w : reachable_scalars(s.generators, ideal.d)) {
        auto e = ideal.d / std::gcd(ideal.d, w.residue);
        if (!is_prime_number(e)) continue;
        if (maximal && std::any_of(s.generators.begin(), s.generators.end(), [&](Coord g) { return g % e == 0; })) {
            continue;
        }
        cert.verdict = true;
        cert.witness_product = w.product(s.generators);
        cert.witness = std::move(w);
        cert.residual = ZIdeal{e};
        cert.reason = maximal ? CertificateReason::residual_maximal_disjoint : CertificateReason::residual_prime;
        return cert;
    }
    return cert;
}

ZteCertificate decide_te(const ZteIdeal& j, std::span<const ZteGenerator> s, bool maximal) {
    auto s0 = project_generators(s);
    ZteCertificate cert;
    cert.base = maximal ? z_is_s_maximal(j.j0(), s0) : z_is_s_prime(j.j0(), s0);
    cert.torsion = is_uniformly_s_torsion(j.j1(), s0.generators);
    cert.verdict = cert.base.verdict && cert.torsion.holds;
    if (cert.verdict) {
        cert.reason = CertificateReason::component_split;
    } else {
        cert.reason = cert.base.verdict ? CertificateReason::no_witness : cert.base.reason;
    }
    return cert;
}

}  // namespace

ZIdeal make_z_ideal(Coord d) { return ZIdeal{d < 0 ? -d : d}; }

ZMultSet make_z_mult_set(std::vector<Coord> generators) {
    for (auto g : generators) {
        if (g == 0) throw Error(ErrorKind::invalid_multiplicative_set, "0 cannot generate a multiplicative set");
    }
    return ZMultSet{std::move(generators)};
}

std::vector<Coord> z_reachable_residues(const ZMultSet& s, Coord m) {
    std::vector<Coord> out;
    for (const auto& w : reachable_scalars(s.generators, m)) out.push_back(w.residue);
    std::sort(out.begin(), out.end());
    return out;
}

bool z_is_disjoint(const ZIdeal& ideal, const ZMultSet& s) {
    if (ideal.d == 0) return true;
    auto residues = z_reachable_residues(s, ideal.d);
    return residues.front() != 0;
}

ZIdeal z_residual(const ZIdeal& ideal, Coord s) {
    if (s == 0) return ZIdeal{1};
    if (ideal.d == 0) return ideal;
    return ZIdeal{ideal.d / std::gcd(ideal.d, std::abs(s))};
}

bool z_is_prime(const ZIdeal& ideal) { return ideal.d == 0 || is_prime_number(ideal.d); }

ZCertificate z_is_s_prime(const ZIdeal& ideal, const ZMultSet& s) { return decide(ideal, s, false); }

ZCertificate z_is_s_maximal(const ZIdeal& ideal, const ZMultSet& s) { return decide(ideal, s, true); }

// --- Z ⋉ M -----------------------------------------------------------------

std::string ZteIdeal::to_string() const {
    if (generators_.empty()) return "<0>";
    std::string out = "<";
    for (std::size_t k = 0; k < generators_.size(); ++k) {
        if (k) out += ",";
        out += "(" + std::to_string(generators_[k].a) + "," + module_.format(generators_[k].m) + ")";
    }
    return out + ">";
}

ZteIdeal zte_ideal(const ModuleDescriptor& module, std::vector<ZteGenerator> generators) {
    require_z_module(module);
    for (auto& gen : generators) gen.m = module.normalize(gen.m.coords);

    // Integer row reduction on the first coordinates.
    auto rows = generators;
    while (true) {
        std::size_t pivot = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].a == 0) continue;
            if (pivot == rows.size() || std::abs(rows[i].a) < std::abs(rows[pivot].a)) pivot = i;
        }
        if (pivot == rows.size()) break;
        bool reduced = false;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pivot || rows[i].a == 0) continue;
            Coord q = rows[i].a / rows[pivot].a;
            rows[i].a -= q * rows[pivot].a;
            rows[i].m = axpy(module, rows[i].m, -q, rows[pivot].m);
            reduced = true;
        }
        if (!reduced) break;
    }

    Coord g = 0;
    ModuleElement c = module.zero();
    std::vector<ModuleElement> span;
    for (auto& row : rows) {
        if (row.a != 0) {
            g = row.a;
            c = row.m;
        } else {
            span.push_back(row.m);
        }
    }
    if (g < 0) {
        g = -g;
        c = module.neg(c);
    }
    if (g == 0) {
        span.push_back(c);
    } else {
        // gM is spanned by g times the standard basis vectors.
        auto factors = module.factors();
        for (std::size_t k = 0; k < factors.size(); ++k) {
            std::vector<Coord> e(factors.size(), 0);
            e[k] = 1;
            span.push_back(module.scale(g, module.normalize(e)));
        }
    }
    auto j1 = submodule_generated(module, span);

    Coord j0 = 0;
    if (g != 0) {
        Coord order = 1;
        while (!j1.contains(module.scale(order, c))) ++order;
        j0 = detail::checked_mul(g, order);
    } else {
        c = module.zero();
    }
    return ZteIdeal(module, std::move(generators), ZIdeal{j0}, std::move(j1), g, std::move(c));
}

bool zte_membership(Coord a, const ModuleElement& x, const ZteIdeal& j) {
    const auto& m = j.module();
    auto xx = m.normalize(x.coords);
    if (j.g() == 0) return a == 0 && j.j1().contains(xx);
    if (a % j.g() != 0) return false;
    Coord k = a / j.g();
    return j.j1().contains(axpy(m, xx, -detail::mod_floor(k, m.exponent()), j.c()));
}

bool zte_is_subset(const ZteIdeal& a, const ZteIdeal& b) {
    if (!(a.module() == b.module())) return false;
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const ZteGenerator& g) { return zte_membership(g.a, g.m, b); });
}

bool zte_equal(const ZteIdeal& a, const ZteIdeal& b) { return zte_is_subset(a, b) && zte_is_subset(b, a); }

ZteIdeal zte_residual(const ZteIdeal& j, Coord s, const ModuleElement& t) {
    const auto& m = j.module();
    auto tt = m.normalize(t.coords);
    auto in_residual = [&](Coord a, const ModuleElement& x) {
        Coord sa = detail::checked_mul(s, a);
        return zte_membership(sa, m.add(m.scale(s, x), m.scale(a, tt)), j);
    };
    // The condition is periodic in a; period = g·exponent(M), or exponent(M)
    // when g = 0 and s = 0. With g = 0 and s != 0 only a = 0 qualifies.
    Coord period = 0;
    if (j.g() != 0) {
        period = detail::checked_mul(j.g(), m.exponent());
    } else if (s == 0) {
        period = m.exponent();
    }
    std::vector<ZteGenerator> gens;
    if (period != 0 && in_residual(period, m.zero())) gens.push_back({period, m.zero()});
    auto elems = m.elements();
    for (Coord a = 0; a < std::max<Coord>(period, 1); ++a) {
        for (const auto& x : elems) {
            if (in_residual(a, x)) gens.push_back({a, x});
        }
    }
    return zte_ideal(m, std::move(gens));
}

bool zte_is_homogeneous(const ZteIdeal& j) {
    const auto& m = j.module();
    return std::all_of(j.generators().begin(), j.generators().end(),
                       [&](const ZteGenerator& g) { return zte_membership(g.a, m.zero(), j); });
}

ZMultSet project_generators(std::span<const ZteGenerator> s) {
    std::vector<Coord> gens;
    for (const auto& g : s) {
        if (g.a == 0) {
            throw Error(ErrorKind::invalid_multiplicative_set,
                        "a generator (0, t) squares to zero and cannot lie in a multiplicative set");
        }
        gens.push_back(g.a);
    }
    return ZMultSet{std::move(gens)};
}

ZteCertificate zte_is_s_prime(const ZteIdeal& j, std::span<const ZteGenerator> s) { return decide_te(j, s, false); }

ZteCertificate zte_is_s_maximal(const ZteIdeal& j, std::span<const ZteGenerator> s) {
    return decide_te(j, s, true);
}

}  // namespace sprime
