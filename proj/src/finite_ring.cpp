#include "sprime/finite_ring.hpp"

#include "sprime/error.hpp"
#include "sprime/ideal_theory.hpp"
#include "ring_impl.hpp"

#include <numeric>
#include <optional>
#include <sstream>

namespace sprime {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_ring: return "invalid-ring";
        case ErrorKind::invalid_element: return "invalid-element";
        case ErrorKind::invalid_module: return "invalid-module";
        case ErrorKind::invalid_multiplicative_set: return "invalid-multiplicative-set";
        case ErrorKind::not_an_ideal: return "not-an-ideal";
        case ErrorKind::unsupported: return "unsupported";
        case ErrorKind::cap_exceeded: return "cap-exceeded";
        case ErrorKind::precondition_violated: return "precondition-violated";
        case ErrorKind::internal_error: return "internal-error";
        case ErrorKind::syntax_error: return "syntax-error";
        case ErrorKind::semantic_error: return "semantic-error";
    }
    return "error";
}

namespace detail {

Coord mod_floor(Coord a, Coord m) {
    Coord r = a % m;
    return r < 0 ? r + m : r;
}

Coord checked_mul(Coord a, Coord b) {
    Coord out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw Error(ErrorKind::unsupported, "integer overflow in Z arithmetic");
    }
    return out;
}

Coord checked_add(Coord a, Coord b) {
    Coord out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw Error(ErrorKind::unsupported, "integer overflow in Z arithmetic");
    }
    return out;
}

Coord mul_mod(Coord a, Coord b, Coord m) {
    auto p = static_cast<__int128>(mod_floor(a, m)) * static_cast<__int128>(mod_floor(b, m));
    return static_cast<Coord>(p % m);
}

}  // namespace detail

namespace {

// Rings up to this size get precomputed addition/multiplication tables.
constexpr std::size_t kTableLimit = 1024;

using RImpl = RingDescriptor::Impl;

void add_coords(const std::vector<Coord>& radices, std::span<const Coord> x, std::span<const Coord> y,
                std::span<Coord> out) {
    for (std::size_t k = 0; k < radices.size(); ++k) {
        out[k] = radices[k] == 0 ? detail::checked_add(x[k], y[k])
                                 : detail::mod_floor(x[k] + y[k], radices[k]);
    }
}

void mul_coords(const RImpl& r, std::span<const Coord> x, std::span<const Coord> y,
                std::span<Coord> out);

void mul_dispatch(const RingDescriptor& ring, std::span<const Coord> x, std::span<const Coord> y,
                  std::span<Coord> out);

void mul_coords(const RImpl& r, std::span<const Coord> x, std::span<const Coord> y,
                std::span<Coord> out) {
    switch (r.kind) {
        case RingKind::residue:
            out[0] = detail::mul_mod(x[0], y[0], r.n);
            return;
        case RingKind::integers:
            out[0] = detail::checked_mul(x[0], y[0]);
            return;
        case RingKind::product: {
            auto la = r.left->arity();
            mul_dispatch(*r.left, x.first(la), y.first(la), out.first(la));
            mul_dispatch(*r.right, x.subspan(la), y.subspan(la), out.subspan(la));
            return;
        }
        case RingKind::trivial_extension: {
            // (a,x)(b,y) = (ab, a·y + b·x); the base always has one coordinate.
            Coord a = x[0];
            Coord b = y[0];
            mul_dispatch(*r.left, x.first(1), y.first(1), out.first(1));
            auto factors = r.module->factors();
            for (std::size_t i = 0; i < factors.size(); ++i) {
                Coord d = factors[i];
                out[1 + i] = detail::mod_floor(detail::mul_mod(a, y[1 + i], d) + detail::mul_mod(b, x[1 + i], d), d);
            }
            return;
        }
    }
}

}  // namespace

struct RingBuilder {
    static void finalize(const std::shared_ptr<RImpl>& impl, std::size_t cap) {
        auto& r = *impl;
        r.finite = true;
        for (auto radix : r.radices) {
            if (radix == 0) r.finite = false;
        }
        if (!r.finite) return;
        std::size_t card = 1;
        for (auto radix : r.radices) {
            if (__builtin_mul_overflow(card, static_cast<std::size_t>(radix), &card) || card > cap) {
                throw Error(ErrorKind::cap_exceeded, "ring cardinality exceeds cap " + std::to_string(cap));
            }
        }
        r.cardinality = card;
        r.strides.assign(r.radices.size(), 1);
        for (std::size_t k = r.radices.size(); k-- > 1;) {
            r.strides[k - 1] = r.strides[k] * static_cast<std::size_t>(r.radices[k]);
        }
    }

    static void build_tables(const std::shared_ptr<RImpl>& impl) {
        auto& r = *impl;
        if (!r.finite) return;
        RingDescriptor view{impl};
        std::vector<Coord> one_coords = view.one().coords;
        r.one_index = view.index_of(RingElement{one_coords});
        if (r.cardinality > kTableLimit) return;
        auto n = r.cardinality;
        std::vector<std::vector<Coord>> elems(n);
        for (std::size_t i = 0; i < n; ++i) elems[i] = view.element_at(i).coords;
        r.add_table.resize(n * n);
        r.mul_table.resize(n * n);
        r.neg_table.resize(n);
        std::vector<Coord> out(r.radices.size());
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                add_coords(r.radices, elems[i], elems[j], out);
                auto s = static_cast<std::uint16_t>(view.index_of(RingElement{out}));
                r.add_table[i * n + j] = r.add_table[j * n + i] = s;
                mul_coords(r, elems[i], elems[j], out);
                auto p = static_cast<std::uint16_t>(view.index_of(RingElement{out}));
                r.mul_table[i * n + j] = r.mul_table[j * n + i] = p;
            }
            r.neg_table[i] = static_cast<std::uint16_t>(view.index_of(view.neg(RingElement{elems[i]})));
        }
    }

    static RingDescriptor residue(Coord n, std::size_t cap) {
        auto impl = std::make_shared<RImpl>();
        impl->kind = RingKind::residue;
        impl->n = n;
        impl->radices = {n};
        finalize(impl, cap);
        build_tables(impl);
        return RingDescriptor{impl};
    }

    static RingDescriptor integers() {
        auto impl = std::make_shared<RImpl>();
        impl->kind = RingKind::integers;
        impl->radices = {0};
        finalize(impl, 0);
        return RingDescriptor{impl};
    }

    static RingDescriptor product(const RingDescriptor& a, const RingDescriptor& b, std::size_t cap) {
        auto impl = std::make_shared<RImpl>();
        impl->kind = RingKind::product;
        impl->left = a;
        impl->right = b;
        impl->radices.assign(a.radices().begin(), a.radices().end());
        impl->radices.insert(impl->radices.end(), b.radices().begin(), b.radices().end());
        finalize(impl, cap);
        build_tables(impl);
        return RingDescriptor{impl};
    }

    static RingDescriptor trivial_extension(const RingDescriptor& base, const ModuleDescriptor& m,
                                            std::size_t cap) {
        auto impl = std::make_shared<RImpl>();
        impl->kind = RingKind::trivial_extension;
        impl->left = base;
        impl->module = m;
        impl->radices.assign(base.radices().begin(), base.radices().end());
        impl->radices.insert(impl->radices.end(), m.factors().begin(), m.factors().end());
        finalize(impl, cap);
        build_tables(impl);
        return RingDescriptor{impl};
    }

    static ModuleDescriptor module(const RingDescriptor& base, std::vector<Coord> factors) {
        auto impl = std::make_shared<ModuleDescriptor::Impl>();
        impl->base = base;
        impl->factors = std::move(factors);
        impl->strides.assign(impl->factors.size(), 1);
        for (std::size_t k = impl->factors.size(); k-- > 1;) {
            impl->strides[k - 1] = impl->strides[k] * static_cast<std::size_t>(impl->factors[k]);
        }
        for (auto d : impl->factors) {
            impl->cardinality *= static_cast<std::size_t>(d);
            impl->exponent = std::lcm(impl->exponent, d);
        }
        return ModuleDescriptor{impl};
    }
};

namespace {

void mul_dispatch(const RingDescriptor& ring, std::span<const Coord> x, std::span<const Coord> y,
                  std::span<Coord> out) {
    auto r = ring.mul(RingElement{{x.begin(), x.end()}}, RingElement{{y.begin(), y.end()}});
    std::copy(r.coords.begin(), r.coords.end(), out.begin());
}

}  // namespace

// --- RingDescriptor --------------------------------------------------------

RingKind RingDescriptor::kind() const { return impl_->kind; }
bool RingDescriptor::is_finite() const { return impl_->finite; }

void RingDescriptor::require_finite(const char* what) const {
    if (!impl_->finite) {
        throw Error(ErrorKind::unsupported, std::string(what) + " requires a finite ring, got " + to_string());
    }
}

std::size_t RingDescriptor::cardinality() const {
    require_finite("cardinality");
    return impl_->cardinality;
}

Coord RingDescriptor::modulus() const {
    if (impl_->kind != RingKind::residue) throw Error(ErrorKind::invalid_ring, "not a residue ring");
    return impl_->n;
}

const RingDescriptor& RingDescriptor::left() const {
    if (impl_->kind != RingKind::product) throw Error(ErrorKind::invalid_ring, "not a product ring");
    return *impl_->left;
}

const RingDescriptor& RingDescriptor::right() const {
    if (impl_->kind != RingKind::product) throw Error(ErrorKind::invalid_ring, "not a product ring");
    return *impl_->right;
}

const RingDescriptor& RingDescriptor::base() const {
    if (impl_->kind != RingKind::trivial_extension) throw Error(ErrorKind::invalid_ring, "not a trivial extension");
    return *impl_->left;
}

const ModuleDescriptor& RingDescriptor::module() const {
    if (impl_->kind != RingKind::trivial_extension) throw Error(ErrorKind::invalid_ring, "not a trivial extension");
    return *impl_->module;
}

std::size_t RingDescriptor::arity() const { return impl_->radices.size(); }
std::span<const Coord> RingDescriptor::radices() const { return impl_->radices; }

RingElement RingDescriptor::zero() const { return RingElement{std::vector<Coord>(arity(), 0)}; }

RingElement RingDescriptor::one() const {
    switch (impl_->kind) {
        case RingKind::residue:
        case RingKind::integers:
            return RingElement{{1}};
        case RingKind::product: {
            auto l = impl_->left->one().coords;
            auto r = impl_->right->one().coords;
            l.insert(l.end(), r.begin(), r.end());
            return RingElement{l};
        }
        case RingKind::trivial_extension: {
            auto out = impl_->left->one().coords;
            out.resize(arity(), 0);
            return RingElement{out};
        }
    }
    return zero();
}

void RingDescriptor::check(const RingElement& x) const {
    if (x.coords.size() != arity()) {
        throw Error(ErrorKind::invalid_element, "element has " + std::to_string(x.coords.size()) +
                                                    " coordinates, ring " + to_string() + " expects " +
                                                    std::to_string(arity()));
    }
    for (std::size_t k = 0; k < arity(); ++k) {
        auto radix = impl_->radices[k];
        if (radix != 0 && (x.coords[k] < 0 || x.coords[k] >= radix)) {
            throw Error(ErrorKind::invalid_element, "coordinate out of range for " + to_string());
        }
    }
}

bool RingDescriptor::contains(const RingElement& x) const {
    if (x.coords.size() != arity()) return false;
    for (std::size_t k = 0; k < arity(); ++k) {
        auto radix = impl_->radices[k];
        if (radix != 0 && (x.coords[k] < 0 || x.coords[k] >= radix)) return false;
    }
    return true;
}

RingElement RingDescriptor::normalize(std::vector<Coord> coords) const {
    if (coords.size() != arity()) {
        throw Error(ErrorKind::invalid_element, "element has " + std::to_string(coords.size()) +
                                                    " coordinates, ring " + to_string() + " expects " +
                                                    std::to_string(arity()));
    }
    for (std::size_t k = 0; k < arity(); ++k) {
        if (impl_->radices[k] != 0) coords[k] = detail::mod_floor(coords[k], impl_->radices[k]);
    }
    return RingElement{std::move(coords)};
}

RingElement RingDescriptor::add(const RingElement& x, const RingElement& y) const {
    check(x);
    check(y);
    RingElement out{std::vector<Coord>(arity())};
    add_coords(impl_->radices, x.coords, y.coords, out.coords);
    return out;
}

RingElement RingDescriptor::neg(const RingElement& x) const {
    check(x);
    RingElement out{x.coords};
    for (std::size_t k = 0; k < arity(); ++k) {
        auto radix = impl_->radices[k];
        out.coords[k] = radix == 0 ? detail::checked_mul(-1, x.coords[k]) : detail::mod_floor(-x.coords[k], radix);
    }
    return out;
}

RingElement RingDescriptor::sub(const RingElement& x, const RingElement& y) const { return add(x, neg(y)); }

RingElement RingDescriptor::mul(const RingElement& x, const RingElement& y) const {
    check(x);
    check(y);
    RingElement out{std::vector<Coord>(arity())};
    mul_coords(*impl_, x.coords, y.coords, out.coords);
    return out;
}

std::size_t RingDescriptor::index_of(const RingElement& x) const {
    require_finite("element indexing");
    check(x);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < arity(); ++k) idx += static_cast<std::size_t>(x.coords[k]) * impl_->strides[k];
    return idx;
}

RingElement RingDescriptor::element_at(std::size_t index) const {
    require_finite("element indexing");
    if (index >= impl_->cardinality) throw Error(ErrorKind::invalid_element, "element index out of range");
    RingElement out{std::vector<Coord>(arity())};
    for (std::size_t k = 0; k < arity(); ++k) {
        out.coords[k] = static_cast<Coord>(index / impl_->strides[k]);
        index %= impl_->strides[k];
    }
    return out;
}

std::size_t RingDescriptor::add_index(std::size_t i, std::size_t j) const {
    if (!impl_->add_table.empty()) return impl_->add_table[i * impl_->cardinality + j];
    return index_of(add(element_at(i), element_at(j)));
}

std::size_t RingDescriptor::mul_index(std::size_t i, std::size_t j) const {
    if (!impl_->mul_table.empty()) return impl_->mul_table[i * impl_->cardinality + j];
    return index_of(mul(element_at(i), element_at(j)));
}

std::size_t RingDescriptor::neg_index(std::size_t i) const {
    if (!impl_->neg_table.empty()) return impl_->neg_table[i];
    return index_of(neg(element_at(i)));
}

std::size_t RingDescriptor::one_index() const {
    require_finite("element indexing");
    return impl_->one_index;
}

std::vector<RingElement> RingDescriptor::elements() const {
    require_finite("enumerate_elements");
    std::vector<RingElement> out;
    out.reserve(impl_->cardinality);
    for (std::size_t i = 0; i < impl_->cardinality; ++i) out.push_back(element_at(i));
    return out;
}

std::string RingDescriptor::to_string() const {
    switch (impl_->kind) {
        case RingKind::residue: return "Z/" + std::to_string(impl_->n);
        case RingKind::integers: return "Z";
        case RingKind::product: {
            auto r = impl_->right->to_string();
            if (impl_->right->kind() == RingKind::product) r = "(" + r + ")";
            return impl_->left->to_string() + " x " + r;
        }
        case RingKind::trivial_extension:
            return "TE(" + impl_->left->to_string() + ", " + impl_->module->to_string() + ")";
    }
    return "?";
}

namespace {

std::string format_span(const RingDescriptor& ring, std::span<const Coord> c) {
    switch (ring.kind()) {
        case RingKind::residue:
        case RingKind::integers:
            return std::to_string(c[0]);
        case RingKind::product: {
            auto la = ring.left().arity();
            return "(" + format_span(ring.left(), c.first(la)) + "," + format_span(ring.right(), c.subspan(la)) + ")";
        }
        case RingKind::trivial_extension: {
            ModuleElement m{{c.begin() + 1, c.end()}};
            return "(" + std::to_string(c[0]) + "," + ring.module().format(m) + ")";
        }
    }
    return "?";
}

}  // namespace

std::string RingDescriptor::format(const RingElement& x) const {
    check(x);
    return format_span(*this, x.coords);
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.impl_ == b.impl_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
        case RingKind::residue: return a.modulus() == b.modulus();
        case RingKind::integers: return true;
        case RingKind::product: return a.left() == b.left() && a.right() == b.right();
        case RingKind::trivial_extension: return a.base() == b.base() && a.module() == b.module();
    }
    return false;
}

// --- ModuleDescriptor ------------------------------------------------------

const RingDescriptor& ModuleDescriptor::base() const { return *impl_->base; }
std::span<const Coord> ModuleDescriptor::factors() const { return impl_->factors; }
std::size_t ModuleDescriptor::cardinality() const { return impl_->cardinality; }
Coord ModuleDescriptor::exponent() const { return impl_->exponent; }

ModuleElement ModuleDescriptor::zero() const { return ModuleElement{std::vector<Coord>(impl_->factors.size(), 0)}; }

void ModuleDescriptor::check(const ModuleElement& x) const {
    if (x.coords.size() != impl_->factors.size()) {
        throw Error(ErrorKind::invalid_element, "module element has " + std::to_string(x.coords.size()) +
                                                    " coordinates, module " + to_string() + " expects " +
                                                    std::to_string(impl_->factors.size()));
    }
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        if (x.coords[k] < 0 || x.coords[k] >= impl_->factors[k]) {
            throw Error(ErrorKind::invalid_element, "module coordinate out of range for " + to_string());
        }
    }
}

ModuleElement ModuleDescriptor::normalize(std::vector<Coord> coords) const {
    if (coords.size() != impl_->factors.size()) {
        throw Error(ErrorKind::invalid_element, "module element has " + std::to_string(coords.size()) +
                                                    " coordinates, module " + to_string() + " expects " +
                                                    std::to_string(impl_->factors.size()));
    }
    for (std::size_t k = 0; k < coords.size(); ++k) coords[k] = detail::mod_floor(coords[k], impl_->factors[k]);
    return ModuleElement{std::move(coords)};
}

ModuleElement ModuleDescriptor::add(const ModuleElement& x, const ModuleElement& y) const {
    check(x);
    check(y);
    ModuleElement out{x.coords};
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
        out.coords[k] = detail::mod_floor(x.coords[k] + y.coords[k], impl_->factors[k]);
    }
    return out;
}

ModuleElement ModuleDescriptor::neg(const ModuleElement& x) const {
    check(x);
    ModuleElement out{x.coords};
    for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] = detail::mod_floor(-x.coords[k], impl_->factors[k]);
    return out;
}

ModuleElement ModuleDescriptor::scale(Coord a, const ModuleElement& x) const {
    check(x);
    ModuleElement out{x.coords};
    for (std::size_t k = 0; k < out.coords.size(); ++k) out.coords[k] = detail::mul_mod(a, x.coords[k], impl_->factors[k]);
    return out;
}

std::size_t ModuleDescriptor::index_of(const ModuleElement& x) const {
    check(x);
    std::size_t idx = 0;
    for (std::size_t k = 0; k < x.coords.size(); ++k) idx += static_cast<std::size_t>(x.coords[k]) * impl_->strides[k];
    return idx;
}

ModuleElement ModuleDescriptor::element_at(std::size_t index) const {
    if (index >= impl_->cardinality) throw Error(ErrorKind::invalid_element, "module index out of range");
    ModuleElement out{std::vector<Coord>(impl_->factors.size())};
    for (std::size_t k = 0; k < out.coords.size(); ++k) {
        out.coords[k] = static_cast<Coord>(index / impl_->strides[k]);
        index %= impl_->strides[k];
    }
    return out;
}

std::vector<ModuleElement> ModuleDescriptor::elements() const {
    std::vector<ModuleElement> out;
    out.reserve(impl_->cardinality);
    for (std::size_t i = 0; i < impl_->cardinality; ++i) out.push_back(element_at(i));
    return out;
}

std::string ModuleDescriptor::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < impl_->factors.size(); ++k) {
        if (k) out += " x ";
        out += "Z/" + std::to_string(impl_->factors[k]);
    }
    return out;
}

std::string ModuleDescriptor::format(const ModuleElement& x) const {
    check(x);
    if (x.coords.size() == 1) return std::to_string(x.coords[0]);
    std::string out = "(";
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(x.coords[k]);
    }
    return out + ")";
}

bool operator==(const ModuleDescriptor& a, const ModuleDescriptor& b) {
    if (a.impl_ == b.impl_) return true;
    return a.base() == b.base() &&
           std::equal(a.factors().begin(), a.factors().end(), b.factors().begin(), b.factors().end());
}

// --- factories -------------------------------------------------------------

RingDescriptor make_residue_ring(Coord n, std::size_t cap) {
    if (n < 2) throw Error(ErrorKind::invalid_ring, "Z/" + std::to_string(n) + " is not a ring with 1 != 0");
    return RingBuilder::residue(n, cap);
}

RingDescriptor make_product_ring(const RingDescriptor& r1, const RingDescriptor& r2, std::size_t cap) {
    if (!r1.is_finite() || !r2.is_finite()) {
        throw Error(ErrorKind::unsupported, "products are only defined for finite rings");
    }
    return RingBuilder::product(r1, r2, cap);
}

RingDescriptor make_integer_ring() { return RingBuilder::integers(); }

namespace detail {

RingDescriptor build_trivial_extension(const RingDescriptor& base, const ModuleDescriptor& module,
                                       std::size_t cap) {
    return RingBuilder::trivial_extension(base, module, cap);
}

ModuleDescriptor build_module(const RingDescriptor& base, std::vector<Coord> factors) {
    return RingBuilder::module(base, std::move(factors));
}

}  // namespace detail

std::vector<RingElement> units(const RingDescriptor& ring) {
    if (!ring.is_finite()) throw Error(ErrorKind::unsupported, "units requires a finite ring, got " + ring.to_string());
    std::vector<RingElement> out;
    auto n = ring.cardinality();
    auto one = ring.one_index();
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            if (ring.mul_index(x, y) == one) {
                out.push_back(ring.element_at(x));
                break;
            }
        }
    }
    return out;
}

Ideal nilradical(const RingDescriptor& ring) {
    if (!ring.is_finite()) {
        throw Error(ErrorKind::unsupported, "nilradical requires a finite ring, got " + ring.to_string());
    }
    auto n = ring.cardinality();
    std::vector<RingElement> nilpotents;
    for (std::size_t x = 0; x < n; ++x) {
        auto power = x;
        for (std::size_t k = 1; k <= n; ++k) {
            if (power == ring.zero_index()) {
                nilpotents.push_back(ring.element_at(x));
                break;
            }
            power = ring.mul_index(power, x);
        }
    }
    return ideal_generated(ring, nilpotents);
}

}  // namespace sprime
