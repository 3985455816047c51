#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sprime {

/// Subset of a finite ring or module, indexed by canonical element index.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

inline std::vector<std::size_t> indices_of(const ElementSet& set) {
    std::vector<std::size_t> out;
    out.reserve(set.count());
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
        out.push_back(i);
    }
    return out;
}

template <typename F>
void for_each_index(const ElementSet& set, F&& f) {
    for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
        std::invoke(f, i);
    }
}

/// Canonical order on sets: smaller first, then lexicographic on the sorted
/// index lists.
inline bool canonical_less(const ElementSet& a, const ElementSet& b) {
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb) return ca < cb;
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != ElementSet::npos && j != ElementSet::npos) {
        if (i != j) return i < j;
        i = a.find_next(i);
        j = b.find_next(j);
    }
    return false;
}

}  // namespace sprime
