#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "bc/error.hpp"

namespace bc {

// Subsets of a ground set of at most 32 elements, element i <-> bit i.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundSize = 32;
inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kDefaultVerifyCap = 18;

constexpr Mask bit(int i) { return Mask{1} << i; }

constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (bit(n) - 1); }

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr bool is_subset(Mask a, Mask b) { return (a & ~b) == 0; }

constexpr bool contains(Mask m, int i) { return (m >> i) & 1U; }

// Highest set bit; -1 for the empty set.
constexpr int max_element(Mask m) { return m == 0 ? -1 : 31 - std::countl_zero(m); }

constexpr int min_element(Mask m) { return m == 0 ? -1 : std::countr_zero(m); }

constexpr int parity_sign(Mask m) { return (popcount(m) & 1) ? -1 : 1; }

inline std::vector<int> elements_of(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= bit(i);
    return m;
}

// Relabels a subset: element i of `m` becomes element perm[i].
inline Mask permute_mask(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    while (m) {
        int i = std::countr_zero(m);
        out |= bit(perm[i]);
        m &= m - 1;
    }
    return out;
}

inline void require_cap(int n, int cap, const std::string& what) {
    if (n > cap || n > kMaxGroundSize) {
        throw CapExceeded(what + ": size " + std::to_string(n) + " exceeds cap " +
                          std::to_string(cap < kMaxGroundSize ? cap : kMaxGroundSize));
    }
}

}  // namespace bc
