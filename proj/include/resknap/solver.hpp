#pragma once

#include <span>
#include <vector>

#include "resknap/core.hpp"

namespace resknap {

struct Solution {
    std::vector<Item> chosen;  // sorted by arrival index
    Rat total_value;
    Rat total_size;
};

struct TooLarge : std::runtime_error {
    TooLarge() : std::runtime_error("brute force limited to 20 items") {}
};

/// Exact 0/1 knapsack optimum via branch and bound with the fractional
/// (density-sorted) relaxation as bound. Sizes and values are exact
/// rationals, so weight-indexed DP is not an option. Ties between optima are
/// broken toward the lexicographically smallest arrival-index set.
Solution optimal_packing(std::span<const Item> items, const Rat& capacity);

/// Optimal value only; skips the tie-break reconstruction. Used where only
/// the benchmark gain matters (adversary games, batch verification).
Rat optimal_value(std::span<const Item> items, const Rat& capacity);

/// Exhaustive 2^n oracle with the same tie-break. Throws TooLarge for n > 20.
Solution brute_force(std::span<const Item> items, const Rat& capacity);

}  // namespace resknap
