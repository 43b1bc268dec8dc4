#pragma once

#include <vector>

#include "resknap/core.hpp"

namespace resknap {

/// The reserved-densest set R_s: the densest reserved items of total size 1
/// or larger, trimmed so that removing the least dense entry would drop the
/// total below 1. Items trimmed out move to the evicted list; their
/// reservation cost is sunk but they stay available to the final packing.
///
/// Tie-break: among equal densities the item with the larger arrival index
/// counts as less dense and is evicted first.
class Pool {
public:
    /// Adds an item, then trims: while total - size(least dense) >= 1 the
    /// least dense entry is evicted, one item per iteration.
    void insert(const Item& item);

    /// Density of the least dense entry; 0 for an empty pool.
    Rat d_delta() const;

    const Rat& total_size() const { return total_size_; }

    /// Entries ordered by density descending, arrival ascending.
    const std::vector<Item>& entries() const { return entries_; }
    const std::vector<Item>& evicted() const { return evicted_; }

    bool empty() const { return entries_.empty(); }

private:
    std::vector<Item> entries_;
    std::vector<Item> evicted_;
    Rat total_size_ = Rat(0);
};

/// True if a is strictly denser than b under the pool ordering
/// (density desc, arrival asc).
bool denser(const Item& a, const Item& b);

}  // namespace resknap
