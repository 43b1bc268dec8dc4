#include "resknap/pool.hpp"

#include <algorithm>

namespace resknap {

bool denser(const Item& a, const Item& b) {
    // Cross-multiplied density comparison; sizes are positive.
    Rat lhs = a.value * b.size;
    Rat rhs = b.value * a.size;
    if (lhs != rhs) return lhs > rhs;
    return a.arrival_index < b.arrival_index;
}

void Pool::insert(const Item& item) {
    auto pos = std::upper_bound(entries_.begin(), entries_.end(), item,
                                [](const Item& a, const Item& b) { return denser(a, b); });
    entries_.insert(pos, item);
    total_size_ += item.size;
    // Trim loop: drop the least dense entry while the remainder still covers
    // a full knapsack.
    while (!entries_.empty() && total_size_ - entries_.back().size >= 1) {
        total_size_ -= entries_.back().size;
        evicted_.push_back(entries_.back());
        entries_.pop_back();
    }
}

Rat Pool::d_delta() const {
    if (entries_.empty()) return Rat(0);
    return density(entries_.back());
}

}  // namespace resknap
