#include "resknap/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>

#include "resknap/pool.hpp"

namespace resknap {

namespace {

// Items in density-descending (arrival-ascending on ties) order, shared by
// the value search and the tie-break reconstruction.
struct DensityOrder {
    std::vector<Item> items;

    explicit DensityOrder(std::span<const Item> source, const Rat& capacity) {
        items.reserve(source.size());
        for (const Item& item : source)
            if (item.size <= capacity) items.push_back(item);
        std::sort(items.begin(), items.end(),
                  [](const Item& a, const Item& b) { return denser(a, b); });
    }
};

// Value-only branch and bound over a subset of the density order given by
// index list `idx`. Include-first DFS with the fractional relaxation as
// bound and a smallest-remaining-size cutoff.
class ValueSearch {
public:
    ValueSearch(const DensityOrder& order, std::vector<std::uint32_t> idx)
        : order_(order), idx_(std::move(idx)) {
        suffix_min_.resize(idx_.size());
        Rat running;
        for (std::size_t i = idx_.size(); i-- > 0;) {
            const Rat& size = order_.items[idx_[i]].size;
            if (i + 1 == idx_.size() || size < running) running = size;
            suffix_min_[i] = running;
        }
    }

    // Maximum attainable value under cap. If `target` is set the search stops
    // as soon as the target is reached (result is then >= target).
    Rat solve(const Rat& cap, const std::optional<Rat>& target = std::nullopt) {
        best_ = 0;
        target_ = target;
        dfs(0, cap, Rat(0));
        return best_;
    }

private:
    bool satisfied() const { return target_ && best_ >= *target_; }

    // Fractional relaxation of the completion from position i: take whole
    // items in density order and a fractional share of the first item that
    // overflows. Valid upper bound for every integral completion.
    Rat fractional_bound(std::size_t i, Rat cap, Rat value) const {
        for (; i < idx_.size() && cap > 0; ++i) {
            const Item& item = order_.items[idx_[i]];
            if (item.size <= cap) {
                value += item.value;
                cap -= item.size;
            } else {
                value += item.value * cap / item.size;
                break;
            }
        }
        return value;
    }

    void dfs(std::size_t i, const Rat& cap, const Rat& value) {
        if (value > best_) best_ = value;
        for (; i < idx_.size(); ++i) {
            if (satisfied()) return;
            if (cap < suffix_min_[i]) return;
            const Item& item = order_.items[idx_[i]];
            if (item.size > cap) continue;
            if (fractional_bound(i, cap, value) <= best_) return;
            dfs(i + 1, Rat(cap - item.size), Rat(value + item.value));
        }
    }

    const DensityOrder& order_;
    std::vector<std::uint32_t> idx_;
    std::vector<Rat> suffix_min_;
    Rat best_;
    std::optional<Rat> target_;
};

std::vector<std::uint32_t> all_indices(const DensityOrder& order) {
    std::vector<std::uint32_t> idx(order.items.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<std::uint32_t>(i);
    return idx;
}

// Indices of items arriving strictly after `arrival`.
std::vector<std::uint32_t> indices_after(const DensityOrder& order, std::size_t arrival) {
    std::vector<std::uint32_t> idx;
    for (std::size_t i = 0; i < order.items.size(); ++i)
        if (order.items[i].arrival_index > arrival) idx.push_back(static_cast<std::uint32_t>(i));
    return idx;
}

Solution make_solution(std::vector<Item> chosen) {
    std::sort(chosen.begin(), chosen.end(), [](const Item& a, const Item& b) {
        return a.arrival_index < b.arrival_index;
    });
    Solution s;
    s.total_value = 0;
    s.total_size = 0;
    for (const Item& item : chosen) {
        s.total_value += item.value;
        s.total_size += item.size;
    }
    s.chosen = std::move(chosen);
    return s;
}

}  // namespace

Rat optimal_value(std::span<const Item> items, const Rat& capacity) {
    if (capacity <= 0) return Rat(0);
    DensityOrder order(items, capacity);
    ValueSearch search(order, all_indices(order));
    return search.solve(capacity);
}

Solution optimal_packing(std::span<const Item> items, const Rat& capacity) {
    if (capacity < 0) return make_solution({});
    DensityOrder order(items, capacity);
    ValueSearch search(order, all_indices(order));
    Rat opt = search.solve(capacity);

    // Reconstruct the lexicographically smallest arrival-index set attaining
    // the optimum: walk arrivals in ascending order and commit an item only
    // when the optimum stays reachable with it forced in. Once the committed
    // value equals the optimum, appending anything would only lengthen the
    // list, so stop.
    std::vector<Item> by_arrival(order.items);
    std::sort(by_arrival.begin(), by_arrival.end(),
              [](const Item& a, const Item& b) { return a.arrival_index < b.arrival_index; });

    std::vector<Item> chosen;
    Rat committed(0), cap_left(capacity);
    for (const Item& cand : by_arrival) {
        if (committed == opt) break;
        if (cand.size > cap_left) continue;
        Rat needed = opt - committed - cand.value;
        ValueSearch rest(order, indices_after(order, cand.arrival_index));
        Rat reachable = rest.solve(Rat(cap_left - cand.size),
                                   needed > 0 ? std::optional<Rat>(needed) : std::nullopt);
        if (committed + cand.value + reachable >= opt) {
            chosen.push_back(cand);
            committed += cand.value;
            cap_left -= cand.size;
        }
    }
    return make_solution(std::move(chosen));
}

Solution brute_force(std::span<const Item> items, const Rat& capacity) {
    if (items.size() > 20) throw TooLarge();
    const std::size_t n = items.size();

    auto arrivals_of = [&](std::uint32_t mask) {
        std::vector<std::size_t> a;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (1u << i)) a.push_back(items[i].arrival_index);
        std::sort(a.begin(), a.end());
        return a;
    };

    Rat best_value(0);
    std::uint32_t best_mask = 0;
    std::vector<std::size_t> best_arrivals;  // empty set: lex-smallest of all

    // Gray-code walk: one add or subtract per subset.
    Rat cur_size(0), cur_value(0);
    std::uint32_t prev_gray = 0;
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t i = 1; i < total; ++i) {
        std::uint32_t gray = static_cast<std::uint32_t>(i ^ (i >> 1));
        std::uint32_t flipped = gray ^ prev_gray;
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(flipped));
        if (gray & flipped) {
            cur_size += items[bit].size;
            cur_value += items[bit].value;
        } else {
            cur_size -= items[bit].size;
            cur_value -= items[bit].value;
        }
        prev_gray = gray;
        if (cur_size > capacity) continue;
        if (cur_value > best_value) {
            best_value = cur_value;
            best_mask = gray;
            best_arrivals = arrivals_of(gray);
        } else if (cur_value == best_value && gray != best_mask) {
            auto a = arrivals_of(gray);
            if (std::lexicographical_compare(a.begin(), a.end(), best_arrivals.begin(),
                                             best_arrivals.end())) {
                best_mask = gray;
                best_arrivals = std::move(a);
            }
        }
    }

    std::vector<Item> chosen;
    for (std::size_t i = 0; i < n; ++i)
        if (best_mask & (1u << i)) chosen.push_back(items[i]);
    return make_solution(std::move(chosen));
}

}  // namespace resknap
