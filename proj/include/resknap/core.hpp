#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

#include "resknap/rat.hpp"

namespace resknap {

/// An item x = (s, v): size as a fraction of the (unit) knapsack capacity,
/// value in abstract profit units. 0 < size <= 1, value >= 0.
struct Item {
    Rat size;
    Rat value;
    std::size_t arrival_index = 0;

    bool operator==(const Item& other) const {
        return size == other.size && value == other.value &&
               arrival_index == other.arrival_index;
    }
};

enum class CostKind { SizeProportional, ValueProportional };

/// Reservation-cost mode: a reserved item costs alpha times its size or its
/// value, paid whether or not the item ends up packed.
struct Mode {
    CostKind kind = CostKind::ValueProportional;
    Rat alpha;
};

struct Instance {
    std::vector<Item> items;  // arrival order, arrival_index = 0..n-1
};

struct GainReport {
    Rat packed_value;
    Rat reservation_cost;
    Rat net_gain;  // packed_value - reservation_cost
};

struct CapacityExceeded : std::runtime_error {
    CapacityExceeded() : std::runtime_error("packed size exceeds capacity") {}
};

struct ModeMismatch : std::runtime_error {
    explicit ModeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    std::size_t line;
    ParseError(std::size_t line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what),
          line(line_) {}
};

/// value / size. Size > 0 is an Item invariant.
Rat density(const Item& item);

Rat reservation_cost(const Item& item, const Mode& mode);

/// Gain accounting: every reserved item is charged exactly once, items packed
/// without reservation cost nothing. Throws CapacityExceeded if the packed
/// sizes sum past 1.
GainReport gain(std::span<const Item> packed, std::span<const Item> reserved,
                const Mode& mode);

/// A competitive ratio, possibly unbounded.
struct Ratio {
    bool infinite = false;
    Rat value;  // meaningful only when !infinite

    static Ratio inf() { return Ratio{true, Rat(0)}; }
    static Ratio finite(Rat v) { return Ratio{false, std::move(v)}; }
};

/// Least c with opt_gain <= c * alg_gain + beta. Returns 0 when opt <= beta,
/// infinite when alg_gain <= 0 and opt > beta.
Ratio ratio(const Rat& opt_gain, const Rat& alg_gain, const Rat& beta);

/// Parses the harness instance format: one "size,value" pair per line in
/// decimal notation, '#' comments and blank lines ignored. Rejects size <= 0,
/// size > 1, value < 0.
Instance parse_instance(std::istream& in);

}  // namespace resknap
