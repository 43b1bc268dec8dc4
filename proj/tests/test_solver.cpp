#include <doctest.h>

#include <random>

#include "resknap/solver.hpp"

using namespace resknap;

namespace {

Item make(const char* size, const char* value, std::size_t arrival) {
    return Item{rat_from_decimal(size), rat_from_decimal(value), arrival};
}

std::vector<Item> random_items(std::mt19937_64& rng, std::size_t n) {
    std::vector<Item> items;
    for (std::size_t i = 0; i < n; ++i) {
        Rat size(1 + rng() % 65536, 65536ul);
        Rat dens(1 + rng() % 64, 1 + rng() % 8);
        size.canonicalize();
        dens.canonicalize();
        items.push_back(Item{size, Rat(size * dens), i});
    }
    return items;
}

std::vector<std::size_t> arrivals(const Solution& s) {
    std::vector<std::size_t> a;
    for (const Item& item : s.chosen) a.push_back(item.arrival_index);
    return a;
}

}  // namespace

TEST_CASE("optimal packing examples") {
    std::vector<Item> items{make("0.6", "1.2", 0), make("0.5", "0.5", 1),
                            make("0.4", "1.2", 2)};
    Solution s = optimal_packing(items, Rat(1));
    CHECK(s.total_value == Rat(12, 5));
    CHECK(arrivals(s) == std::vector<std::size_t>{0, 2});

    CHECK(optimal_packing({}, Rat(1)).total_value == 0);

    std::vector<Item> single{make("1", "3", 0)};
    Solution s1 = optimal_packing(single, Rat(1));
    CHECK(s1.total_value == 3);
    CHECK(s1.total_size == 1);
}

TEST_CASE("bound keeps the fractional share of the first overflowing item") {
    // Regression: a truncated relaxation (stopping once no remaining item
    // fits whole) undercuts the true bound and once pruned away the optimum
    // {2, 3} in favor of {0, 1, 2}.
    std::vector<Item> items{
        Item{Rat(1025, 16384), Rat("1351554562507/81920000000000"), 0},
        Item{Rat(25047, 65536), Rat("2193035927346891/65536000000000000"), 1},
        Item{Rat(8349, 65536), Rat("2555457733085037/16384000000000000"), 2},
        Item{Rat(56249, 65536), Rat("449489356179799/6553600000000000"), 3},
    };
    Rat expected = items[2].value + items[3].value;
    CHECK(optimal_value(items, Rat(1)) == expected);
    Solution s = optimal_packing(items, Rat(1));
    CHECK(s.total_value == expected);
    CHECK(arrivals(s) == std::vector<std::size_t>{2, 3});
    CHECK(brute_force(items, Rat(1)).total_value == expected);
}

TEST_CASE("brute force examples") {
    std::vector<Item> items{make("0.6", "1.2", 0), make("0.5", "0.5", 1),
                            make("0.4", "1.2", 2)};
    CHECK(brute_force(items, Rat(1)).total_value == Rat(12, 5));

    std::vector<Item> thirds{make("0.5", "1", 0), make("0.5", "1", 1), make("0.5", "1", 2)};
    Solution s = brute_force(thirds, Rat(1));
    CHECK(s.total_value == 2);
    CHECK(arrivals(s) == std::vector<std::size_t>{0, 1});  // lex-smallest optimum

    std::vector<Item> singletons;
    for (std::size_t i = 0; i < 20; ++i)
        singletons.push_back(Item{Rat(1), Rat(i + 1), i});
    CHECK(brute_force(singletons, Rat(1)).total_value == 20);

    std::vector<Item> too_many(21, Item{Rat(1, 2), Rat(1), 0});
    CHECK_THROWS_AS(brute_force(too_many, Rat(1)), TooLarge);
}

TEST_CASE("branch and bound matches brute force") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Item> items = random_items(rng, 1 + rng() % 16);
        Solution fast = optimal_packing(items, Rat(1));
        Solution slow = brute_force(items, Rat(1));
        CHECK(fast.total_value == slow.total_value);
        CHECK(fast.total_size == slow.total_size);
        CHECK(arrivals(fast) == arrivals(slow));  // identical tie-break
        CHECK(optimal_value(items, Rat(1)) == slow.total_value);
    }
}

TEST_CASE("optimum is monotone and scales with values") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Item> items = random_items(rng, 1 + rng() % 12);
        Rat base = optimal_value(items, Rat(1));

        std::vector<Item> more = items;
        Rat extra_size(1 + rng() % 65536, 65536ul);
        Rat extra_value(1 + rng() % 9, 2);
        extra_size.canonicalize();
        extra_value.canonicalize();
        more.push_back(Item{extra_size, extra_value, more.size()});
        CHECK(optimal_value(more, Rat(1)) >= base);

        Rat lambda(3, 2);
        std::vector<Item> scaled = items;
        for (Item& item : scaled) item.value *= lambda;
        CHECK(optimal_value(scaled, Rat(1)) == base * lambda);
    }
}

TEST_CASE("oversized items are skipped") {
    std::vector<Item> items{make("0.9", "5", 0), make("0.3", "1", 1)};
    Solution s = optimal_packing(items, Rat(1, 2));
    CHECK(s.total_value == 1);
    CHECK(arrivals(s) == std::vector<std::size_t>{1});
    CHECK(optimal_packing(items, Rat(0)).total_value == 0);
}

TEST_CASE("tie-break picks the lexicographically smallest arrival set") {
    // {0,3} and {1,2} both reach value 2 at size 1; {0,3} wins.
    std::vector<Item> items{make("0.5", "1", 0), make("0.5", "1", 1), make("0.5", "1", 2),
                            make("0.5", "1", 3)};
    CHECK(arrivals(optimal_packing(items, Rat(1))) == std::vector<std::size_t>{0, 1});
    CHECK(arrivals(brute_force(items, Rat(1))) == std::vector<std::size_t>{0, 1});

    // a single large item ties two smaller ones; the pair starts at index 0
    std::vector<Item> mixed{make("0.4", "1", 0), make("1", "2", 1), make("0.6", "1", 2)};
    CHECK(arrivals(optimal_packing(mixed, Rat(1))) == std::vector<std::size_t>{0, 2});
    CHECK(arrivals(brute_force(mixed, Rat(1))) == std::vector<std::size_t>{0, 2});
}
