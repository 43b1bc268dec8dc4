#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "resknap/core.hpp"

using namespace resknap;

namespace {

Rat random_rat(std::mt19937_64& rng) {
    long num = static_cast<long>(rng() % 2001) - 1000;
    unsigned long den = 1 + rng() % 999;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(rat_from_decimal("0.25") == Rat(1, 4));
    CHECK(rat_from_decimal("3") == Rat(3));
    CHECK(rat_from_decimal("10.") == Rat(10));
    CHECK(rat_from_decimal("0.3333333333") == Rat(3333333333ul, 10000000000ul));
    CHECK(rat_from_decimal("-2.5") == Rat(-5, 2));
    CHECK(rat_from_decimal("1e6") == Rat(1000000));
    CHECK(rat_from_decimal("-2.5e-3") == Rat(-1, 400));
    CHECK(rat_from_decimal("1.25e2") == Rat(125));
    CHECK_THROWS_AS(rat_from_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_decimal("1.2.3"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_decimal("abc"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_decimal("1e"), std::invalid_argument);
}

TEST_CASE("rational arithmetic round-trips exactly") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rat a = random_rat(rng), b = random_rat(rng);
        CHECK(Rat((a + b) - b) == a);
        // ordering agrees with cross-multiplication (positive denominators)
        bool lt = a < b;
        CHECK(lt == (a.get_num() * b.get_den() < b.get_num() * a.get_den()));
    }
}

TEST_CASE("floor/ceil to fixed denominator") {
    mpz_class g("1000000000000");
    CHECK(rat_floor_to_denom(Rat(1, 3), g) == Rat(mpz_class("333333333333"), g));
    CHECK(rat_floor_to_denom(Rat(1, 2), g) == Rat(1, 2));
    CHECK(rat_from_double_floor(0.5) == Rat(1, 2));
    CHECK(rat_from_double_ceil(0.5) == Rat(1, 2));
    CHECK(rat_from_double_floor(1.0 / 3.0) <= Rat(1, 3));
    CHECK(rat_from_double_ceil(1.0 / 3.0) >= rat_from_double_floor(1.0 / 3.0));
    CHECK(Rat(rat_from_double_ceil(1.0 / 3.0) - rat_from_double_floor(1.0 / 3.0)) <=
          Rat(1, g));
}

TEST_CASE("density") {
    CHECK(density(Item{Rat(1, 2), Rat(1), 0}) == Rat(2));
    CHECK(density(Item{Rat(1), Rat(1), 0}) == Rat(1));
    CHECK(density(Item{Rat(3, 10), Rat(9, 10), 0}) == Rat(3));
}

TEST_CASE("reservation cost per mode") {
    Item item{Rat(1, 2), Rat(3), 0};
    CHECK(reservation_cost(item, Mode{CostKind::SizeProportional, Rat(1, 10)}) == Rat(1, 20));
    CHECK(reservation_cost(item, Mode{CostKind::ValueProportional, Rat(1, 10)}) == Rat(3, 10));
    CHECK(reservation_cost(item, Mode{CostKind::ValueProportional, Rat(0)}) == 0);
}

TEST_CASE("gain accounting") {
    Mode value_mode{CostKind::ValueProportional, Rat(1, 10)};
    std::vector<Item> packed{Item{Rat(1), Rat(1), 0}};
    std::vector<Item> reserved{Item{Rat(1), Rat(1), 0}};
    GainReport r = gain(packed, reserved, value_mode);
    CHECK(r.net_gain == Rat(9, 10));

    Mode size_mode{CostKind::SizeProportional, Rat(1, 5)};
    std::vector<Item> none;
    std::vector<Item> half{Item{Rat(1, 2), Rat(2), 0}};
    CHECK(gain(none, half, size_mode).net_gain == Rat(-1, 10));

    std::vector<Item> packed3{Item{Rat(4, 5), Rat(8, 5), 1}};
    std::vector<Item> reserved3{Item{Rat(7, 10), Rat(7, 10), 0}, Item{Rat(4, 5), Rat(8, 5), 1},
                                Item{Rat(2, 5), Rat(6, 5), 2}};
    GainReport r3 = gain(packed3, reserved3, value_mode);
    CHECK(r3.packed_value == Rat(8, 5));
    CHECK(r3.reservation_cost == Rat(7, 20));
    CHECK(r3.net_gain == Rat(5, 4));

    std::vector<Item> overfull{Item{Rat(3, 4), Rat(1), 0}, Item{Rat(1, 2), Rat(1), 1}};
    CHECK_THROWS_AS(gain(overfull, none, value_mode), CapacityExceeded);
}

TEST_CASE("zero alpha makes net gain equal packed value") {
    Mode mode{CostKind::ValueProportional, Rat(0)};
    std::vector<Item> packed{Item{Rat(1, 4), Rat(2), 0}, Item{Rat(1, 4), Rat(5), 1}};
    std::vector<Item> reserved{Item{Rat(1, 2), Rat(9), 2}};
    GainReport r = gain(packed, reserved, mode);
    CHECK(r.net_gain == r.packed_value);
}

TEST_CASE("competitive ratio") {
    Ratio r = ratio(Rat(4), Rat(2), Rat(0));
    CHECK_FALSE(r.infinite);
    CHECK(r.value == 2);
    CHECK(ratio(Rat(3), Rat(0), Rat(1)).infinite);
    CHECK(ratio(Rat(10), Rat(3), Rat(1)).value == 3);
    CHECK(ratio(Rat(1), Rat(5), Rat(2)).value == 0);  // opt below the slack
}

TEST_CASE("ratio monotonicity") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rat opt(static_cast<long>(rng() % 100), 1 + rng() % 10);
        Rat alg(static_cast<long>(rng() % 100) + 1, 1 + rng() % 10);
        Rat beta(static_cast<long>(rng() % 5), 1);
        Rat bump(static_cast<long>(rng() % 10) + 1, 1 + rng() % 10);

        Ratio base = ratio(opt, alg, beta);
        Ratio more_opt = ratio(Rat(opt + bump), alg, beta);
        Ratio more_alg = ratio(opt, Rat(alg + bump), beta);
        REQUIRE_FALSE(base.infinite);
        CHECK(more_opt.value >= base.value);
        CHECK(more_alg.value <= base.value);
    }
}

TEST_CASE("instance parsing") {
    std::istringstream ok("0.5,1.0\n1,3\n");
    Instance a = parse_instance(ok);
    REQUIRE(a.items.size() == 2);
    CHECK(a.items[0].size == Rat(1, 2));
    CHECK(a.items[0].value == Rat(1));
    CHECK(a.items[1].size == Rat(1));
    CHECK(a.items[1].value == Rat(3));
    CHECK(a.items[1].arrival_index == 1);

    std::istringstream empty("");
    CHECK(parse_instance(empty).items.empty());

    std::istringstream exact("0.1,0.3333333333\n");
    Instance e = parse_instance(exact);
    CHECK(e.items[0].value == Rat(3333333333ul, 10000000000ul));

    std::istringstream commented("# header\n\n  0.5, 2 # inline\n");
    CHECK(parse_instance(commented).items.size() == 1);

    std::istringstream oversize("0.5,1\n2,1\n");
    CHECK_THROWS_AS(parse_instance(oversize), ParseError);
    try {
        std::istringstream again("0.5,1\n2,1\n");
        parse_instance(again);
    } catch (const ParseError& err) {
        CHECK(err.line == 2);
    }

    std::istringstream zero_size("0,1\n");
    CHECK_THROWS_AS(parse_instance(zero_size), ParseError);
    std::istringstream neg_value("0.5,-1\n");
    CHECK_THROWS_AS(parse_instance(neg_value), ParseError);
    std::istringstream no_comma("0.5\n");
    CHECK_THROWS_AS(parse_instance(no_comma), ParseError);
}
