#include <doctest.h>

#include <sstream>
#include <vector>

#include "resknap/report.hpp"

using namespace resknap;

namespace {

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("12-significant-digit formatting") {
    CHECK(format_sig(0.25) == "0.25");
    CHECK(format_sig(1.0 / 3.0) == "0.333333333333");
    CHECK(format_sig(2.0) == "2");
    CHECK(format_sig(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("key=value lines") {
    std::ostringstream out;
    write_kv(out, "name", std::string_view("x"));
    write_kv(out, "rat", Rat(3, 4));
    write_kv(out, "whole", Rat(5));
    write_kv(out, "ratio", Ratio::inf());
    write_kv(out, "ratio2", Ratio::finite(Rat(7, 2)));
    write_kv(out, "count", std::size_t{42});
    write_kv_sig(out, "f", 0.1);
    CHECK(out.str() == "name=x\nrat=3/4\nwhole=5\nratio=Infinite\nratio2=7/2\ncount=42\nf=0.1\n");
}

TEST_CASE("bound curve CSV layout") {
    std::ostringstream out;
    bounds_curve_csv(out);
    std::vector<std::string> rows = lines(out.str());
    REQUIRE(rows.size() == 100);  // header + 99 grid points
    CHECK(rows[0] == "alpha,lb,ub_opt,c_star,f_star");
    CHECK(rows[1].substr(0, 6) == "0.005,");
    CHECK(rows[99].substr(0, 6) == "0.495,");

    // the alpha = 0.25 row carries the known closed-form values
    std::string quarter = rows[50];
    CHECK(quarter.substr(0, 5) == "0.25,");
    CHECK(quarter.find(",10.4721359") != std::string::npos);
    CHECK(quarter.find(",39.59") != std::string::npos);
    CHECK(quarter.find(",5.4494897") != std::string::npos);
    CHECK(quarter.find(",2.6180339") != std::string::npos);

    // near zero both curves sit just above 2
    double lb0 = std::stod(lines(out.str())[1].substr(6));
    CHECK(lb0 >= 2.0);
    CHECK(lb0 <= 2.7);

    // deterministic byte-for-byte
    std::ostringstream again;
    bounds_curve_csv(again);
    CHECK(again.str() == out.str());

    // the lower-bound column strictly increases with alpha
    double prev = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::size_t a = rows[i].find(',');
        std::size_t b = rows[i].find(',', a + 1);
        double lb = std::stod(rows[i].substr(a + 1, b - a - 1));
        CHECK(lb > prev);
        prev = lb;
    }
}
