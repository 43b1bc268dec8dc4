#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "resknap/core.hpp"

namespace resknap {

/// Plain-text output shared by the CLI and the tests: flat key=value report
/// lines (rationals as p/q) and the bound-curve CSV.

std::string format_sig(double x);  // 12 significant digits

void write_kv(std::ostream& out, std::string_view key, std::string_view value);
void write_kv(std::ostream& out, std::string_view key, const Rat& value);
void write_kv(std::ostream& out, std::string_view key, const Ratio& value);
void write_kv(std::ostream& out, std::string_view key, std::size_t value);
void write_kv_sig(std::ostream& out, std::string_view key, double value);

struct CurveGrid {
    double start = 0.005;
    double stop = 0.495;
    double step = 0.005;
};

/// CSV with header alpha,lb,ub_opt,c_star,f_star, one row per grid alpha,
/// 12 significant digits. Deterministic byte-for-byte for a fixed grid.
void bounds_curve_csv(std::ostream& out, const CurveGrid& grid = {});

}  // namespace resknap
