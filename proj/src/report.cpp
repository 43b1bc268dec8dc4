#include "resknap/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include "resknap/bounds.hpp"

namespace resknap {

std::string format_sig(double x) {
    char buf[48];
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

void write_kv(std::ostream& out, std::string_view key, std::string_view value) {
    out << key << '=' << value << '\n';
}

void write_kv(std::ostream& out, std::string_view key, const Rat& value) {
    write_kv(out, key, std::string_view(rat_to_string(value)));
}

void write_kv(std::ostream& out, std::string_view key, const Ratio& value) {
    if (value.infinite)
        write_kv(out, key, std::string_view("Infinite"));
    else
        write_kv(out, key, value.value);
}

void write_kv(std::ostream& out, std::string_view key, std::size_t value) {
    out << key << '=' << value << '\n';
}

void write_kv_sig(std::ostream& out, std::string_view key, double value) {
    write_kv(out, key, std::string_view(format_sig(value)));
}

void bounds_curve_csv(std::ostream& out, const CurveGrid& grid) {
    out << "alpha,lb,ub_opt,c_star,f_star\n";
    // Integer stepping sidesteps float accumulation; the grid stays exact.
    long steps = std::lround((grid.stop - grid.start) / grid.step);
    for (long i = 0; i <= steps; ++i) {
        double alpha = grid.start + grid.step * static_cast<double>(i);
        BoundPoint p = bound_point(alpha);
        out << format_sig(p.alpha) << ',' << format_sig(p.lb) << ','
            << format_sig(p.ub_opt) << ',' << format_sig(p.c_star) << ','
            << format_sig(p.f_star) << '\n';
    }
}

}  // namespace resknap
