#include "resknap/bounds.hpp"

#include <cmath>
#include <limits>

namespace resknap {

double ub_value(double alpha, double c) {
    double denom = 1.0 - alpha * (4.0 / (1.0 - 1.0 / c) - 2.0);
    if (denom <= 0.0) return std::numeric_limits<double>::infinity();
    return 2.0 * c / denom;
}

double c_star(double alpha) {
    return (2.0 * std::sqrt(2.0 * alpha * alpha + alpha) + 2.0 * alpha + 1.0) /
           (1.0 - 2.0 * alpha);
}

double ub_value_opt(double alpha) {
    double r = std::sqrt(alpha * (1.0 + 2.0 * alpha));
    double d = 1.0 - 2.0 * alpha;
    return 2.0 * (2.0 * alpha + r) * (1.0 + 2.0 * alpha + 2.0 * r) / (d * d * r);
}

double lb_value(double alpha) {
    double d = 1.0 - 2.0 * alpha;
    return 2.0 * (1.0 - alpha + std::sqrt((2.0 - 3.0 * alpha) * alpha)) / (d * d);
}

double f_star(double alpha) {
    return (1.0 - alpha + std::sqrt(alpha * (2.0 - 3.0 * alpha))) / (1.0 - 2.0 * alpha);
}

std::pair<double, double> size_bounds() { return {2.0, 2.0}; }

BoundPoint bound_point(double alpha) {
    return {alpha, lb_value(alpha), ub_value_opt(alpha), c_star(alpha), f_star(alpha)};
}

}  // namespace resknap
