#pragma once

#include <utility>

namespace resknap {

/// Closed-form competitive-ratio bounds for value-proportional reservation
/// costs, evaluated in double precision (the formulas carry square roots).
/// All take 0 < alpha < 1/2 unless noted; callers pass Infinity through.

/// Guarantee of the value-cost threshold policy at factor c > 1:
/// 2c / (1 - alpha*(4/(1-1/c) - 2)). Infinity when the denominator is <= 0.
double ub_value(double alpha, double c);

/// The c minimizing ub_value for a given alpha:
/// (2*sqrt(2*alpha^2+alpha) + 2*alpha + 1) / (1 - 2*alpha).
double c_star(double alpha);

/// ub_value at its minimizer, in closed form.
double ub_value_opt(double alpha);

/// General lower bound for value costs:
/// 2*(1 - alpha + sqrt((2-3*alpha)*alpha)) / (1-2*alpha)^2.
double lb_value(double alpha);

/// The adversary growth factor minimizing the forced ratio:
/// (1 - alpha + sqrt(2*alpha - 3*alpha^2)) / (1 - 2*alpha)
/// (sign-normalized to avoid cancellation near alpha -> 1/2).
double f_star(double alpha);

/// Size-proportional costs: matching (non-strict) bounds of 2 for any
/// alpha > 0.
std::pair<double, double> size_bounds();

struct BoundPoint {
    double alpha;
    double lb;
    double ub_opt;
    double c_star;
    double f_star;
};

BoundPoint bound_point(double alpha);

}  // namespace resknap
