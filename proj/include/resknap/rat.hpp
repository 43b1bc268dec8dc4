#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resknap {

/// Exact rational scalar. Always canonical: lowest terms, denominator > 0.
using Rat = mpq_class;

inline double to_double(const Rat& r) { return r.get_d(); }

/// Renders a rational as "p/q", or just "p" for integers.
inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

/// Parses a decimal string ("0.25", "3", "10.", "1e6", "-2.5e-3") into an
/// exact rational. No binary-float round trip. Throws std::invalid_argument
/// on malformed input.
Rat rat_from_decimal(std::string_view text);

/// Largest multiple of 1/scale_denom that is <= x.
Rat rat_floor_to_denom(const Rat& x, const mpz_class& scale_denom);

/// Converts a finite double to a rational rounded down at the given decimal
/// precision (default 1e-12). Rounding down is deliberate where the value
/// feeds a lower-bound construction.
Rat rat_from_double_floor(double x, int decimals = 12);

/// Smallest multiple of 1/10^decimals that is >= x.
Rat rat_from_double_ceil(double x, int decimals = 12);

}  // namespace resknap
