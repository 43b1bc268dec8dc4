#pragma once

#include <cstdint>
#include <optional>

#include "resknap/policies.hpp"

namespace resknap {

/// Seeded random-instance batches and the guarantee checks run over them.
/// Each instance is generated from its own RNG stream derived from
/// (seed, index), so results are identical whether the batch runs serially
/// or across OpenMP threads.

struct BatchConfig {
    std::uint64_t seed = 1;
    std::size_t count = 1000;
    std::size_t n_max = 50;
};

/// One random instance: n uniform in 1..n_max, sizes k/2^16 with k uniform
/// in 1..2^16, densities log-uniform in [alpha/4, 8*c*alpha] (rounded to Rat
/// at 1e-12), value = size * density. The density range straddles both the
/// low-density reject cutoff (alpha) and the reserve threshold region.
Instance generate_instance(std::uint64_t seed, std::size_t index, std::size_t n_max,
                           const Rat& alpha, const Rat& c);

struct BatchResult {
    std::size_t violations = 0;
    std::optional<std::size_t> first_violation;  // lowest violating index
    std::optional<Instance> counterexample;      // instance at that index
    Ratio worst_strict = Ratio::finite(Rat(0));  // max opt/net over the batch

    bool pass() const { return violations == 0; }
};

/// Runs the value-cost policy at threshold c over the batch and checks the
/// strict guarantee gain_OPT <= UB(alpha,c) * net_gain, with the float bound
/// inflated by 1e-9 relative and rounded up to an exact rational before the
/// comparison.
BatchResult check_value_batch(const BatchConfig& batch, const Rat& alpha, const Rat& c,
                              bool parallel);

/// Runs the size-cost policy and checks, per instance:
///  - the ledger inequality
///      net_gain >= max{v_c, (v_c+(1-s_c)*d_delta)/2} - 2*alpha*(k+1)
///    with k the ledger epoch count;
///  - the non-strict guarantee gain_OPT <= (2+epsilon)*net_gain + beta.
/// beta = nullopt derives the additive slack from the ledger as
/// 4*c*alpha*(k+1) + alpha, which the ledger inequality makes sufficient
/// whenever 2+epsilon >= 2c.
BatchResult check_size_batch(const BatchConfig& batch, const Rat& alpha, const Rat& c,
                             const Rat& epsilon, const std::optional<Rat>& beta,
                             bool parallel);

}  // namespace resknap
