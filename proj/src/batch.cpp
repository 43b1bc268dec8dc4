#include "resknap/batch.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "resknap/bounds.hpp"
#include "resknap/solver.hpp"

namespace resknap {

namespace {

const mpz_class kDensityDenom("1000000000000");  // 1e12

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform in [0,1) from the top 53 bits; avoids std::uniform_real_distribution
// so the stream is pinned by this file alone.
double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct PerInstance {
    bool pass = true;
    Ratio strict = Ratio::finite(Rat(0));
};

bool worse(const Ratio& a, const Ratio& b) {  // a strictly worse than b
    if (a.infinite) return !b.infinite;
    if (b.infinite) return false;
    return a.value > b.value;
}

template <typename CheckFn>
BatchResult run_batch(const BatchConfig& batch, const Rat& alpha, const Rat& c,
                      bool parallel, CheckFn check) {
    std::vector<PerInstance> results(batch.count);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long long i = 0; i < static_cast<long long>(batch.count); ++i) {
        Instance instance = generate_instance(batch.seed, static_cast<std::size_t>(i),
                                              batch.n_max, alpha, c);
        results[static_cast<std::size_t>(i)] = check(instance);
    }

    BatchResult out;
    for (std::size_t i = 0; i < results.size(); ++i) {
        if (!results[i].pass) {
            if (out.violations++ == 0) {
                out.first_violation = i;
                out.counterexample = generate_instance(batch.seed, i, batch.n_max, alpha, c);
            }
        }
        if (worse(results[i].strict, out.worst_strict)) out.worst_strict = results[i].strict;
    }
    return out;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, std::size_t index, std::size_t n_max,
                           const Rat& alpha, const Rat& c) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(index)));
    std::size_t n = 1 + static_cast<std::size_t>(rng() % n_max);

    double lo = std::log(to_double(alpha) / 4.0);
    double hi = std::log(8.0 * to_double(c) * to_double(alpha));

    Instance instance;
    instance.items.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned long k = 1 + static_cast<unsigned long>(rng() % 65536);
        Rat size(k, 65536ul);
        size.canonicalize();
        Rat dens = rat_from_double_floor(std::exp(lo + unit_double(rng) * (hi - lo)));
        if (dens <= 0) dens = Rat(1, kDensityDenom);
        instance.items.push_back(Item{size, Rat(size * dens), i});
    }
    return instance;
}

BatchResult check_value_batch(const BatchConfig& batch, const Rat& alpha, const Rat& c,
                              bool parallel) {
    double ub = ub_value(to_double(alpha), to_double(c));
    bool vacuous = std::isinf(ub);
    Rat bound = vacuous ? Rat(0) : rat_from_double_ceil(ub * (1.0 + 1e-9));

    PolicyConfig policy{Mode{CostKind::ValueProportional, alpha}, c, PolicyKind::Alg2};
    return run_batch(batch, alpha, c, parallel, [&](const Instance& instance) {
        Trace trace = run(policy, instance);
        Rat opt = optimal_value(instance.items, Rat(1));
        PerInstance r;
        r.strict = ratio(opt, trace.report.net_gain, Rat(0));
        r.pass = vacuous || opt <= bound * trace.report.net_gain;
        return r;
    });
}

BatchResult check_size_batch(const BatchConfig& batch, const Rat& alpha, const Rat& c,
                             const Rat& epsilon, const std::optional<Rat>& beta,
                             bool parallel) {
    PolicyConfig policy{Mode{CostKind::SizeProportional, alpha}, c, PolicyKind::Alg1};
    return run_batch(batch, alpha, c, parallel, [&](const Instance& instance) {
        Trace trace = run(policy, instance);
        Rat opt = optimal_value(instance.items, Rat(1));
        const InstrumentationLedger& ledger = trace.ledger;
        const Rat& net = trace.report.net_gain;

        Rat epochs_plus_one(ledger.epoch_count + 1);
        Rat half_sum = (ledger.v_c + (1 - ledger.s_c) * ledger.d_delta_final) / 2;
        Rat m = std::max(ledger.v_c, half_sum);
        bool ledger_ok = net >= m - 2 * alpha * epochs_plus_one;

        Rat slack = beta ? *beta : Rat(4 * c * alpha * epochs_plus_one + alpha);
        bool guarantee_ok = opt <= (2 + epsilon) * net + slack;

        PerInstance r;
        r.strict = ratio(opt, net, Rat(0));
        r.pass = ledger_ok && guarantee_ok;
        return r;
    });
}

}  // namespace resknap
