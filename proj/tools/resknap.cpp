// Command-line harness: policy simulation, exact solving, adversary games,
// closed-form bound curves, randomized guarantee verification, alpha sweeps.
//
// Exit codes: 0 pass, 1 guarantee violation, 2 instance parse error,
// 3 configuration error, 4 I/O error.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "resknap/adversary.hpp"
#include "resknap/batch.hpp"
#include "resknap/bounds.hpp"
#include "resknap/report.hpp"
#include "resknap/solver.hpp"

namespace {

using namespace resknap;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rat parse_rat(const std::string& text, const char* what) {
    try {
        return rat_from_decimal(text);
    } catch (const std::invalid_argument&) {
        throw ConfigError(std::string("bad value for ") + what + ": " + text);
    }
}

CostKind parse_mode(const std::string& text) {
    if (text == "size") return CostKind::SizeProportional;
    if (text == "value") return CostKind::ValueProportional;
    throw ConfigError("unknown mode: " + text + " (size|value)");
}

PolicyKind parse_policy(const std::string& text) {
    if (text == "alg1") return PolicyKind::Alg1;
    if (text == "alg2") return PolicyKind::Alg2;
    if (text == "pack-first-fit") return PolicyKind::PackFirstFit;
    if (text == "reject-all") return PolicyKind::RejectAll;
    if (text == "reserve-all") return PolicyKind::ReserveAll;
    throw ConfigError("unknown policy: " + text);
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Pack: return "pack";
        case Decision::Reject: return "reject";
        case Decision::Reserve: return "reserve";
    }
    return "?";
}

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::RejectedEarly: return "rejected-early";
        case Termination::TookBait: return "took-bait";
        case Termination::ReservationBudgetExhausted: return "reservation-budget-exhausted";
        case Termination::ScheduleConverged: return "schedule-converged";
        case Termination::CopiesExhausted: return "copies-exhausted";
    }
    return "?";
}

double ratio_to_double(const Ratio& r) {
    return r.infinite ? std::numeric_limits<double>::infinity() : to_double(r.value);
}

Instance load_instance(const std::string& path) {
    if (path == "-") return parse_instance(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_instance(in);
}

template <typename Fn>
void with_output(const std::string& path, Fn fn) {
    if (path == "-") {
        fn(std::cout);
        std::cout.flush();
        return;
    }
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    fn(out);
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("RESKNAP_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') throw ConfigError("bad RESKNAP_SEED value");
        return v;
    }
    return flag_seed;
}

Rat positive_alpha(const std::string& text) {
    Rat alpha = parse_rat(text, "--alpha");
    if (alpha <= 0) throw ConfigError("alpha must be positive");
    return alpha;
}

// Default threshold factor: the ratio-minimizing c* in value mode, a fixed
// 1.1 in size mode (any c > 1 gives the factor-2 guarantee).
Rat default_c(CostKind kind, const Rat& alpha) {
    if (kind == CostKind::SizeProportional) return Rat(11, 10);
    Rat c = rat_from_double_floor(c_star(to_double(alpha)));
    return c < 1 ? Rat(1) : c;
}

void check_threshold(PolicyKind kind, const Rat& c) {
    if (kind == PolicyKind::Alg1 && c <= 1)
        throw ConfigError("size-cost policy needs c > 1");
    if (kind == PolicyKind::Alg2 && c < 1)
        throw ConfigError("value-cost policy needs c >= 1");
}

std::string index_list(const std::vector<Item>& items) {
    std::string out;
    for (const Item& item : items) {
        if (!out.empty()) out += ',';
        out += std::to_string(item.arrival_index);
    }
    return out;
}

void print_counterexample(std::ostream& out, const Instance& instance) {
    for (const Item& item : instance.items)
        write_kv(out, "counterexample_item_" + std::to_string(item.arrival_index),
                 rat_to_string(item.size) + "," + rat_to_string(item.value));
}

// ---- simulate ----

struct SimulateOpts {
    std::string mode = "value";
    std::string policy = "alg2";
    std::string alpha = "0.1";
    std::string c;  // empty: default per mode
    std::string beta = "0";
    std::string input = "-";
};

int cmd_simulate(const SimulateOpts& opt) {
    CostKind kind = parse_mode(opt.mode);
    Rat alpha = positive_alpha(opt.alpha);
    PolicyKind policy = parse_policy(opt.policy);
    Rat c = opt.c.empty() ? default_c(kind, alpha) : parse_rat(opt.c, "--c");
    check_threshold(policy, c);
    Rat beta = parse_rat(opt.beta, "--beta");

    Instance instance = load_instance(opt.input);
    PolicyConfig config{Mode{kind, alpha}, c, policy};
    Trace trace = run(config, instance);
    Rat opt_value = optimal_value(instance.items, Rat(1));

    std::ostream& out = std::cout;
    write_kv(out, "mode", opt.mode);
    write_kv(out, "policy", opt.policy);
    write_kv(out, "alpha", alpha);
    write_kv(out, "c", c);
    write_kv(out, "items", instance.items.size());
    std::string decisions;
    for (const auto& [item, d] : trace.decisions) {
        if (!decisions.empty()) decisions += ',';
        decisions += decision_name(d);
    }
    write_kv(out, "decisions", decisions);
    write_kv(out, "packed_online", index_list(trace.packed_online));
    write_kv(out, "final_packing", index_list(trace.final_packing));
    write_kv(out, "packed_value", trace.report.packed_value);
    write_kv(out, "reservation_cost", trace.report.reservation_cost);
    write_kv(out, "net_gain", trace.report.net_gain);
    write_kv(out, "opt", opt_value);
    write_kv(out, "strict_ratio", ratio(opt_value, trace.report.net_gain, Rat(0)));
    write_kv(out, "beta", beta);
    write_kv(out, "nonstrict_ratio", ratio(opt_value, trace.report.net_gain, beta));
    return 0;
}

// ---- solve ----

int cmd_solve(const std::string& input) {
    Instance instance = load_instance(input);
    Solution solution = optimal_packing(instance.items, Rat(1));
    write_kv(std::cout, "items", instance.items.size());
    write_kv(std::cout, "chosen", index_list(solution.chosen));
    write_kv(std::cout, "total_value", solution.total_value);
    write_kv(std::cout, "total_size", solution.total_size);
    return 0;
}

// ---- adversary ----

struct AdversaryOpts {
    std::string family = "value";
    std::string policy = "alg2";
    std::string alpha;  // empty: family default
    std::string c;
    std::string C = "1e6";
    std::string beta = "10";
    std::string epsilon = "0.01";
    std::size_t N = 50;
    std::string eps1;  // empty: 1/80000
    std::string eps2 = "0.05";
    std::size_t max_rounds = 1'000'000;
};

void print_game(const GameResult& game, const char* family, const std::string& policy) {
    std::ostream& out = std::cout;
    write_kv(out, "family", family);
    write_kv(out, "policy", policy);
    write_kv(out, "rounds", game.trace.decisions.size());
    write_kv(out, "termination", termination_name(game.termination));
    write_kv(out, "opt", game.opt_value);
    write_kv(out, "net_gain", game.trace.report.net_gain);
    write_kv(out, "forced_ratio", game.forced_ratio);
}

int cmd_adversary(const AdversaryOpts& opt) {
    PolicyKind policy = parse_policy(opt.policy);

    if (parse_mode(opt.family) == CostKind::SizeProportional) {
        Rat alpha = positive_alpha(opt.alpha.empty() ? "0.25" : opt.alpha);
        Rat c = opt.c.empty() ? Rat(11, 10) : parse_rat(opt.c, "--c");
        check_threshold(policy, c);
        SizeAdversaryConfig config{parse_rat(opt.epsilon, "--epsilon"),
                                   parse_rat(opt.C, "--C"), parse_rat(opt.beta, "--beta")};
        GameResult game =
            play(config, PolicyConfig{Mode{CostKind::SizeProportional, alpha}, c, policy});
        print_game(game, "size", opt.policy);
        return 0;
    }

    Rat alpha = positive_alpha(opt.alpha.empty() ? "0.1" : opt.alpha);
    if (alpha >= Rat(1, 2))
        throw ConfigError("value mode needs alpha < 1/2 (no policy is competitive beyond)");
    Rat c = opt.c.empty() ? default_c(CostKind::ValueProportional, alpha)
                          : parse_rat(opt.c, "--c");
    check_threshold(policy, c);
    ValueAdversaryConfig config =
        default_value_config(alpha, opt.N, parse_rat(opt.eps2, "--eps2"));
    if (!opt.eps1.empty()) config.eps1 = parse_rat(opt.eps1, "--eps1");
    config.max_rounds = opt.max_rounds;

    GameResult game =
        play(config, PolicyConfig{Mode{CostKind::ValueProportional, alpha}, c, policy});
    print_game(game, "value", opt.policy);

    // Finite-N analytic lower bound at the realized stopping round: the chain
    // stopped at the first non-reserve, where the factor was f_k; the bound is
    // (f_k+1) / (1 - a - a*(1/(1-1/f_k) - eps3)) with eps3 = eps2.
    std::size_t stop = 0;
    bool stopped = false;
    for (const auto& [item, decision] : game.trace.decisions) {
        if (decision != Decision::Reserve) {
            stopped = true;
            break;
        }
        ++stop;
    }
    if (stopped && stop >= config.N) {
        double f = to_double(factor_schedule(stop, config));
        double a = to_double(alpha);
        double denom = 1.0 - a - a * (1.0 / (1.0 - 1.0 / f) - to_double(config.eps2));
        double bound = denom > 0 ? (f + 1.0) / denom : std::numeric_limits<double>::infinity();
        write_kv_sig(std::cout, "stop_round", static_cast<double>(stop));
        write_kv_sig(std::cout, "stop_factor", f);
        write_kv_sig(std::cout, "analytic_lb", bound);
    }
    return 0;
}

// ---- verify ----

struct VerifyOpts {
    std::string mode = "value";
    std::string alpha = "0.1";
    std::string c;
    std::string epsilon = "0.5";
    std::string beta = "from-ledger";
    std::size_t n = 1000;
    std::size_t n_max = 50;
    std::uint64_t seed = 1;
    bool serial = false;
};

int report_batch(const BatchResult& result, const BatchConfig& batch, const Rat& alpha,
                 const Rat& c) {
    std::ostream& out = std::cout;
    write_kv(out, "instances", batch.count);
    write_kv(out, "violations", result.violations);
    write_kv(out, "worst_strict", result.worst_strict);
    write_kv(out, "result", result.pass() ? "pass" : "fail");
    if (!result.pass() && result.counterexample) {
        write_kv(out, "counterexample_index", *result.first_violation);
        print_counterexample(out, *result.counterexample);
        (void)alpha;
        (void)c;
        return 1;
    }
    return 0;
}

int cmd_verify(const VerifyOpts& opt) {
    CostKind kind = parse_mode(opt.mode);
    Rat alpha = positive_alpha(opt.alpha);
    Rat c = opt.c.empty() ? default_c(kind, alpha) : parse_rat(opt.c, "--c");
    BatchConfig batch{effective_seed(opt.seed), opt.n, opt.n_max};

    write_kv(std::cout, "mode", opt.mode);
    write_kv(std::cout, "alpha", alpha);
    write_kv(std::cout, "c", c);
    write_kv(std::cout, "seed", batch.seed);

    if (kind == CostKind::ValueProportional) {
        if (alpha >= Rat(1, 2))
            throw ConfigError("value mode needs alpha < 1/2 (no policy is competitive beyond)");
        check_threshold(PolicyKind::Alg2, c);
        BatchResult result = check_value_batch(batch, alpha, c, !opt.serial);
        return report_batch(result, batch, alpha, c);
    }

    check_threshold(PolicyKind::Alg1, c);
    Rat epsilon = parse_rat(opt.epsilon, "--epsilon");
    std::optional<Rat> beta;
    if (opt.beta != "from-ledger") beta = parse_rat(opt.beta, "--beta");
    // The ledger-derived slack 4c*alpha*(k+1)+alpha certifies the bound only
    // once (2+epsilon) covers the 2c blow-up of the pool argument.
    if (!beta && epsilon < 2 * (c - 1))
        throw ConfigError("from-ledger beta needs epsilon >= 2(c-1)");
    BatchResult result = check_size_batch(batch, alpha, c, epsilon, beta, !opt.serial);
    return report_batch(result, batch, alpha, c);
}

// ---- bounds-curve ----

int cmd_bounds_curve(const std::string& output) {
    with_output(output, [](std::ostream& out) { bounds_curve_csv(out); });
    return 0;
}

// ---- sweep ----

struct SweepOpts {
    double alpha_start = 0.05;
    double alpha_stop = 0.45;
    double alpha_step = 0.05;
    std::size_t n = 200;
    std::size_t n_max = 50;
    std::size_t N = 25;
    std::uint64_t seed = 1;
    std::string output = "-";
};

int cmd_sweep(const SweepOpts& opt) {
    if (opt.alpha_step <= 0 || opt.alpha_start <= 0 || opt.alpha_stop >= 0.5 ||
        opt.alpha_start > opt.alpha_stop)
        throw ConfigError("sweep grid must lie inside (0, 1/2)");
    std::uint64_t seed = effective_seed(opt.seed);

    std::size_t violations = 0;
    with_output(opt.output, [&](std::ostream& out) {
        out << "alpha,measured_worst,adversary_forced,lb,ub\n";
        long steps = std::lround((opt.alpha_stop - opt.alpha_start) / opt.alpha_step);
        for (long i = 0; i <= steps; ++i) {
            double alpha_d = opt.alpha_start + opt.alpha_step * static_cast<double>(i);
            Rat alpha = rat_from_double_floor(alpha_d);
            Rat c = default_c(CostKind::ValueProportional, alpha);

            BatchConfig batch{seed, opt.n, opt.n_max};
            BatchResult result = check_value_batch(batch, alpha, c, true);
            violations += result.violations;

            ValueAdversaryConfig adversary = default_value_config(alpha, opt.N, Rat(1, 20));
            GameResult game = play(
                adversary, PolicyConfig{Mode{CostKind::ValueProportional, alpha}, c,
                                        PolicyKind::Alg2});

            double forced = ratio_to_double(game.forced_ratio);
            double measured = std::max(ratio_to_double(result.worst_strict), forced);
            out << format_sig(alpha_d) << ',' << format_sig(measured) << ','
                << format_sig(forced) << ',' << format_sig(lb_value(alpha_d)) << ','
                << format_sig(ub_value_opt(alpha_d)) << '\n';
        }
    });
    return violations == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online knapsack with reservation: simulation and verification harness"};
    app.require_subcommand(1);

    SimulateOpts sim;
    CLI::App* simulate = app.add_subcommand("simulate", "run a policy over an instance file");
    simulate->add_option("--mode", sim.mode, "size|value");
    simulate->add_option("--policy", sim.policy,
                         "alg1|alg2|pack-first-fit|reject-all|reserve-all");
    simulate->add_option("--alpha", sim.alpha, "reservation cost rate");
    simulate->add_option("--c", sim.c, "reserve threshold factor (default c* or 1.1)");
    simulate->add_option("--beta", sim.beta, "additive slack for the non-strict ratio");
    simulate->add_option("--input", sim.input, "instance file, '-' for stdin");

    std::string solve_input = "-";
    CLI::App* solve = app.add_subcommand("solve", "exact offline optimum of an instance");
    solve->add_option("--input", solve_input, "instance file, '-' for stdin");

    AdversaryOpts adv;
    CLI::App* adversary = app.add_subcommand("adversary", "play an adaptive lower-bound game");
    adversary->add_option("--family", adv.family, "size|value");
    adversary->add_option("--policy", adv.policy, "policy under attack");
    adversary->add_option("--alpha", adv.alpha, "policy reservation rate");
    adversary->add_option("--c", adv.c, "policy threshold factor");
    adversary->add_option("--C", adv.C, "size game: item value scale");
    adversary->add_option("--beta", adv.beta, "size game: additive constant to defeat");
    adversary->add_option("--epsilon", adv.epsilon, "size game: first-item size excess");
    adversary->add_option("--N", adv.N, "value game: safe-stop horizon");
    adversary->add_option("--eps1", adv.eps1, "value game: per-round size decrement");
    adversary->add_option("--eps2", adv.eps2, "value game: schedule margin");
    adversary->add_option("--max-rounds", adv.max_rounds, "value game: hard round cap");

    std::string curve_output = "-";
    CLI::App* curve = app.add_subcommand("bounds-curve", "emit the bound curves as CSV");
    curve->add_option("--output", curve_output, "CSV path, '-' for stdout");

    VerifyOpts ver;
    CLI::App* verify = app.add_subcommand("verify", "check guarantees over random batches");
    verify->add_option("--mode", ver.mode, "size|value");
    verify->add_option("--alpha", ver.alpha, "reservation cost rate");
    verify->add_option("--c", ver.c, "threshold factor (default c* or 1.1)");
    verify->add_option("--epsilon", ver.epsilon, "size mode: guarantee slack over 2");
    verify->add_option("--beta", ver.beta, "size mode: additive slack or 'from-ledger'");
    verify->add_option("--n", ver.n, "instances in the batch");
    verify->add_option("--n-max", ver.n_max, "max items per instance");
    verify->add_option("--seed", ver.seed, "batch seed (RESKNAP_SEED overrides)");
    verify->add_flag("--serial", ver.serial, "disable the parallel batch runner");

    SweepOpts sweep;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "measured ratios across an alpha grid");
    sweep_cmd->add_option("--alpha-start", sweep.alpha_start, "grid start");
    sweep_cmd->add_option("--alpha-stop", sweep.alpha_stop, "grid stop");
    sweep_cmd->add_option("--alpha-step", sweep.alpha_step, "grid step");
    sweep_cmd->add_option("--n", sweep.n, "instances per grid point");
    sweep_cmd->add_option("--n-max", sweep.n_max, "max items per instance");
    sweep_cmd->add_option("--N", sweep.N, "adversary horizon per grid point");
    sweep_cmd->add_option("--seed", sweep.seed, "batch seed (RESKNAP_SEED overrides)");
    sweep_cmd->add_option("--output", sweep.output, "CSV path, '-' for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (*simulate) return cmd_simulate(sim);
        if (*solve) return cmd_solve(solve_input);
        if (*adversary) return cmd_adversary(adv);
        if (*curve) return cmd_bounds_curve(curve_output);
        if (*verify) return cmd_verify(ver);
        if (*sweep_cmd) return cmd_sweep(sweep);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 4;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    } catch (const ModeMismatch& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    }
    return 3;
}
