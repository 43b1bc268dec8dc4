#include "resknap/adversary.hpp"

#include <cmath>
#include <stdexcept>

#include "resknap/bounds.hpp"
#include "resknap/solver.hpp"

namespace resknap {

namespace {

const mpz_class kFloorDenom("1000000000000");  // 1e12, matching Rat rounding

void validate(const SizeAdversaryConfig& config) {
    if (config.epsilon <= 0 || config.epsilon >= Rat(1, 2))
        throw std::invalid_argument("size adversary needs 0 < epsilon < 1/2");
    if (config.C <= 2 * config.beta)
        throw std::invalid_argument("size adversary needs C > 2*beta");
}

void validate(const ValueAdversaryConfig& config) {
    if (config.eps1 <= 0) throw std::invalid_argument("eps1 must be positive");
    if (config.eps2 <= 0 || config.eps2 >= 1)
        throw std::invalid_argument("eps2 must lie in (0,1)");
    if (config.f1 <= 1) throw std::invalid_argument("f1 must exceed 1");
    if (config.rho <= 0 || config.rho >= 1)
        throw std::invalid_argument("rho must lie in (0,1)");
    Rat pw(1);
    for (std::size_t i = 0; i < config.N; ++i) {
        pw *= config.rho;
        pw = rat_floor_to_denom(pw, kFloorDenom);  // flooring only shrinks pw
    }
    // Floored check is conservative: if even the floored power clears 1-eps2
    // the exact one does too; the CLI picks rho with slack above the line.
    if (pw < 1 - config.eps2)
        throw std::invalid_argument("rho^N >= 1-eps2 violated");
}

// Size-cost game automaton. next() is the pending emission; observe()
// consumes the policy's decision on it.
class SizeStepper {
public:
    SizeStepper(const SizeAdversaryConfig& config, Rat alpha)
        : config_(config), alpha_(std::move(alpha)), eps_pow_(config.epsilon) {
        validate(config_);
        if (alpha_ <= 0) throw std::invalid_argument("size-cost alpha must be positive");
    }

    std::optional<Item> next(std::size_t arrival) const {
        switch (phase_) {
            case Phase::OfferX:
                return Item{Rat(1, 2) + eps_pow_, config_.C, arrival};
            case Phase::OfferBait:
                return Item{Rat(1), 3 * config_.C, arrival};
            case Phase::OfferComplement:
                return Item{Rat(1, 2) - eps_pow_, config_.C, arrival};
            case Phase::Done:
                return std::nullopt;
        }
        return std::nullopt;
    }

    void observe(Decision decision) {
        switch (phase_) {
            case Phase::OfferX:
                if (decision == Decision::Pack) {
                    phase_ = Phase::OfferBait;
                } else if (decision == Decision::Reject) {
                    if (round_ == 1)
                        finish(Termination::RejectedEarly);
                    else
                        phase_ = Phase::OfferComplement;
                } else {
                    cost_ += alpha_ * (Rat(1, 2) + eps_pow_);
                    if (cost_ >= config_.C) {
                        finish(Termination::ReservationBudgetExhausted);
                    } else {
                        ++round_;
                        advance_eps();
                    }
                }
                break;
            case Phase::OfferBait:
                finish(Termination::TookBait);
                break;
            case Phase::OfferComplement:
                finish(Termination::RejectedEarly);
                break;
            case Phase::Done:
                throw InvalidHistory("decision after the sequence ended");
        }
    }

    Termination termination() const { return term_; }

private:
    enum class Phase { OfferX, OfferBait, OfferComplement, Done };

    void finish(Termination t) {
        phase_ = Phase::Done;
        term_ = t;
    }

    // eps^round, floored to denominator 1e12 to keep the exact arithmetic
    // bounded over long all-reserve runs, but pinned at 1e-12 so no two x_i
    // ever fit together (their sizes stay strictly above 1/2).
    void advance_eps() {
        eps_pow_ = rat_floor_to_denom(Rat(eps_pow_ * config_.epsilon), kFloorDenom);
        Rat least(1, kFloorDenom);
        if (eps_pow_ < least) eps_pow_ = least;
    }

    const SizeAdversaryConfig& config_;
    Rat alpha_;
    Phase phase_ = Phase::OfferX;
    Termination term_ = Termination::RejectedEarly;
    std::size_t round_ = 1;
    Rat eps_pow_;  // the eps^i of the current x_i
    Rat cost_;     // cumulative reservation cost of reserved items
};

// Value-cost game automaton.
class ValueStepper {
public:
    ValueStepper(const ValueAdversaryConfig& config, const Rat& alpha)
        : config_(config), v_prev_(1), v_cur_(1) {
        validate(config_);
        double a = to_double(alpha);
        if (!(a > 0.0 && a < 0.5))
            throw std::invalid_argument("value adversary needs 0 < alpha < 1/2");
        copy_cap_ = static_cast<std::size_t>(std::ceil(lb_value(a))) + 1;
    }

    std::optional<Item> next(std::size_t arrival) const {
        switch (phase_) {
            case Phase::OfferX:
                return Item{Rat(1 - Rat(k_) * config_.eps1), v_cur_, arrival};
            case Phase::OfferCopy:
                return Item{y_size_, y_value_, arrival};
            case Phase::Done:
                return std::nullopt;
        }
        return std::nullopt;
    }

    void observe(Decision decision) {
        switch (phase_) {
            case Phase::OfferX:
                if (decision == Decision::Reserve)
                    advance_chain();
                else if (k_ < config_.N)
                    finish(Termination::RejectedEarly);
                else
                    arm_copies();
                break;
            case Phase::OfferCopy:
                if (decision == Decision::Reserve) {
                    finish(Termination::TookBait);
                } else if (++copies_ >= copy_cap_) {
                    finish(Termination::CopiesExhausted);
                }
                break;
            case Phase::Done:
                throw InvalidHistory("decision after the sequence ended");
        }
    }

    Termination termination() const { return term_; }

private:
    enum class Phase { OfferX, OfferCopy, Done };

    void finish(Termination t) {
        phase_ = Phase::Done;
        term_ = t;
    }

    void advance_chain() {
        ++k_;
        Rat f = factor_schedule(k_, config_);
        if (f < 1 + config_.eps2 || k_ >= config_.max_rounds ||
            Rat(k_) * config_.eps1 >= 1) {
            finish(Termination::ScheduleConverged);
            return;
        }
        v_prev_ = v_cur_;
        // Floor v_k to a fixed denominator so the exact product stays
        // tractable over thousands of rounds; the loss per round (< 1e-12)
        // is dwarfed by the eps2 growth margin.
        v_cur_ = rat_floor_to_denom(Rat(v_cur_ * f), kFloorDenom);
    }

    void arm_copies() {
        y_size_ = Rat(k_) * config_.eps1;
        y_value_ = v_prev_;
        copies_ = 0;
        phase_ = Phase::OfferCopy;
    }

    const ValueAdversaryConfig& config_;
    Phase phase_ = Phase::OfferX;
    Termination term_ = Termination::RejectedEarly;
    std::size_t k_ = 0;  // index of the pending x_k
    Rat v_prev_;         // v_{k-1}
    Rat v_cur_;          // v_k
    Rat y_size_, y_value_;
    std::size_t copies_ = 0;
    std::size_t copy_cap_ = 0;
};

template <typename Stepper>
std::optional<Item> replay(Stepper& stepper,
                           std::span<const std::pair<Item, Decision>> history) {
    for (std::size_t i = 0; i < history.size(); ++i) {
        std::optional<Item> expected = stepper.next(i);
        if (!expected) throw InvalidHistory("history extends past the end of the game");
        const Item& seen = history[i].first;
        if (expected->size != seen.size || expected->value != seen.value)
            throw InvalidHistory("history item differs from the adversary's emission");
        stepper.observe(history[i].second);
    }
    return stepper.next(history.size());
}

template <typename Stepper>
GameResult run_game(Stepper& stepper, const PolicyConfig& policy, const Rat& beta) {
    PolicyEngine engine(policy);
    std::vector<Item> emitted;
    while (std::optional<Item> item = stepper.next(emitted.size())) {
        Decision decision = engine.step(*item);
        emitted.push_back(*item);
        stepper.observe(decision);
    }
    GameResult result;
    result.trace = engine.finish();
    result.opt_value = optimal_value(emitted, Rat(1));
    result.forced_ratio = ratio(result.opt_value, result.trace.report.net_gain, beta);
    result.termination = stepper.termination();
    return result;
}

}  // namespace

ValueAdversaryConfig default_value_config(const Rat& alpha, std::size_t N, const Rat& eps2) {
    double a = to_double(alpha);
    if (!(a > 0.0 && a < 0.5))
        throw std::invalid_argument("value adversary needs 0 < alpha < 1/2");
    if (N == 0) throw std::invalid_argument("N must be positive");
    double e2 = to_double(eps2);
    ValueAdversaryConfig config;
    config.eps1 = Rat(1, 80000);
    config.eps2 = eps2;
    config.N = N;
    config.f1 = rat_from_double_ceil((1.0 + e2) * lb_value(a));
    double root = std::pow(1.0 - e2, 1.0 / static_cast<double>(N));
    config.rho = rat_from_double_ceil(root, 9) + Rat(1, 1000000000);
    if (config.rho >= 1) throw std::invalid_argument("N too large for the decay cushion");
    return config;
}

Rat factor_schedule(std::size_t k, const ValueAdversaryConfig& config) {
    if (k == 0) return Rat(1);
    double decay = std::pow(to_double(config.rho), static_cast<double>(k));
    double f = 1.0 + (to_double(config.f1) - 1.0) * decay;
    Rat r = rat_from_double_floor(f);
    return r < 1 ? Rat(1) : r;
}

std::optional<Item> next_item_size_lb(const SizeAdversaryConfig& config, const Rat& alpha,
                                      std::span<const std::pair<Item, Decision>> history) {
    SizeStepper stepper(config, alpha);
    return replay(stepper, history);
}

std::optional<Item> next_item_value_lb(const ValueAdversaryConfig& config, const Rat& alpha,
                                       std::span<const std::pair<Item, Decision>> history) {
    ValueStepper stepper(config, alpha);
    return replay(stepper, history);
}

GameResult play(const SizeAdversaryConfig& config, const PolicyConfig& policy) {
    if (policy.mode.kind != CostKind::SizeProportional)
        throw ModeMismatch("size adversary requires a size-proportional policy");
    SizeStepper stepper(config, policy.mode.alpha);
    return run_game(stepper, policy, config.beta);
}

GameResult play(const ValueAdversaryConfig& config, const PolicyConfig& policy) {
    if (policy.mode.kind != CostKind::ValueProportional)
        throw ModeMismatch("value adversary requires a value-proportional policy");
    ValueStepper stepper(config, policy.mode.alpha);
    return run_game(stepper, policy, Rat(0));
}

}  // namespace resknap
