#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "resknap/policies.hpp"

namespace resknap {

/// Adaptive lower-bound instance generators. Each adversary watches the
/// policy's decisions and picks the next item to force a bad ratio; the game
/// loop in play() alternates adversary emission and policy decision, then
/// scores the run against the exact offline optimum over all emitted items.

/// Size-cost adversary: opens with x1 = (1/2+eps, C) and keeps feeding
/// near-half items while they are reserved. Packing draws a full-size bait
/// (1, 3C) the packer can no longer fit; rejecting x_i draws the complement
/// (1/2-eps^i, C) that would have completed a full knapsack. Reservations
/// bleed until their cumulative cost reaches C.
struct SizeAdversaryConfig {
    Rat epsilon;  // 0 < epsilon < 1/2
    Rat C;        // large value; C > 2*beta
    Rat beta;     // additive constant the forced non-strict ratio defeats
};

/// Value-cost adversary: a chain x_k = (1 - k*eps1, v_k) with v_k = prod f_i
/// growing by a schedule factor each round. Stopping the chain at k >= N
/// draws up to ceil(LB(alpha))+1 copies of y = (k*eps1, v_{k-1}), which
/// together with the spurned x_k is exactly what the optimum packs. Reserving
/// everything bleeds value costs until the schedule converges.
struct ValueAdversaryConfig {
    Rat eps1;   // size decrement per round; keeps all x_k near full size
    Rat eps2;   // schedule convergence margin, in (0,1)
    std::size_t N = 50;  // rounds before the chain may be stopped safely
    Rat f1;     // initial growth factor, > 1
    Rat rho;    // geometric decay, in (0,1) with rho^N >= 1-eps2
    std::size_t max_rounds = 1'000'000;
};

enum class Termination {
    RejectedEarly,               // non-reserve before the trap was armed
    TookBait,                    // packed into the bait / reserved a y copy
    ReservationBudgetExhausted,  // size game: reservation costs reached C
    ScheduleConverged,           // value game: f_k fell below 1+eps2
    CopiesExhausted,             // value game: no y copy ever reserved
};

struct GameResult {
    Trace trace;
    Rat opt_value;
    Ratio forced_ratio;  // ratio(opt_value, net_gain, beta or 0 per mode)
    Termination termination;
};

struct InvalidHistory : std::runtime_error {
    explicit InvalidHistory(const std::string& what) : std::runtime_error(what) {}
};

/// Desk-scale value-adversary parameters: eps1 = 1/80000 (keeps every x_k
/// near full size over any feasible run), f1 = (1+eps2)*LB(alpha) rounded up,
/// rho = (1-eps2)^(1/N) rounded up with a 1e-9 cushion so the exact power
/// check rho^N >= 1-eps2 holds despite the float root.
ValueAdversaryConfig default_value_config(const Rat& alpha, std::size_t N, const Rat& eps2);

/// Growth factor f_k of the value adversary: geometric decay from f1 toward
/// 1, f_k = 1 + (f1-1)*rho^k, evaluated in double and rounded down to Rat at
/// 1e-12 (rounding down only weakens the forced lower bound). f_0 = 1 by the
/// v_0 = 1 convention. The config invariant rho^N >= 1-eps2 gives
/// f_k >= (1-eps2)*f_{k-N}.
Rat factor_schedule(std::size_t k, const ValueAdversaryConfig& config);

/// Next emission of the size adversary after the given game prefix, or
/// nothing once the sequence has ended. alpha is the policy's size-cost rate,
/// which the adversary needs to track the reservation budget. Throws
/// InvalidHistory if the items in the history are not the ones this adversary
/// would have emitted.
std::optional<Item> next_item_size_lb(const SizeAdversaryConfig& config, const Rat& alpha,
                                      std::span<const std::pair<Item, Decision>> history);

/// Same for the value adversary. alpha sets the copy cap ceil(LB(alpha))+1.
std::optional<Item> next_item_value_lb(const ValueAdversaryConfig& config, const Rat& alpha,
                                       std::span<const std::pair<Item, Decision>> history);

/// Plays a full game. The policy mode must be SizeProportional for the size
/// adversary and ValueProportional for the value adversary (ModeMismatch
/// otherwise). The forced ratio is non-strict (additive beta) in the size
/// game and strict (beta = 0) in the value game.
GameResult play(const SizeAdversaryConfig& config, const PolicyConfig& policy);
GameResult play(const ValueAdversaryConfig& config, const PolicyConfig& policy);

}  // namespace resknap
