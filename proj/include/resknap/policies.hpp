#pragma once

#include <utility>
#include <vector>

#include "resknap/core.hpp"
#include "resknap/pool.hpp"

namespace resknap {

enum class PolicyKind { Alg1, Alg2, PackFirstFit, RejectAll, ReserveAll };

/// c is the reservation threshold factor: an item is reserved once the pool
/// covers a knapsack only if it is at least c times denser than the pool's
/// least dense entry. The density-threshold policies need c > 1 (size costs)
/// or c >= 1 (value costs).
struct PolicyConfig {
    Mode mode;
    Rat c = Rat(11, 10);
    PolicyKind kind = PolicyKind::Alg2;
};

enum class Decision { Pack, Reject, Reserve };

/// Run statistics backing the reservation-cost accounting checks:
/// epoch_count is the density level of the pool's least density relative to
/// the cost rate — the smallest k with d_delta_final <= alpha * c^k — which
/// caps the size-proportional reservation cost at 2*alpha*(k+1); v_c / s_c
/// are the value and size of pool entries strictly denser than c times the
/// final least density. The least-density marker reads 0 until the pool
/// first covers a knapsack, matching its initialization.
struct InstrumentationLedger {
    unsigned epoch_count = 0;
    Rat v_c;
    Rat s_c;
    Rat d_delta_final;
};

struct Trace {
    std::vector<std::pair<Item, Decision>> decisions;
    std::vector<Item> reserved;       // reservation order; costs are sunk
    std::vector<Item> packed_online;  // never removed once packed
    std::vector<Item> final_packing;  // optimal packing of reserved items
    GainReport report;
    InstrumentationLedger ledger;
};

/// Incremental policy runner. The density-threshold policies share the pool;
/// the strawman baselines keep only the flat reserved/packed lists.
class PolicyEngine {
public:
    explicit PolicyEngine(PolicyConfig config);

    Decision step(const Item& item);

    /// End of sequence: packs the reserved items optimally into the capacity
    /// left by online packing and fills in the gain report and ledger.
    Trace finish();

    const Pool& pool() const { return pool_; }
    const PolicyConfig& config() const { return config_; }

private:
    Decision decide(const Item& item);
    void reserve(const Item& item);

    PolicyConfig config_;
    Pool pool_;
    Trace trace_;
    Rat packed_size_;
    bool pool_covered_ = false;  // pool has reached total size >= 1
};

/// Single decision step of the size-cost policy on an explicit state, as a
/// pure function. Throws ModeMismatch unless mode is SizeProportional.
std::pair<Pool, Decision> step_alg1(const Pool& pool, const PolicyConfig& config,
                                    const Item& item);

/// Same for the value-cost policy (no low-density reject branch). Throws
/// ModeMismatch unless mode is ValueProportional.
std::pair<Pool, Decision> step_alg2(const Pool& pool, const PolicyConfig& config,
                                    const Item& item);

/// Optimal 0/1 packing of the reserved items (pool entries and evictions
/// alike) into the residual capacity.
std::vector<Item> finalize(std::span<const Item> reserved, const Rat& residual_capacity);

/// Runs a full instance through the policy. Deterministic.
Trace run(const PolicyConfig& config, const Instance& instance);

}  // namespace resknap
