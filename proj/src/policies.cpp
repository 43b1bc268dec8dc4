#include "resknap/policies.hpp"

#include "resknap/solver.hpp"

namespace resknap {

namespace {

void check_mode(const PolicyConfig& config) {
    if (config.kind == PolicyKind::Alg1 &&
        config.mode.kind != CostKind::SizeProportional)
        throw ModeMismatch("size-cost policy requires size-proportional mode");
    if (config.kind == PolicyKind::Alg2 &&
        config.mode.kind != CostKind::ValueProportional)
        throw ModeMismatch("value-cost policy requires value-proportional mode");
}

}  // namespace

PolicyEngine::PolicyEngine(PolicyConfig config)
    : config_(std::move(config)), packed_size_(0) {
    check_mode(config_);
    trace_.report = GainReport{Rat(0), Rat(0), Rat(0)};
}

void PolicyEngine::reserve(const Item& item) {
    trace_.reserved.push_back(item);
    if (config_.kind != PolicyKind::Alg1 && config_.kind != PolicyKind::Alg2) return;
    pool_.insert(item);
    if (!pool_covered_ && pool_.total_size() >= 1) pool_covered_ = true;
}

Decision PolicyEngine::decide(const Item& item) {
    switch (config_.kind) {
        case PolicyKind::RejectAll:
            return Decision::Reject;
        case PolicyKind::ReserveAll:
            return Decision::Reserve;
        case PolicyKind::PackFirstFit:
            return packed_size_ + item.size <= 1 ? Decision::Pack : Decision::Reject;
        case PolicyKind::Alg1:
            if (density(item) <= config_.mode.alpha) return Decision::Reject;
            [[fallthrough]];
        case PolicyKind::Alg2:
            if (pool_.total_size() < 1) return Decision::Reserve;
            if (density(item) >= config_.c * pool_.d_delta()) return Decision::Reserve;
            return Decision::Reject;
    }
    return Decision::Reject;
}

Decision PolicyEngine::step(const Item& item) {
    Decision d = decide(item);
    trace_.decisions.emplace_back(item, d);
    switch (d) {
        case Decision::Pack:
            trace_.packed_online.push_back(item);
            packed_size_ += item.size;
            break;
        case Decision::Reserve:
            reserve(item);
            break;
        case Decision::Reject:
            break;
    }
    return d;
}

Trace PolicyEngine::finish() {
    trace_.final_packing = finalize(trace_.reserved, Rat(1 - packed_size_));

    std::vector<Item> packed = trace_.packed_online;
    packed.insert(packed.end(), trace_.final_packing.begin(), trace_.final_packing.end());
    trace_.report = gain(packed, trace_.reserved, config_.mode);

    InstrumentationLedger& ledger = trace_.ledger;
    ledger.d_delta_final = pool_covered_ ? pool_.d_delta() : Rat(0);
    // Density level reached by the pool's least density: the smallest k with
    // d_delta_final <= alpha * c^k. Every 2 units of reserved size force the
    // least density up by a factor of c, so the total reserved size is at
    // most 2(k+1) and the size-proportional cost at most 2*alpha*(k+1).
    ledger.epoch_count = 0;
    if (config_.mode.alpha > 0 && config_.c > 1) {
        Rat level = config_.mode.alpha;
        while (level < ledger.d_delta_final) {
            ++ledger.epoch_count;
            level *= config_.c;
        }
    }
    ledger.v_c = 0;
    ledger.s_c = 0;
    Rat threshold = config_.c * ledger.d_delta_final;
    for (const Item& entry : pool_.entries()) {
        if (entry.value > threshold * entry.size) {  // strictly denser than c*d_delta
            ledger.v_c += entry.value;
            ledger.s_c += entry.size;
        }
    }
    return trace_;
}

std::pair<Pool, Decision> step_alg1(const Pool& pool, const PolicyConfig& config,
                                    const Item& item) {
    if (config.mode.kind != CostKind::SizeProportional)
        throw ModeMismatch("size-cost policy requires size-proportional mode");
    Pool next = pool;
    if (density(item) <= config.mode.alpha) return {std::move(next), Decision::Reject};
    if (next.total_size() < 1 || density(item) >= config.c * next.d_delta()) {
        next.insert(item);
        return {std::move(next), Decision::Reserve};
    }
    return {std::move(next), Decision::Reject};
}

std::pair<Pool, Decision> step_alg2(const Pool& pool, const PolicyConfig& config,
                                    const Item& item) {
    if (config.mode.kind != CostKind::ValueProportional)
        throw ModeMismatch("value-cost policy requires value-proportional mode");
    Pool next = pool;
    if (next.total_size() < 1 || density(item) >= config.c * next.d_delta()) {
        next.insert(item);
        return {std::move(next), Decision::Reserve};
    }
    return {std::move(next), Decision::Reject};
}

std::vector<Item> finalize(std::span<const Item> reserved, const Rat& residual_capacity) {
    return optimal_packing(reserved, residual_capacity).chosen;
}

Trace run(const PolicyConfig& config, const Instance& instance) {
    PolicyEngine engine(config);
    for (const Item& item : instance.items) engine.step(item);
    return engine.finish();
}

}  // namespace resknap
