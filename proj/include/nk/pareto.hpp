#ifndef NK_PARETO_HPP
#define NK_PARETO_HPP

#include <optional>
#include <vector>

#include "nk/types.hpp"

namespace nk {

struct WeightProfit {
    Value weight = 0;
    Value profit = 0;
    friend bool operator==(const WeightProfit&, const WeightProfit&) = default;
};

// Sorted antichain of (weight, profit) pairs: strictly increasing in both
// coordinates, every weight within the cap. In decision mode profits saturate
// at the demand, which bounds the length by min(cap, demand) + 1.
//
// Saturation semantics for combine: a saturated operand yields a saturated
// result even under a negative profit offset. Callers only pass offsets that
// remove profit counted inside *both* operands, so the true combined profit
// still meets the clamp whenever either side does.
class ParetoList {
public:
    ParetoList() = default;

    static ParetoList for_optimization(Value cap) {
        ParetoList l;
        l.cap_ = cap;
        return l;
    }

    static ParetoList for_decision(Value cap, Value demand) {
        ParetoList l;
        l.cap_ = cap;
        l.clamp_ = demand;
        return l;
    }

    // Empty list with the same cap/mode as this one.
    ParetoList same_shape_empty() const {
        ParetoList l;
        l.cap_ = cap_;
        l.clamp_ = clamp_;
        return l;
    }

    Value cap() const { return cap_; }
    std::optional<Value> clamp() const { return clamp_; }
    bool compatible_with(const ParetoList& o) const {
        return cap_ == o.cap_ && clamp_ == o.clamp_;
    }

    bool empty() const { return pairs_.empty(); }
    std::size_t size() const { return pairs_.size(); }
    const std::vector<WeightProfit>& pairs() const { return pairs_; }

    // Largest profit present, or nullopt when empty.
    std::optional<Value> best_profit() const {
        if (pairs_.empty()) return std::nullopt;
        return pairs_.back().profit;
    }

    // Undominated closure of this list plus the pair; pairs over the cap (or
    // with negative weight) are dropped silently.
    void insert(WeightProfit pr);

    // Undominated closure of a ∪ b. Throws on cap/mode mismatch.
    static ParetoList unite(const ParetoList& a, const ParetoList& b);

    // All pairwise sums shifted by the offsets, undominated closure. Sums with
    // weight over the cap or below zero are dropped. Offsets may be negative
    // (double-count correction). Throws on cap/mode mismatch or overflow.
    static ParetoList combine(const ParetoList& a, const ParetoList& b,
                              Value weight_offset, Value profit_offset);

    // Shift every pair by (dw, dp), dropping results outside [0, cap].
    // dp must be non-negative; profits saturate at the clamp.
    ParetoList shifted(Value dw, Value dp) const;

    friend bool operator==(const ParetoList& a, const ParetoList& b) {
        return a.cap_ == b.cap_ && a.clamp_ == b.clamp_ && a.pairs_ == b.pairs_;
    }

private:
    Value clamp_profit(Value p) const {
        if (clamp_ && p > *clamp_) return *clamp_;
        return p;
    }

    std::vector<WeightProfit> pairs_; // sorted by weight asc, profit asc
    Value cap_ = 0;
    std::optional<Value> clamp_;
};

} // namespace nk

#endif
