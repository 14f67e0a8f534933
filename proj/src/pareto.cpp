#include "nk/pareto.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace nk {

void ParetoList::insert(WeightProfit pr) {
    if (pr.weight < 0 || pr.weight > cap_) return;
    pr.profit = clamp_profit(pr.profit);

    // First entry with weight >= pr.weight.
    auto it = std::lower_bound(
        pairs_.begin(), pairs_.end(), pr.weight,
        [](const WeightProfit& a, Value w) { return a.weight < w; });

    // Dominated by a lighter-or-equal entry with at least the profit?
    if (it != pairs_.begin() && std::prev(it)->profit >= pr.profit) return;
    if (it != pairs_.end() && it->weight == pr.weight) {
        if (it->profit >= pr.profit) return;
        it->profit = pr.profit;
    } else {
        it = pairs_.insert(it, pr);
    }
    // Drop heavier entries that no longer add profit.
    auto last = std::next(it);
    while (last != pairs_.end() && last->profit <= it->profit) ++last;
    pairs_.erase(std::next(it), last);
}

ParetoList ParetoList::unite(const ParetoList& a, const ParetoList& b) {
    if (!a.compatible_with(b))
        throw std::invalid_argument("pareto union: cap/mode mismatch");
    if (a.empty()) return b;
    if (b.empty()) return a;
    const ParetoList* small = &a;
    const ParetoList* big = &b;
    if (small->size() > big->size()) std::swap(small, big);
    ParetoList out = *big;
    for (const auto& pr : small->pairs_) out.insert(pr);
    return out;
}

ParetoList ParetoList::combine(const ParetoList& a, const ParetoList& b,
                               Value weight_offset, Value profit_offset) {
    if (!a.compatible_with(b))
        throw std::invalid_argument("pareto combine: cap/mode mismatch");
    ParetoList out = a.same_shape_empty();
    if (a.empty() || b.empty()) return out;

    std::vector<WeightProfit> sums;
    sums.reserve(a.size() * b.size());
    for (const auto& pa : a.pairs_) {
        for (const auto& pb : b.pairs_) {
            Value w = checked_add(checked_add(pa.weight, pb.weight), weight_offset);
            if (w < 0 || w > out.cap_) continue;
            Value p;
            if (out.clamp_ && (pa.profit >= *out.clamp_ || pb.profit >= *out.clamp_)) {
                p = *out.clamp_; // saturated operand stays saturated
            } else {
                p = checked_add(checked_add(pa.profit, pb.profit), profit_offset);
            }
            sums.push_back({w, p});
        }
    }
    std::sort(sums.begin(), sums.end(), [](const WeightProfit& x, const WeightProfit& y) {
        if (x.weight != y.weight) return x.weight < y.weight;
        return x.profit > y.profit;
    });
    Value best = std::numeric_limits<Value>::min();
    for (const auto& pr : sums) {
        if (pr.profit > best) {
            out.pairs_.push_back({pr.weight, out.clamp_profit(pr.profit)});
            best = pr.profit;
        }
    }
    return out;
}

ParetoList ParetoList::shifted(Value dw, Value dp) const {
    ParetoList out = same_shape_empty();
    for (const auto& pr : pairs_) {
        Value w = checked_add(pr.weight, dw);
        if (w < 0 || w > cap_) continue;
        out.pairs_.push_back({w, clamp_profit(checked_add(pr.profit, dp))});
    }
    // A shift keeps weights sorted; profits may hit the clamp and tie.
    Value best = std::numeric_limits<Value>::min();
    std::vector<WeightProfit> kept;
    kept.reserve(out.pairs_.size());
    for (const auto& pr : out.pairs_) {
        if (pr.profit > best) {
            kept.push_back(pr);
            best = pr.profit;
        }
    }
    out.pairs_ = std::move(kept);
    return out;
}

} // namespace nk
