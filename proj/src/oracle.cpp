#include "nk/oracle.hpp"

#include <algorithm>
#include <stdexcept>

namespace nk {

namespace {

bool in_set(const std::vector<char>& mask, VertexId v) { return mask[v] != 0; }

std::vector<VertexId> profitable_from_mask(const Instance& inst, Variant variant,
                                           const std::vector<char>& sel) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < inst.n(); ++v) {
        if (!sel[v]) continue;
        const auto& nb = inst.graph.out_neighbors(v);
        bool prof;
        if (is_one_neighbor(variant)) {
            prof = nb.empty();
            for (VertexId x : nb)
                if (in_set(sel, x)) { prof = true; break; }
        } else {
            prof = true;
            for (VertexId x : nb)
                if (!in_set(sel, x)) { prof = false; break; }
        }
        if (prof) out.push_back(v);
    }
    return out;
}

std::vector<char> to_mask(const Instance& inst, const std::vector<VertexId>& sel) {
    std::vector<char> mask(inst.n(), 0);
    for (VertexId v : sel) {
        if (v < 0 || v >= inst.n())
            throw std::invalid_argument("vertex out of range");
        mask[v] = 1;
    }
    return mask;
}

} // namespace

std::vector<VertexId> profitable_set(const Instance& inst, Variant variant,
                                     const std::vector<VertexId>& selected) {
    return profitable_from_mask(inst, variant, to_mask(inst, selected));
}

Evaluation evaluate(const Instance& inst, Variant variant,
                    const std::vector<VertexId>& selected) {
    auto mask = to_mask(inst, selected);
    Evaluation ev;
    for (VertexId v = 0; v < inst.n(); ++v)
        if (mask[v]) ev.selected.push_back(v);
    ev.profitable = profitable_from_mask(inst, variant, mask);
    for (VertexId v : ev.selected) ev.weight = checked_add(ev.weight, inst.weight[v]);
    for (VertexId v : ev.profitable) ev.profit = checked_add(ev.profit, inst.profit[v]);
    ev.hard_feasible = ev.profitable.size() == ev.selected.size();
    return ev;
}

bool decide(const Instance& inst, Variant variant,
            const std::vector<VertexId>& selected) {
    Evaluation ev = evaluate(inst, variant, selected);
    if (is_hard(variant) && !ev.hard_feasible) return false;
    return ev.weight <= inst.s && ev.profit >= inst.d;
}

SolveResult brute_force(const Instance& inst, Variant variant, FrontierMode mode,
                        int guard, std::optional<int> max_solution_size) {
    const VertexId n = inst.n();
    if (n > guard)
        throw std::invalid_argument("brute force guard exceeded: n=" +
                                    std::to_string(n));

    SolveResult res;
    res.frontier = mode == FrontierMode::Decision
                       ? ParetoList::for_decision(inst.s, inst.d)
                       : ParetoList::for_optimization(inst.s);

    std::vector<char> sel(n, 0);
    std::vector<VertexId> best_set;
    bool have_best = false;
    Value best_profit = 0, best_weight = 0;

    const std::uint64_t total = 1ULL << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        if (max_solution_size &&
            static_cast<int>(__builtin_popcountll(bits)) > *max_solution_size)
            continue;
        Value weight = 0;
        for (VertexId v = 0; v < n; ++v) {
            sel[v] = (bits >> v) & 1;
            if (sel[v]) weight = checked_add(weight, inst.weight[v]);
        }
        if (weight > inst.s) continue;

        auto prof = profitable_from_mask(inst, variant, sel);
        if (is_hard(variant) &&
            prof.size() != static_cast<std::size_t>(__builtin_popcountll(bits)))
            continue;
        Value profit = 0;
        for (VertexId v : prof) profit = checked_add(profit, inst.profit[v]);

        res.frontier.insert({weight, profit});

        std::vector<VertexId> set;
        for (VertexId v = 0; v < n; ++v)
            if (sel[v]) set.push_back(v);
        bool better = !have_best || profit > best_profit ||
                      (profit == best_profit &&
                       (weight < best_weight ||
                        (weight == best_weight &&
                         std::lexicographical_compare(set.begin(), set.end(),
                                                      best_set.begin(), best_set.end()))));
        if (better) {
            have_best = true;
            best_profit = profit;
            best_weight = weight;
            best_set = std::move(set);
        }
    }

    res.best_profit = best_profit;
    res.decision = have_best && best_profit >= inst.d;
    if (have_best) res.witness = best_set;
    return res;
}

} // namespace nk
