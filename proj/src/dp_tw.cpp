#include "nk/dp_tw.hpp"

#include <algorithm>
#include <stdexcept>

namespace nk {
namespace dp {

namespace {

int bag_index(const std::vector<VertexId>& bag, VertexId v) {
    auto it = std::lower_bound(bag.begin(), bag.end(), v);
    if (it == bag.end() || *it != v) return -1;
    return static_cast<int>(it - bag.begin());
}

// Bit mask over bag positions of the given vertices.
std::uint32_t mask_of(const std::vector<VertexId>& bag, const std::vector<VertexId>& vs) {
    std::uint32_t m = 0;
    for (VertexId v : vs) {
        int i = bag_index(bag, v);
        if (i >= 0) m |= 1u << i;
    }
    return m;
}

Value mask_weight(const Context& ctx, const std::vector<VertexId>& bag, std::uint32_t m) {
    Value w = 0;
    while (m) {
        int i = __builtin_ctz(m);
        m &= m - 1;
        w = checked_add(w, ctx.inst->weight[bag[i]]);
    }
    return w;
}

Value mask_profit(const Context& ctx, const std::vector<VertexId>& bag, std::uint32_t m) {
    Value p = 0;
    while (m) {
        int i = __builtin_ctz(m);
        m &= m - 1;
        p = checked_add(p, ctx.inst->profit[bag[i]]);
    }
    return p;
}

void accumulate(Table& table, StateKey key, ParetoList&& list) {
    if (list.empty()) return;
    auto [it, fresh] = table.try_emplace(key, std::move(list));
    if (!fresh) it->second = ParetoList::unite(it->second, list);
}

void accumulate(Table& table, StateKey key, const ParetoList& list) {
    if (list.empty()) return;
    auto [it, fresh] = table.try_emplace(key, list);
    if (!fresh) it->second = ParetoList::unite(it->second, list);
}

} // namespace

Table dp_leaf(const Context& ctx) {
    const Instance& inst = *ctx.inst;
    const VertexId v = ctx.guess;
    Table t;

    ParetoList zero = ctx.empty_list();
    zero.insert({0, 0});
    t.emplace(make_key(0, 0), std::move(zero));

    if (inst.weight[v] <= ctx.cap) {
        // Profit-counted state: 1N needs a globally empty out-neighborhood
        // here (no witness is visible yet); All-N may claim optimistically.
        bool grant = is_all_neighbor(ctx.variant) || inst.graph.out_neighbors(v).empty();
        if (grant) {
            ParetoList both = ctx.empty_list();
            both.insert({inst.weight[v], inst.profit[v]});
            t.emplace(make_key(1, 1), std::move(both));
        }
        ParetoList sel = ctx.empty_list();
        sel.insert({inst.weight[v], 0});
        t.emplace(make_key(1, 0), std::move(sel));
    }
    return t;
}

Table dp_introduce(const Context& ctx, const Table& child,
                   const std::vector<VertexId>& child_bag, VertexId u) {
    const Instance& inst = *ctx.inst;
    if (u == ctx.guess) throw std::invalid_argument("cannot introduce the guessed vertex");

    std::vector<VertexId> bag = child_bag;
    bag.insert(std::upper_bound(bag.begin(), bag.end(), u), u);
    const int upos = bag_index(bag, u);
    const std::uint32_t ubit = 1u << upos;
    const std::uint32_t low = ubit - 1;

    auto expand = [&](std::uint32_t m) {
        return (m & low) | ((m & ~low) << 1);
    };

    const std::uint32_t u_out = mask_of(bag, inst.graph.out_neighbors(u)) & ~ubit;
    const std::uint32_t u_in = mask_of(bag, inst.graph.in_neighbors(u)) & ~ubit;
    const bool u_global_sink = inst.graph.out_neighbors(u).empty();
    const bool may_select = !(ctx.anchor_minimum && u < ctx.guess);
    const bool one_n = is_one_neighbor(ctx.variant);

    Table t;
    for (const auto& [key, list] : child) {
        const std::uint32_t s = expand(s_mask(key));
        const std::uint32_t p = expand(p_mask(key));

        // u stays unselected.
        if (one_n) {
            accumulate(t, make_key(s, p), list);
        } else if ((p & u_in) == 0) {
            // A counted vertex with the unselected u as out-neighbor would be
            // wrong; that state dies, its uncounted twin survives.
            accumulate(t, make_key(s, p), list);
        }

        if (!may_select || inst.weight[u] > ctx.cap) continue;

        // u selected.
        const std::uint32_t s2 = s | ubit;
        if (one_n) {
            const std::uint32_t activated = s & ~p & u_in;
            const bool grant = (u_out & s) != 0 || u_global_sink;
            Value dp = mask_profit(ctx, bag, activated);
            if (grant) dp = checked_add(dp, inst.profit[u]);
            const std::uint32_t p2 = p | activated | (grant ? ubit : 0);
            accumulate(t, make_key(s2, p2), list.shifted(inst.weight[u], dp));
        } else {
            accumulate(t, make_key(s2, p), list.shifted(inst.weight[u], 0));
            const bool eligible = (u_out & ~s2) == 0; // bag out-neighbors all selected
            if (eligible)
                accumulate(t, make_key(s2, p | ubit),
                           list.shifted(inst.weight[u], inst.profit[u]));
        }
    }
    return t;
}

Table dp_forget(const Context& ctx, const Table& child,
                const std::vector<VertexId>& child_bag, VertexId u) {
    if (u == ctx.guess) throw std::invalid_argument("cannot forget the guessed vertex");
    const int upos = bag_index(child_bag, u);
    if (upos < 0) throw std::invalid_argument("forgotten vertex not in child bag");
    const std::uint32_t ubit = 1u << upos;
    const std::uint32_t low = ubit - 1;

    auto contract = [&](std::uint32_t m) {
        return (m & low) | ((m >> 1) & ~low);
    };

    const bool hard = is_hard(ctx.variant);
    Table t;
    for (const auto& [key, list] : child) {
        const std::uint32_t s = s_mask(key);
        const std::uint32_t p = p_mask(key);
        // u leaves the bag with all of its edges accounted for; in hard
        // variants an unsatisfied selected u is permanently infeasible.
        if (hard && (s & ubit) && !(p & ubit)) continue;
        accumulate(t, make_key(contract(s & ~ubit), contract(p & ~ubit)), list);
    }
    return t;
}

Table dp_join(const Context& ctx, const Table& left, const Table& right,
              const std::vector<VertexId>& bag) {
    const bool one_n = is_one_neighbor(ctx.variant);
    Table t;

    // Bucket right cells by S for the agreement on selected bag vertices.
    std::unordered_map<std::uint32_t, std::vector<const std::pair<const StateKey, ParetoList>*>>
        by_s;
    for (const auto& cell : right) by_s[s_mask(cell.first)].push_back(&cell);

    for (const auto& [lkey, llist] : left) {
        const std::uint32_t s = s_mask(lkey);
        auto it = by_s.find(s);
        if (it == by_s.end()) continue;
        const Value woff = -mask_weight(ctx, bag, s);
        const std::uint32_t p1 = p_mask(lkey);
        for (const auto* rcell : it->second) {
            const std::uint32_t p2 = p_mask(rcell->first);
            if (one_n) {
                // Profit counted on either side stays counted; the shared part
                // is counted twice and comes off once.
                const Value poff = -mask_profit(ctx, bag, p1 & p2);
                accumulate(t, make_key(s, p1 | p2),
                           ParetoList::combine(llist, rcell->second, woff, poff));
            } else {
                // A bag vertex is counted only when both sides counted it;
                // mismatched sides pair up through pessimistic twins instead.
                if (p1 != p2) continue;
                const Value poff = -mask_profit(ctx, bag, p1);
                accumulate(t, make_key(s, p1),
                           ParetoList::combine(llist, rcell->second, woff, poff));
            }
        }
    }
    return t;
}

} // namespace dp

namespace {

dp::Table run_tree(const dp::Context& ctx, const NiceTreeDecomposition& antd) {
    std::vector<dp::Table> tables(antd.nodes.size());
    std::vector<char> done(antd.nodes.size(), 0);
    std::vector<std::pair<int, bool>> st{{antd.root, false}};
    while (!st.empty()) {
        auto [id, expanded] = st.back();
        st.pop_back();
        const NiceNode& nd = antd.nodes[id];
        if (!expanded) {
            st.push_back({id, true});
            for (int c : nd.children) st.push_back({c, false});
            continue;
        }
        switch (nd.kind) {
        case NodeKind::Leaf:
            tables[id] = dp::dp_leaf(ctx);
            break;
        case NodeKind::Introduce:
            tables[id] = dp::dp_introduce(ctx, tables[nd.children[0]],
                                          antd.nodes[nd.children[0]].bag, nd.vertex);
            tables[nd.children[0]].clear();
            break;
        case NodeKind::Forget:
            tables[id] = dp::dp_forget(ctx, tables[nd.children[0]],
                                       antd.nodes[nd.children[0]].bag, nd.vertex);
            tables[nd.children[0]].clear();
            break;
        case NodeKind::Join:
            tables[id] = dp::dp_join(ctx, tables[nd.children[0]],
                                     tables[nd.children[1]], nd.bag);
            tables[nd.children[0]].clear();
            tables[nd.children[1]].clear();
            break;
        }
        done[id] = 1;
    }
    return std::move(tables[antd.root]);
}

} // namespace

SolveResult solve_treewidth(const Instance& inst, Variant variant, FrontierMode mode,
                            const std::optional<TreeDecomposition>& td) {
    ValidationReport vr = validate_instance(inst);
    if (!vr.ok())
        throw std::invalid_argument("solve_treewidth: invalid instance: " +
                                    vr.violations.front());
    if (inst.graph.any_self_loop())
        throw std::invalid_argument("solve_treewidth: normalize self-loops first");

    SolveResult res;
    res.frontier = mode == FrontierMode::Decision
                       ? ParetoList::for_decision(inst.s, inst.d)
                       : ParetoList::for_optimization(inst.s);
    res.frontier.insert({0, 0}); // the empty solution

    if (mode == FrontierMode::Decision && inst.d == 0) {
        res.best_profit = 0;
        res.decision = true;
        return res;
    }

    TreeDecomposition plain = td ? *td : heuristic_td(inst.graph);
    if (td) {
        TdReport rep = validate_td(inst.graph, plain);
        if (!rep.ok())
            throw std::invalid_argument("solve_treewidth: invalid decomposition: " +
                                        rep.violations.front());
    }
    NiceTreeDecomposition ntd = make_nice(inst.graph, plain);

    for (VertexId v = 0; v < inst.n(); ++v) {
        NiceTreeDecomposition antd = augment_all_bags(ntd, v);
        dp::Context ctx;
        ctx.inst = &inst;
        ctx.variant = variant;
        ctx.guess = v;
        ctx.anchor_minimum = true; // each solution counted at its minimum vertex
        ctx.cap = inst.s;
        if (mode == FrontierMode::Decision) ctx.clamp = inst.d;

        dp::Table root = run_tree(ctx, antd);
        auto take = [&](dp::StateKey key) {
            auto it = root.find(key);
            if (it != root.end()) res.frontier = ParetoList::unite(res.frontier, it->second);
        };
        take(dp::make_key(1, 1));
        if (!is_hard(variant)) take(dp::make_key(1, 0));
    }

    res.best_profit = res.frontier.best_profit().value_or(0);
    res.decision = res.best_profit >= inst.d;
    return res;
}

} // namespace nk
