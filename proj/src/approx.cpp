#include "nk/approx.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace nk {

namespace {

void require_uniform(const Instance& inst) {
    for (VertexId v = 0; v < inst.n(); ++v)
        if (inst.weight[v] != 1 || inst.profit[v] != 1)
            throw std::invalid_argument("solver requires a uniform instance");
    if (inst.graph.any_self_loop())
        throw std::invalid_argument("normalize self-loops first");
}

} // namespace

SccDecomposition strongly_connected_components(const Graph& g) {
    const VertexId n = g.vertex_count();
    SccDecomposition scc;
    scc.component_of.assign(n, -1);

    // Iterative Tarjan.
    std::vector<int> index(n, -1), low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::vector<VertexId>> raw;
    int counter = 0;

    struct Frame { VertexId v; std::size_t next; };
    for (VertexId s = 0; s < n; ++s) {
        if (index[s] >= 0) continue;
        std::vector<Frame> call{{s, 0}};
        index[s] = low[s] = counter++;
        stack.push_back(s);
        on_stack[s] = 1;
        while (!call.empty()) {
            Frame& f = call.back();
            const auto& nbrs = g.out_neighbors(f.v);
            if (f.next < nbrs.size()) {
                VertexId w = nbrs[f.next++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[f.v] = std::min(low[f.v], index[w]);
                }
                continue;
            }
            VertexId v = f.v;
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
            if (low[v] == index[v]) {
                std::vector<VertexId> comp;
                while (true) {
                    VertexId w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    comp.push_back(w);
                    if (w == v) break;
                }
                std::sort(comp.begin(), comp.end());
                raw.push_back(std::move(comp));
            }
        }
    }

    std::sort(raw.begin(), raw.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    scc.components = std::move(raw);
    for (std::size_t i = 0; i < scc.components.size(); ++i)
        for (VertexId v : scc.components[i]) scc.component_of[v] = static_cast<int>(i);
    return scc;
}

SolveResult solve_uniform_undirected(const Instance& inst) {
    if (inst.graph.directed())
        throw std::invalid_argument("this solver requires an undirected instance");
    require_uniform(inst);

    const VertexId n = inst.n();
    // Connected components; isolated vertices are unit profit by the empty
    // neighborhood rule, larger components earn their full size when grown
    // connectedly with at least two vertices.
    std::vector<int> comp(n, -1);
    std::vector<std::vector<VertexId>> members;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(members.size());
        members.push_back({});
        std::queue<VertexId> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            members[id].push_back(v);
            for (VertexId w : inst.graph.out_neighbors(v))
                if (comp[w] < 0) { comp[w] = id; q.push(w); }
        }
    }

    std::vector<VertexId> isolated;
    std::vector<std::vector<VertexId>> big;
    for (auto& m : members) {
        if (m.size() == 1)
            isolated.push_back(m.front());
        else
            big.push_back(std::move(m));
    }
    std::sort(isolated.begin(), isolated.end());
    std::sort(big.begin(), big.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });
    const Value isolated_count = static_cast<Value>(isolated.size());
    Value big_total = 0;
    std::size_t max_big = 0;
    for (const auto& c : big) {
        big_total += static_cast<Value>(c.size());
        max_big = std::max(max_big, c.size());
    }

    // Best profit with budget w: isolated picks are always perfect, the rest
    // goes into large components where a lone leftover unit earns nothing.
    auto best_at = [&](Value budget) {
        Value take_iso = std::min(budget, isolated_count);
        Value r = std::min(budget - take_iso, big_total);
        bool strand = (r == 1) || (r % 2 == 1 && max_big == 2);
        if (strand && take_iso > 0 && r + 1 <= big_total) {
            --take_iso;
            ++r;
            strand = (r == 1) || (r % 2 == 1 && max_big == 2);
        }
        return std::pair<Value, Value>(take_iso, strand ? r - 1 : r);
    };

    const Value reachable = isolated_count + big_total;
    SolveResult res;
    res.frontier = ParetoList::for_optimization(inst.s);
    res.frontier.insert({0, 0});
    for (Value w = 1; w <= std::min(inst.s, reachable); ++w) {
        auto [iso, grown] = best_at(w);
        res.frontier.insert({w, iso + grown});
    }

    auto [take_iso, grown] = best_at(inst.s);
    res.best_profit = take_iso + grown;
    res.decision = res.best_profit >= inst.d;

    // Construct a witness: isolated picks plus connected prefixes.
    std::vector<VertexId> picks(isolated.begin(), isolated.begin() + take_iso);
    Value rem = grown;
    std::vector<char> seen(n, 0); // components are disjoint, reuse across them
    for (const auto& c : big) {
        if (rem < 2) break;
        Value t = std::min<Value>(static_cast<Value>(c.size()), rem);
        if (rem - t == 1) --t; // keep the leftover pair for the next component
        // BFS prefix from the smallest id keeps every pick adjacent to one
        // already taken.
        std::queue<VertexId> q;
        q.push(c.front());
        seen[c.front()] = 1;
        Value got = 0;
        while (!q.empty() && got < t) {
            VertexId v = q.front();
            q.pop();
            picks.push_back(v);
            ++got;
            for (VertexId w : inst.graph.out_neighbors(v))
                if (!seen[w]) { seen[w] = 1; q.push(w); }
        }
        rem -= got;
    }
    std::sort(picks.begin(), picks.end());
    res.witness = std::move(picks);
    return res;
}

Additive1Result solve_uniform_directed_additive1(const Instance& inst, bool compute_gap) {
    if (!inst.graph.directed())
        throw std::invalid_argument("this solver requires a directed instance");
    require_uniform(inst);

    SccDecomposition scc = strongly_connected_components(inst.graph);
    std::vector<VertexId> picks;
    Value budget = inst.s;
    for (const auto& comp : scc.components) {
        if (static_cast<Value>(comp.size()) <= budget) {
            picks.insert(picks.end(), comp.begin(), comp.end());
            budget -= static_cast<Value>(comp.size());
            continue;
        }
        // First component that does not fit: DFS preorder prefix inside it.
        if (budget > 0) {
            std::vector<char> in_comp(inst.n(), 0), seen(inst.n(), 0);
            for (VertexId v : comp) in_comp[v] = 1;
            std::vector<VertexId> stack{comp.front()};
            seen[comp.front()] = 1;
            Value taken = 0;
            while (!stack.empty() && taken < budget) {
                VertexId v = stack.back();
                stack.pop_back();
                picks.push_back(v);
                ++taken;
                const auto& nb = inst.graph.out_neighbors(v);
                for (auto it = nb.rbegin(); it != nb.rend(); ++it)
                    if (in_comp[*it] && !seen[*it]) { seen[*it] = 1; stack.push_back(*it); }
            }
        }
        break;
    }
    std::sort(picks.begin(), picks.end());

    Additive1Result out;
    Evaluation ev = evaluate(inst, Variant::Relaxed1N, picks);
    out.result.best_profit = ev.profit;
    out.result.decision = ev.profit >= inst.d;
    out.result.witness = picks;
    out.result.exact = false;
    out.result.frontier = ParetoList::for_optimization(inst.s);
    out.result.frontier.insert({0, 0});
    out.result.frontier.insert({ev.weight, ev.profit});
    if (compute_gap && inst.n() <= 25) {
        SolveResult opt = brute_force(inst, Variant::Relaxed1N);
        out.gap = opt.best_profit - ev.profit;
    }
    return out;
}

} // namespace nk
