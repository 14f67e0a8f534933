#include "nk/instance.hpp"

#include <set>
#include <stdexcept>

namespace nk {

ValidationReport validate_instance(const Instance& inst) {
    ValidationReport rep;
    const VertexId n = inst.graph.vertex_count();
    if (static_cast<VertexId>(inst.weight.size()) != n)
        rep.violations.push_back("weight vector length mismatch");
    if (static_cast<VertexId>(inst.profit.size()) != n)
        rep.violations.push_back("profit vector length mismatch");
    for (std::size_t i = 0; i < inst.weight.size(); ++i)
        if (inst.weight[i] < 0)
            rep.violations.push_back("negative weight at vertex " + std::to_string(i));
    for (std::size_t i = 0; i < inst.profit.size(); ++i)
        if (inst.profit[i] < 0)
            rep.violations.push_back("negative profit at vertex " + std::to_string(i));
    if (inst.s < 0) rep.violations.push_back("negative knapsack size");
    if (inst.d < 0) rep.violations.push_back("negative demand");

    const auto& edges = inst.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n) {
            rep.violations.push_back("dangling edge endpoint (" + std::to_string(u) +
                                     "," + std::to_string(v) + ")");
            continue;
        }
        if (i > 0 && edges[i] == edges[i - 1])
            rep.violations.push_back("parallel edge (" + std::to_string(u) + "," +
                                     std::to_string(v) + ")");
    }
    return rep;
}

const std::vector<VertexId>& neighbors(const Instance& inst, VertexId v) {
    if (v < 0 || v >= inst.graph.vertex_count())
        throw std::invalid_argument("vertex out of range");
    return inst.graph.out_neighbors(v);
}

Instance normalize_self_loops(const Instance& inst, Variant variant) {
    const VertexId n = inst.n();
    std::vector<VertexId> looped;
    for (VertexId v = 0; v < n; ++v)
        if (inst.graph.has_self_loop(v)) looped.push_back(v);
    if (looped.empty()) return inst;

    std::vector<Edge> edges;
    std::vector<Value> w = inst.weight;
    std::vector<Value> p = inst.profit;
    VertexId next_id = n;

    if (is_one_neighbor(variant) && !inst.graph.directed()) {
        // Loop {v,v} becomes an edge to a fresh zero vertex.
        for (auto [u, v] : inst.graph.edges())
            if (u != v) edges.emplace_back(u, v);
        for (VertexId v : looped) {
            edges.emplace_back(v, next_id);
            w.push_back(0);
            p.push_back(0);
            ++next_id;
        }
    } else if (is_one_neighbor(variant) && inst.graph.directed()) {
        // Looped vertices lose all outgoing edges and become sinks.
        std::set<VertexId> drop(looped.begin(), looped.end());
        for (auto [u, v] : inst.graph.edges())
            if (u != v && !drop.count(u)) edges.emplace_back(u, v);
    } else {
        for (auto [u, v] : inst.graph.edges())
            if (u != v) edges.emplace_back(u, v);
    }

    Instance out;
    out.graph = Graph(next_id, inst.graph.directed(), std::move(edges));
    out.weight = std::move(w);
    out.profit = std::move(p);
    out.s = inst.s;
    out.d = inst.d;
    out.meta = inst.meta;
    return out;
}

SinkAugmentation add_sink_dummies(const Instance& inst) {
    if (!inst.graph.directed())
        throw std::invalid_argument("sink dummies require a directed instance");
    if (inst.graph.any_self_loop())
        throw std::invalid_argument("sink dummies require a self-loop-free instance");

    const VertexId n = inst.n();
    SinkAugmentation aug;
    aug.vertex_map.resize(n);
    for (VertexId v = 0; v < n; ++v) aug.vertex_map[v] = v;

    std::vector<Edge> edges = inst.graph.edges();
    std::vector<Value> w = inst.weight;
    std::vector<Value> p = inst.profit;
    VertexId next_id = n;
    for (VertexId v = 0; v < n; ++v) {
        if (!inst.graph.out_neighbors(v).empty()) continue;
        edges.emplace_back(v, next_id);
        edges.emplace_back(next_id, v); // keeps the result sink-free
        aug.dummies.push_back(next_id);
        aug.dummy_owner.push_back(v);
        w.push_back(0);
        p.push_back(0);
        ++next_id;
    }

    aug.instance.graph = Graph(next_id, true, std::move(edges));
    aug.instance.weight = std::move(w);
    aug.instance.profit = std::move(p);
    aug.instance.s = inst.s;
    aug.instance.d = inst.d;
    aug.instance.meta = inst.meta;
    return aug;
}

} // namespace nk
