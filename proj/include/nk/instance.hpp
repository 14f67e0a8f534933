#ifndef NK_INSTANCE_HPP
#define NK_INSTANCE_HPP

#include <string>
#include <vector>

#include "nk/graph.hpp"
#include "nk/types.hpp"

namespace nk {

// A problem instance: vertex-weighted/profited graph with a knapsack size s
// and a demand d. Immutable after construction; safe to share across threads.
struct Instance {
    Graph graph;
    std::vector<Value> weight; // per vertex, >= 0
    std::vector<Value> profit; // per vertex, >= 0
    Value s = 0;
    Value d = 0;
    std::string meta;

    VertexId n() const { return graph.vertex_count(); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Reports every invariant violation: length mismatches, negative values,
// out-of-range edge endpoints, parallel edges.
ValidationReport validate_instance(const Instance& inst);

// Out-neighbors when directed, neighbors otherwise. Throws on out-of-range v.
const std::vector<VertexId>& neighbors(const Instance& inst, VertexId v);

// Removes self-loops, preserving the optimum of the given variant:
//   - undirected 1N: replace loop {v,v} with an edge to a fresh zero vertex
//   - directed 1N:   drop all outgoing edges of the looped vertex
//   - All-N:         drop the loop only
Instance normalize_self_loops(const Instance& inst, Variant variant);

struct SinkAugmentation {
    Instance instance;
    std::vector<VertexId> vertex_map; // original id -> augmented id (identity)
    std::vector<VertexId> dummies;    // appended dummy ids
    std::vector<VertexId> dummy_owner; // dummy_owner[i] is the sink dummies[i] serves
};

// Attaches a fresh zero-weight zero-profit out-neighbor to every sink of a
// directed, self-loop-free instance. Each dummy also gets a back edge to its
// owner so the result itself has no sinks and the operation is idempotent.
SinkAugmentation add_sink_dummies(const Instance& inst);

} // namespace nk

#endif
