#ifndef NK_GRAPH_HPP
#define NK_GRAPH_HPP

#include <utility>
#include <vector>

#include "nk/types.hpp"

namespace nk {

using Edge = std::pair<VertexId, VertexId>;

// Simple graph, directed or undirected, over dense vertex ids [0, n).
// Undirected edges are stored canonically with u <= v, sorted. Self-loops are
// allowed (preprocessing removes them). Parallel edges are invalid but kept in
// the stored list so validation can report them.
class Graph {
public:
    Graph() = default;
    Graph(VertexId n, bool directed, std::vector<Edge> edges);

    VertexId vertex_count() const { return n_; }
    bool directed() const { return directed_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Out-neighbors when directed, neighbors otherwise.
    const std::vector<VertexId>& out_neighbors(VertexId v) const { return out_[v]; }
    // In-neighbors when directed, neighbors otherwise.
    const std::vector<VertexId>& in_neighbors(VertexId v) const {
        return directed_ ? in_[v] : out_[v];
    }

    bool has_edge(VertexId u, VertexId v) const;
    bool has_self_loop(VertexId v) const { return has_edge(v, v); }
    bool any_self_loop() const;

    // Underlying undirected view (directions and self-loops dropped).
    Graph underlying_undirected() const;

private:
    VertexId n_ = 0;
    bool directed_ = false;
    std::vector<Edge> edges_;              // canonical, sorted
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_; // directed only
};

} // namespace nk

#endif
