#ifndef NK_TREEDECOMP_HPP
#define NK_TREEDECOMP_HPP

#include <string>
#include <utility>
#include <vector>

#include "nk/graph.hpp"

namespace nk {

struct TreeDecomposition {
    std::vector<std::vector<VertexId>> bags;   // sorted vertex lists
    std::vector<std::pair<int, int>> tree_edges; // over bag indices

    int width() const {
        std::size_t m = 0;
        for (const auto& b : bags) m = std::max(m, b.size());
        return static_cast<int>(m) - 1;
    }
};

struct TdReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks the decomposition axioms against the graph (directions ignored):
// the node tree is a tree, bags cover every vertex, some bag contains both
// endpoints of every edge, and each vertex's occurrence nodes are connected.
TdReport validate_td(const Graph& g, const TreeDecomposition& td);

// Min-fill elimination ordering; ties broken by smallest vertex id, so the
// result is deterministic for a fixed vertex numbering. Valid on any graph;
// width <= 1 on forests.
TreeDecomposition heuristic_td(const Graph& g);

enum class NodeKind { Leaf, Introduce, Forget, Join };

struct NiceNode {
    NodeKind kind = NodeKind::Leaf;
    VertexId vertex = -1; // introduced / forgotten vertex
    std::vector<VertexId> bag; // sorted
    std::vector<int> children;
};

// Rooted nice decomposition: Leaf and root bags are the designated base bag
// (empty until augmented), introduces and forgets change one vertex, joins
// have two children with identical bags.
struct NiceTreeDecomposition {
    std::vector<NiceNode> nodes;
    int root = -1;

    int width() const {
        std::size_t m = 0;
        for (const auto& nd : nodes) m = std::max(m, nd.bag.size());
        return static_cast<int>(m) - 1;
    }
};

// Converts a valid decomposition to nice form with the same width and
// O(width * n) nodes. Throws on an invalid input decomposition.
NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td);

// Adds v to every bag. Introduce(v)/Forget(v) nodes collapse away, so the
// root and every leaf end up with bag {v}. Width grows by at most one.
NiceTreeDecomposition augment_all_bags(const NiceTreeDecomposition& ntd, VertexId v);

// Axioms plus the per-kind structural rules.
TdReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd);

// Underlying plain decomposition (for axiom checks / width comparisons).
TreeDecomposition to_plain(const NiceTreeDecomposition& ntd);

} // namespace nk

#endif
