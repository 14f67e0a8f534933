#ifndef NK_COLORCODE_HPP
#define NK_COLORCODE_HPP

#include <cstdint>
#include <vector>

#include "nk/instance.hpp"
#include "nk/oracle.hpp"

namespace nk {

// Color-coding solvers for the 1-neighborhood variants, parameterized by the
// structure budget b: colorful tree components are embedded per coloring,
// candidate vertex sets are reconstructed and scored under the sink-augmented
// semantics, so no reported pair can exceed a value realized by a real set.
// Requires at most 64 vertices after sink augmentation.

struct EdgeColoring {
    int b = 0;
    std::vector<int> color; // per edge index of graph.edges(), values in [1, b]
};

// Disjoint nonempty color blocks; one block per solution component. A block
// of k colors stands for a tree component on k+1 vertices.
struct ColorPartition {
    std::vector<std::vector<int>> blocks; // each sorted; ordered by first color

    int vertex_total() const {
        int t = 0;
        for (const auto& blk : blocks) t += static_cast<int>(blk.size()) + 1;
        return t;
    }
};

// Rooted tree over one block: node 0 is the root, node i+1 carries colors[i]
// as the color of its parent edge. Embedded edges run child -> parent.
struct TreeShape {
    std::vector<int> colors;  // sorted
    std::vector<int> parent;  // parent[i] = node id (0 = root, j+1 = colors[j])
};

// Sink-augments the instance (see add_sink_dummies); directed input only.
SinkAugmentation preprocess_cc(const Instance& inst);

// Independent uniform color per edge, deterministic for a given seed.
EdgeColoring random_coloring(const Graph& g, int b, std::uint64_t seed);

// Every partition of every nonempty subset of [1..b] into nonempty blocks
// whose vertex total (sum of block size + 1) fits max_vertices.
std::vector<ColorPartition> enumerate_partitions(int b, int max_vertices);

// Every rooted tree on |block|+1 anonymous nodes with parent edges labeled
// bijectively by the block; count is (k+1)^(k-1) for k colors.
std::vector<TreeShape> enumerate_shapes(const std::vector<int>& block);

// Undominated (weight, profit) pairs over all embeddings of the shape:
// each shape edge maps to a graph edge of its color (child -> parent),
// distinct nodes map to distinct vertices, profit counts every vertex with an
// outgoing embedded edge, never the component root.
ParetoList colorful_dp(const Instance& inst, const EdgeColoring& coloring,
                       const TreeShape& shape);

// Left fold of pareto combine with zero offsets.
ParetoList merge_components(const std::vector<ParetoList>& lists, Value s);

enum class CcMode { Exhaustive, Family };

struct CcOutcome {
    SolveResult result;     // witness scored on the original instance
    Value capped_claim = 0; // best claim under sink-augmented semantics
    int budget = 0;         // b, counted on the augmented graph
    int dummy_count = 0;
    bool exhaustive = false;
    std::uint64_t colorings_tried = 0;
};

// Best solution found over `trials` independent random colorings; sound
// (never over-reports), monotone in trials, reproducible per seed.
CcOutcome solve_randomized(const Instance& inst, Variant variant, int b,
                           int trials, std::uint64_t seed);

// Exhaustive mode iterates all b^m colorings (requires b^m <= budget_cap) and
// equals the size-b-capped brute force on the sink-augmented instance.
// Family mode iterates a small deterministic coloring family; best effort.
CcOutcome solve_deterministic(const Instance& inst, Variant variant, int b,
                              CcMode mode,
                              std::uint64_t budget_cap = 2'000'000);

// Demand-parameterized wrapper with b = 2d; the decision answer is exact when
// the exhaustive mode is affordable.
CcOutcome solve_by_demand(const Instance& inst, Variant variant,
                          std::uint64_t budget_cap = 2'000'000,
                          int trials = 1000, std::uint64_t seed = 1);

} // namespace nk

#endif
