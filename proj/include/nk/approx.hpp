#ifndef NK_APPROX_HPP
#define NK_APPROX_HPP

#include <optional>

#include "nk/instance.hpp"
#include "nk/oracle.hpp"

namespace nk {

struct SccDecomposition {
    std::vector<int> component_of;                 // per vertex
    std::vector<std::vector<VertexId>> components; // size desc, tie: min member asc
};

SccDecomposition strongly_connected_components(const Graph& g);

// Exact linear-time solver for uniform (all weights and profits 1) undirected
// self-loop-free instances: isolated vertices are unit picks, components of
// size >= 2 are grown connectedly, and a single stranded unit is avoided
// whenever the component sizes allow it.
SolveResult solve_uniform_undirected(const Instance& inst);

struct Additive1Result {
    SolveResult result;
    std::optional<Value> gap; // OPT - profit, when the oracle is affordable
};

// Uniform directed: packs whole strongly connected components largest-first,
// then takes a DFS-preorder prefix of the first component that does not fit.
// Profit is at least OPT - 1 when every component has size >= 2.
Additive1Result solve_uniform_directed_additive1(const Instance& inst,
                                                 bool compute_gap = false);

} // namespace nk

#endif
