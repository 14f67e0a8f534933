#ifndef NK_DP_TW_HPP
#define NK_DP_TW_HPP

#include <optional>
#include <unordered_map>

#include "nk/instance.hpp"
#include "nk/oracle.hpp"
#include "nk/treedecomp.hpp"

namespace nk {

// Treewidth dynamic program over a nice decomposition augmented with a guessed
// vertex. Cells are keyed by (S, P): S the selected bag subset, P the subset
// of S whose profit is already counted. Profit membership is tracked so every
// stored pair is realized by an actual partial solution:
//   - 1N variants: a vertex enters P only with a selected bag out-neighbor or
//     a globally empty out-neighborhood; vertices waiting on a witness are
//     promoted when the witness is introduced (late activation).
//   - All-N variants: a vertex whose bag out-neighbors are all selected may
//     enter P optimistically or stay out; introducing an unselected
//     out-neighbor of a P member kills that state, its pessimistic twin
//     carries the solution on.
// Hard variants discard states whose forgotten vertex never satisfied its
// condition; all of a vertex's edges are present by forget time.
namespace dp {

// Bag-subset masks, bit i of a mask <-> bag[i]. S in the low 32 bits.
using StateKey = std::uint64_t;
using Table = std::unordered_map<StateKey, ParetoList>;

inline StateKey make_key(std::uint32_t s_mask, std::uint32_t p_mask) {
    return (static_cast<StateKey>(s_mask) << 32) | p_mask;
}
inline std::uint32_t s_mask(StateKey k) { return static_cast<std::uint32_t>(k >> 32); }
inline std::uint32_t p_mask(StateKey k) { return static_cast<std::uint32_t>(k); }

struct Context {
    const Instance* inst = nullptr;
    Variant variant = Variant::Relaxed1N;
    VertexId guess = -1;       // vertex pinned into every bag
    bool anchor_minimum = false; // restrict to solutions whose minimum vertex is the guess
    Value cap = 0;
    std::optional<Value> clamp; // demand, in decision mode

    ParetoList empty_list() const {
        return clamp ? ParetoList::for_decision(cap, *clamp)
                     : ParetoList::for_optimization(cap);
    }
};

Table dp_leaf(const Context& ctx);
Table dp_introduce(const Context& ctx, const Table& child,
                   const std::vector<VertexId>& child_bag, VertexId u);
Table dp_forget(const Context& ctx, const Table& child,
                const std::vector<VertexId>& child_bag, VertexId u);
Table dp_join(const Context& ctx, const Table& left, const Table& right,
              const std::vector<VertexId>& bag);

} // namespace dp

// Optimum over the empty solution and, for each guessed vertex v, the root
// cells of the augmented DP. Equals the brute-force optimum; also returns the
// merged Pareto frontier. Uses heuristic_td when no decomposition is given.
// Requires a valid, self-loop-free instance.
SolveResult solve_treewidth(const Instance& inst, Variant variant,
                            FrontierMode mode = FrontierMode::Optimization,
                            const std::optional<TreeDecomposition>& td = std::nullopt);

} // namespace nk

#endif
