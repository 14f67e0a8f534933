#ifndef NK_ORACLE_HPP
#define NK_ORACLE_HPP

#include <optional>
#include <vector>

#include "nk/instance.hpp"
#include "nk/pareto.hpp"

namespace nk {

struct Evaluation {
    std::vector<VertexId> selected;   // S, sorted
    std::vector<VertexId> profitable; // P subseteq S, sorted
    Value weight = 0;                 // sum of w over S
    Value profit = 0;                 // sum of p over P
    bool hard_feasible = false;       // P == S
};

struct SolveResult {
    Value best_profit = 0;
    bool decision = false; // best_profit >= d among weight-feasible solutions
    std::optional<std::vector<VertexId>> witness;
    ParetoList frontier;
    bool exact = true; // false for solvers that may under-report
};

enum class FrontierMode { Optimization, Decision };

// P under the variant's rule: 1N keeps v in S with a selected (out-)neighbor
// or an empty (out-)neighborhood; All-N keeps v with all (out-)neighbors
// selected. Self-loops behave as literal set membership (a selected looped
// vertex witnesses itself).
std::vector<VertexId> profitable_set(const Instance& inst, Variant variant,
                                     const std::vector<VertexId>& selected);

Evaluation evaluate(const Instance& inst, Variant variant,
                    const std::vector<VertexId>& selected);

// True iff weight <= s, profit >= d, and for hard variants P == S.
bool decide(const Instance& inst, Variant variant,
            const std::vector<VertexId>& selected);

// Exhaustive ground truth over all 2^n subsets. Hard variants range over
// hard-feasible subsets only. Ties: higher profit, then lower weight, then
// lexicographically smallest vertex set. Throws when n exceeds the guard.
// max_solution_size restricts to subsets of at most that many vertices.
SolveResult brute_force(const Instance& inst, Variant variant,
                        FrontierMode mode = FrontierMode::Optimization,
                        int guard = 25,
                        std::optional<int> max_solution_size = std::nullopt);

} // namespace nk

#endif
