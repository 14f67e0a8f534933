#ifndef NK_TOOLKIT_FORMAT_HPP
#define NK_TOOLKIT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "nk/instance.hpp"
#include "nk/treedecomp.hpp"

namespace nk {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Line-oriented instance format:
//   nk 1
//   directed 0|1
//   n <count>
//   vertex <id> <weight> <profit>
//   edge <u> <v>
//   knapsack <s>
//   demand <d>
// '#' lines are comments; keys after the magic line may appear in any order.
// serialize_instance emits the canonical ordering above (vertices ascending,
// edges lexicographic) and round-trips bit-exactly with parse_instance.
Instance parse_instance(const std::string& text);
std::string serialize_instance(const Instance& inst);

// `solution <k>` followed by k `pick <id>` lines; ids distinct.
std::vector<VertexId> parse_solution(const std::string& text);
std::string serialize_solution(const std::vector<VertexId>& picks);

// PACE-style decomposition files (1-based vertex and bag ids):
//   s td <#bags> <max bag size> <#vertices>
//   b <bag id> <v...>
//   <bag u> <bag v>
TreeDecomposition parse_td(const std::string& text);
std::string serialize_td(const TreeDecomposition& td, VertexId n);

} // namespace nk

#endif
