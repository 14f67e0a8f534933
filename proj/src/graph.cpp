#include "nk/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace nk {

Graph::Graph(VertexId n, bool directed, std::vector<Edge> edges)
    : n_(n), directed_(directed), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!directed_) {
        for (auto& [u, v] : edges_)
            if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    out_.assign(static_cast<std::size_t>(n_), {});
    if (directed_) in_.assign(static_cast<std::size_t>(n_), {});
    for (const auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) continue; // validation reports
        if (directed_) {
            out_[u].push_back(v);
            in_[v].push_back(u);
        } else {
            out_[u].push_back(v);
            if (u != v) out_[v].push_back(u);
        }
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = out_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool Graph::any_self_loop() const {
    for (const auto& [u, v] : edges_)
        if (u == v) return true;
    return false;
}

Graph Graph::underlying_undirected() const {
    std::vector<Edge> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) {
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        es.emplace_back(u, v);
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    return Graph(n_, false, std::move(es));
}

} // namespace nk
