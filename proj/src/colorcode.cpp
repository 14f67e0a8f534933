#include "nk/colorcode.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "nk/rng.hpp"

namespace nk {

SinkAugmentation preprocess_cc(const Instance& inst) {
    return add_sink_dummies(inst);
}

EdgeColoring random_coloring(const Graph& g, int b, std::uint64_t seed) {
    if (b < 1) throw std::invalid_argument("coloring needs at least one color");
    EdgeColoring col;
    col.b = b;
    col.color.reserve(g.edge_count());
    SplitMix64 rng(seed);
    for (std::size_t i = 0; i < g.edge_count(); ++i)
        col.color.push_back(static_cast<int>(rng.next_below(b)) + 1);
    return col;
}

std::vector<ColorPartition> enumerate_partitions(int b, int max_vertices) {
    if (b < 1) throw std::invalid_argument("enumerate_partitions: b must be positive");
    std::vector<ColorPartition> out;
    for (std::uint32_t subset = 1; subset < (1u << b); ++subset) {
        std::vector<int> colors;
        for (int c = 0; c < b; ++c)
            if (subset & (1u << c)) colors.push_back(c + 1);
        const int e = static_cast<int>(colors.size());

        // Set partitions via restricted growth strings.
        std::vector<int> label(e, 0);
        while (true) {
            int k = *std::max_element(label.begin(), label.end()) + 1;
            if (e + k <= max_vertices) {
                ColorPartition part;
                part.blocks.assign(k, {});
                for (int i = 0; i < e; ++i) part.blocks[label[i]].push_back(colors[i]);
                out.push_back(std::move(part));
            }
            int i = e - 1;
            for (; i > 0; --i) {
                int cap = *std::max_element(label.begin(), label.begin() + i) + 1;
                if (label[i] < cap) { ++label[i]; break; }
                label[i] = 0;
            }
            if (i == 0) break;
        }
    }
    return out;
}

std::vector<TreeShape> enumerate_shapes(const std::vector<int>& block) {
    if (block.empty()) throw std::invalid_argument("enumerate_shapes: empty block");
    std::vector<int> colors = block;
    std::sort(colors.begin(), colors.end());
    const int k = static_cast<int>(colors.size());

    std::vector<TreeShape> out;
    std::vector<int> parent(k, 0); // candidate parents: 0 (root) or j+1, j != i
    while (true) {
        // Acyclic iff every node reaches the root.
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
            int steps = 0, at = i + 1;
            while (at != 0 && steps <= k) {
                at = parent[at - 1];
                ++steps;
            }
            ok = at == 0;
        }
        if (ok) out.push_back({colors, parent});

        int i = k - 1;
        for (; i >= 0; --i) {
            ++parent[i];
            if (parent[i] == i + 1) ++parent[i]; // a node cannot parent itself
            if (parent[i] <= k) break;
            parent[i] = 0;
        }
        if (i < 0) break;
    }
    return out;
}

namespace {

constexpr std::size_t kMaskCap = 4'000'000;

struct EmbedContext {
    const Graph* graph = nullptr;
    int b = 0;
    // in_colored[v][c-1]: in-neighbors of v via an edge colored c;
    // in_wild[v]: in-neighbors via a wildcard edge (matches every color).
    std::vector<std::vector<std::vector<VertexId>>> in_colored;
    std::vector<std::vector<VertexId>> in_wild;

    void prepare(const Graph& g, const EdgeColoring& col,
                 const std::vector<char>& wildcard_edge) {
        graph = &g;
        b = col.b;
        const VertexId n = g.vertex_count();
        in_colored.assign(n, std::vector<std::vector<VertexId>>(b));
        in_wild.assign(n, {});
        const auto& edges = g.edges();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (!wildcard_edge.empty() && wildcard_edge[e])
                in_wild[v].push_back(u);
            else
                in_colored[v][col.color[e] - 1].push_back(u);
        }
    }
};

// All vertex-set masks of embeddings of the shape's subtree rooted at each
// node; node images within one embedding are pairwise distinct.
struct ShapeEmbedder {
    const EmbedContext& ec;
    const TreeShape& shape;
    std::vector<std::vector<int>> children; // by node id
    std::size_t produced = 0;

    ShapeEmbedder(const EmbedContext& e, const TreeShape& s) : ec(e), shape(s) {
        children.assign(shape.colors.size() + 1, {});
        for (std::size_t i = 0; i < shape.parent.size(); ++i)
            children[shape.parent[i]].push_back(static_cast<int>(i) + 1);
    }

    std::vector<std::vector<std::vector<std::uint64_t>>> run() {
        const VertexId n = ec.graph->vertex_count();
        const int nodes = static_cast<int>(shape.colors.size()) + 1;
        std::vector<std::vector<std::vector<std::uint64_t>>> D(
            nodes, std::vector<std::vector<std::uint64_t>>(n));

        // Children before parents.
        std::vector<int> order;
        std::vector<int> st{0};
        while (!st.empty()) {
            int nd = st.back();
            st.pop_back();
            order.push_back(nd);
            for (int c : children[nd]) st.push_back(c);
        }
        std::reverse(order.begin(), order.end());

        for (int nd : order) {
            for (VertexId x = 0; x < n; ++x) {
                std::vector<std::uint64_t> cur{1ULL << x};
                for (int c : children[nd]) {
                    const int col = shape.colors[c - 1];
                    std::vector<std::uint64_t> next;
                    auto extend = [&](VertexId y) {
                        for (std::uint64_t m : D[c][y]) {
                            for (std::uint64_t base : cur)
                                if ((base & m) == 0) next.push_back(base | m);
                        }
                    };
                    for (VertexId y : ec.in_colored[x][col - 1]) extend(y);
                    for (VertexId y : ec.in_wild[x]) extend(y);
                    std::sort(next.begin(), next.end());
                    next.erase(std::unique(next.begin(), next.end()), next.end());
                    cur = std::move(next);
                    if (cur.empty()) break;
                }
                produced += cur.size();
                if (produced > kMaskCap)
                    throw std::runtime_error(
                        "color coding state limit exceeded; reduce the budget");
                D[nd][x] = std::move(cur);
            }
        }
        return D;
    }
};

// Union over shapes of root-level embedding masks.
std::vector<std::uint64_t> block_masks(const EmbedContext& ec,
                                       const std::vector<TreeShape>& shapes) {
    std::vector<std::uint64_t> out;
    for (const auto& shape : shapes) {
        ShapeEmbedder emb(ec, shape);
        auto D = emb.run();
        for (const auto& per_vertex : D[0])
            out.insert(out.end(), per_vertex.begin(), per_vertex.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

ParetoList colorful_dp(const Instance& inst, const EdgeColoring& coloring,
                       const TreeShape& shape) {
    EmbedContext ec;
    ec.prepare(inst.graph, coloring, {});
    ShapeEmbedder emb(ec, shape);
    auto D = emb.run();

    ParetoList out = ParetoList::for_optimization(inst.s);
    for (VertexId root = 0; root < inst.n(); ++root) {
        for (std::uint64_t mask : D[0][root]) {
            Value w = 0, p = 0;
            std::uint64_t m = mask;
            while (m) {
                int v = __builtin_ctzll(m);
                m &= m - 1;
                w = checked_add(w, inst.weight[v]);
                p = checked_add(p, inst.profit[v]);
            }
            p -= inst.profit[root]; // the root owns no outgoing embedded edge
            out.insert({w, p});
        }
    }
    return out;
}

ParetoList merge_components(const std::vector<ParetoList>& lists, Value s) {
    ParetoList acc = ParetoList::for_optimization(s);
    if (lists.empty()) return acc;
    acc = lists.front();
    for (std::size_t i = 1; i < lists.size(); ++i)
        acc = ParetoList::combine(acc, lists[i], 0, 0);
    return acc;
}

namespace {

struct CcEngine {
    const Instance* original = nullptr;
    Variant variant = Variant::Relaxed1N;
    SinkAugmentation aug;
    int b = 0;
    std::vector<char> wildcard_edge; // dummy-incident edges match any color
    std::vector<std::uint64_t> out_mask; // per augmented vertex
    std::uint64_t dummy_mask = 0;
    std::vector<ColorPartition> partitions;
    std::unordered_map<std::uint32_t, std::vector<TreeShape>> shapes_by_block;
    std::unordered_map<std::uint32_t, std::vector<std::uint64_t>> masks_by_block;
    std::unordered_set<std::uint64_t> claims{0};
    std::uint64_t colorings_tried = 0;
    std::size_t real_edges = 0;

    void init(const Instance& inst, Variant var, int budget) {
        if (!inst.graph.directed())
            throw std::invalid_argument("color coding requires a directed instance");
        if (!is_one_neighbor(var))
            throw std::invalid_argument("color coding supports the 1-neighborhood variants");
        if (budget < 2) throw std::invalid_argument("budget must be at least 2");
        if (budget > 16)
            throw std::invalid_argument("budget too large for color coding (max 16)");
        if (inst.graph.any_self_loop())
            throw std::invalid_argument("normalize self-loops first");
        original = &inst;
        variant = var;
        b = budget;
        aug = add_sink_dummies(inst);
        const VertexId n = aug.instance.n();
        if (n > 64)
            throw std::invalid_argument("color coding limited to 64 vertices after "
                                        "sink augmentation");
        for (VertexId d : aug.dummies) dummy_mask |= 1ULL << d;
        out_mask.assign(n, 0);
        for (VertexId v = 0; v < n; ++v)
            for (VertexId x : aug.instance.graph.out_neighbors(v))
                out_mask[v] |= 1ULL << x;

        const auto& edges = aug.instance.graph.edges();
        wildcard_edge.assign(edges.size(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            bool dummy = ((1ULL << u) & dummy_mask) || ((1ULL << v) & dummy_mask);
            wildcard_edge[e] = dummy ? 1 : 0;
            if (!dummy) ++real_edges;
        }

        partitions = enumerate_partitions(b, b);
        for (const auto& part : partitions) {
            for (const auto& blk : part.blocks) {
                std::uint32_t key = 0;
                for (int c : blk) key |= 1u << (c - 1);
                if (!shapes_by_block.count(key)) shapes_by_block[key] = enumerate_shapes(blk);
            }
        }
    }

    void process_coloring(const EdgeColoring& col) {
        ++colorings_tried;
        EmbedContext ec;
        ec.prepare(aug.instance.graph, col, wildcard_edge);
        masks_by_block.clear();

        for (const auto& part : partitions) {
            std::vector<std::uint64_t> acc{0};
            bool dead = false;
            for (const auto& blk : part.blocks) {
                std::uint32_t key = 0;
                for (int c : blk) key |= 1u << (c - 1);
                auto it = masks_by_block.find(key);
                if (it == masks_by_block.end())
                    it = masks_by_block.emplace(key, block_masks(ec, shapes_by_block[key]))
                             .first;
                const auto& bm = it->second;
                if (bm.empty()) { dead = true; break; }
                std::vector<std::uint64_t> next;
                next.reserve(acc.size() * bm.size());
                for (std::uint64_t a : acc)
                    for (std::uint64_t m : bm) next.push_back(a | m);
                std::sort(next.begin(), next.end());
                next.erase(std::unique(next.begin(), next.end()), next.end());
                if (next.size() > kMaskCap)
                    throw std::runtime_error(
                        "color coding state limit exceeded; reduce the budget");
                acc = std::move(next);
            }
            if (dead) continue;
            for (std::uint64_t m : acc) {
                claims.insert(m);
                if (claims.size() > kMaskCap)
                    throw std::runtime_error(
                        "color coding claim limit exceeded; reduce the budget");
            }
        }
    }

    // Weight and profit of the claimed set under the sink-augmented
    // semantics; sinks earn profit only together with their dummy.
    std::optional<WeightProfit> score(std::uint64_t mask) const {
        const Instance& ai = aug.instance;
        Value w = 0, p = 0;
        bool all_profitable = true;
        std::uint64_t m = mask;
        while (m) {
            int v = __builtin_ctzll(m);
            m &= m - 1;
            w = checked_add(w, ai.weight[v]);
            if (out_mask[v] & mask)
                p = checked_add(p, ai.profit[v]);
            else
                all_profitable = false;
        }
        if (w > ai.s) return std::nullopt;
        if (is_hard(variant) && !all_profitable) return std::nullopt;
        return WeightProfit{w, p};
    }

    CcOutcome finish() const {
        CcOutcome out;
        out.budget = b;
        out.dummy_count = static_cast<int>(aug.dummies.size());
        out.colorings_tried = colorings_tried;
        out.result.frontier = ParetoList::for_optimization(original->s);
        out.result.exact = false;

        std::vector<std::uint64_t> ordered(claims.begin(), claims.end());
        std::sort(ordered.begin(), ordered.end());

        std::uint64_t best_mask = 0;
        Value best_claim = -1, best_w = 0;
        for (std::uint64_t mask : ordered) {
            auto sc = score(mask);
            if (!sc) continue;
            out.result.frontier.insert(*sc);
            if (sc->profit > best_claim ||
                (sc->profit == best_claim && sc->weight < best_w)) {
                best_claim = sc->profit;
                best_w = sc->weight;
                best_mask = mask;
            }
        }
        out.capped_claim = std::max<Value>(best_claim, 0);

        std::vector<VertexId> witness;
        std::uint64_t m = best_mask & ~dummy_mask;
        while (m) {
            witness.push_back(__builtin_ctzll(m));
            m &= m - 1;
        }
        Evaluation ev = evaluate(*original, variant, witness);
        out.result.witness = witness;
        out.result.best_profit = std::max(out.capped_claim, ev.profit);
        out.result.decision = out.result.best_profit >= original->d;
        return out;
    }
};

} // namespace

CcOutcome solve_randomized(const Instance& inst, Variant variant, int b, int trials,
                           std::uint64_t seed) {
    CcEngine eng;
    eng.init(inst, variant, b);
    for (int t = 0; t < trials; ++t) {
        EdgeColoring col =
            random_coloring(eng.aug.instance.graph, b, SplitMix64::derive(seed, t));
        eng.process_coloring(col);
    }
    CcOutcome out = eng.finish();
    out.exhaustive = false;
    return out;
}

CcOutcome solve_deterministic(const Instance& inst, Variant variant, int b, CcMode mode,
                              std::uint64_t budget_cap) {
    CcEngine eng;
    eng.init(inst, variant, b);

    if (mode == CcMode::Exhaustive) {
        // Count colorings of real edges only; dummy-incident edges match any
        // color during embedding, which only enlarges the candidate set.
        std::uint64_t total = 1;
        for (std::size_t i = 0; i < eng.real_edges; ++i) {
            if (total > budget_cap / static_cast<std::uint64_t>(b))
                throw std::invalid_argument("exhaustive mode over budget: b^m too large");
            total *= static_cast<std::uint64_t>(b);
        }

        const auto& edges = eng.aug.instance.graph.edges();
        std::vector<std::size_t> real_idx;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!eng.wildcard_edge[e]) real_idx.push_back(e);

        EdgeColoring col;
        col.b = b;
        col.color.assign(edges.size(), 1);
        std::vector<int> odo(real_idx.size(), 0);
        while (true) {
            for (std::size_t i = 0; i < real_idx.size(); ++i)
                col.color[real_idx[i]] = odo[i] + 1;
            eng.process_coloring(col);
            std::size_t i = 0;
            for (; i < odo.size(); ++i) {
                if (++odo[i] < b) break;
                odo[i] = 0;
            }
            if (i == odo.size()) break;
        }
        CcOutcome out = eng.finish();
        out.exhaustive = true;
        return out;
    }

    // Family mode: multiplicative hashes into [b^2] composed with digit
    // mixers [b^2] -> [b]. Deterministic, best effort.
    static const std::uint64_t primes[] = {2,  3,  5,  7,  11, 13, 17, 19,
                                           23, 29, 31, 37, 41, 43, 47, 53};
    const std::uint64_t big_prime = 1'000'000'007ULL;
    const auto& edges = eng.aug.instance.graph.edges();
    for (std::uint64_t q : primes) {
        for (int t = 0; t <= b; ++t) {
            EdgeColoring col;
            col.b = b;
            col.color.resize(edges.size());
            for (std::size_t e = 0; e < edges.size(); ++e) {
                std::uint64_t y = ((e + 1) * q) % big_prime % (b * b);
                int d0 = static_cast<int>(y % b);
                int d1 = static_cast<int>(y / b);
                int c = t < b ? (d1 + t * d0) % b : d0;
                col.color[e] = c + 1;
            }
            eng.process_coloring(col);
        }
    }
    CcOutcome out = eng.finish();
    out.exhaustive = false;
    return out;
}

CcOutcome solve_by_demand(const Instance& inst, Variant variant,
                          std::uint64_t budget_cap, int trials, std::uint64_t seed) {
    if (inst.d < 1)
        throw std::invalid_argument("solve_by_demand requires a positive demand");
    if (inst.d > 8)
        throw std::invalid_argument("solve_by_demand: demand too large for color coding");
    const int b = static_cast<int>(inst.d) * 2;

    // Affordable exhaustive mode gives an exact decision answer.
    const std::size_t m = inst.graph.edge_count();
    long double total = 1;
    for (std::size_t i = 0; i < m && total <= budget_cap; ++i) total *= b;
    if (total <= budget_cap)
        return solve_deterministic(inst, variant, b, CcMode::Exhaustive, budget_cap);
    return solve_randomized(inst, variant, b, trials, seed);
}

} // namespace nk
