#include "nk/treedecomp.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>

namespace nk {

namespace {

bool bag_contains(const std::vector<VertexId>& bag, VertexId v) {
    return std::binary_search(bag.begin(), bag.end(), v);
}

std::string bag_to_string(const std::vector<VertexId>& bag) {
    std::string s = "{";
    for (std::size_t i = 0; i < bag.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(bag[i]);
    }
    return s + "}";
}

} // namespace

TdReport validate_td(const Graph& g, const TreeDecomposition& td) {
    TdReport rep;
    const int nodes = static_cast<int>(td.bags.size());
    if (nodes == 0) {
        if (g.vertex_count() > 0) rep.violations.push_back("no bags");
        return rep;
    }

    for (int i = 0; i < nodes; ++i)
        for (VertexId v : td.bags[i])
            if (v < 0 || v >= g.vertex_count())
                rep.violations.push_back("bag " + std::to_string(i) +
                                         " contains unknown vertex " + std::to_string(v));

    // Tree shape: exactly nodes-1 edges, connected.
    std::vector<std::vector<int>> adj(nodes);
    bool edges_ok = static_cast<int>(td.tree_edges.size()) == nodes - 1;
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes) {
            rep.violations.push_back("tree edge references unknown node");
            edges_ok = false;
            continue;
        }
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<char> seen(nodes, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 0;
    while (!q.empty()) {
        int t = q.front();
        q.pop();
        ++reached;
        for (int o : adj[t])
            if (!seen[o]) { seen[o] = 1; q.push(o); }
    }
    if (!edges_ok || reached != nodes)
        rep.violations.push_back("decomposition nodes do not form a tree");

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        bool found = false;
        for (const auto& bag : td.bags)
            if (bag_contains(bag, v)) { found = true; break; }
        if (!found)
            rep.violations.push_back("vertex " + std::to_string(v) + " uncovered");
    }

    for (auto [u, v] : g.edges()) {
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count()) continue;
        bool found = false;
        for (const auto& bag : td.bags)
            if (bag_contains(bag, u) && bag_contains(bag, v)) { found = true; break; }
        if (!found)
            rep.violations.push_back("edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} uncovered");
    }

    // Occurrence connectivity, only meaningful on a well-formed tree.
    if (edges_ok && reached == nodes) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            int start = -1, count = 0;
            for (int i = 0; i < nodes; ++i)
                if (bag_contains(td.bags[i], v)) {
                    if (start < 0) start = i;
                    ++count;
                }
            if (count <= 1) continue;
            std::vector<char> vis(nodes, 0);
            std::queue<int> bq;
            bq.push(start);
            vis[start] = 1;
            int got = 0;
            while (!bq.empty()) {
                int t = bq.front();
                bq.pop();
                ++got;
                for (int o : adj[t])
                    if (!vis[o] && bag_contains(td.bags[o], v)) { vis[o] = 1; bq.push(o); }
            }
            if (got != count)
                rep.violations.push_back("occurrences of " + std::to_string(v) +
                                         " disconnected");
        }
    }
    return rep;
}

TreeDecomposition heuristic_td(const Graph& g) {
    const Graph ug = g.underlying_undirected();
    const VertexId n = ug.vertex_count();
    TreeDecomposition td;
    if (n == 0) {
        td.bags.push_back({});
        return td;
    }

    std::vector<std::set<VertexId>> adj(n);
    for (auto [u, v] : ug.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }

    std::vector<char> gone(n, 0);
    std::vector<int> position(n, -1);
    std::vector<std::vector<VertexId>> elim_nbrs(n);
    std::vector<VertexId> order;
    order.reserve(n);

    for (VertexId step = 0; step < n; ++step) {
        VertexId best = -1;
        long best_fill = -1;
        for (VertexId v = 0; v < n; ++v) {
            if (gone[v]) continue;
            long fill = 0;
            const auto& nb = adj[v];
            for (auto it = nb.begin(); it != nb.end(); ++it)
                for (auto jt = std::next(it); jt != nb.end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best < 0 || fill < best_fill) {
                best = v;
                best_fill = fill;
            }
        }
        position[best] = step;
        order.push_back(best);
        elim_nbrs[best].assign(adj[best].begin(), adj[best].end());
        for (VertexId a : elim_nbrs[best])
            for (VertexId b : elim_nbrs[best])
                if (a < b) { adj[a].insert(b); adj[b].insert(a); }
        for (VertexId a : elim_nbrs[best]) adj[a].erase(best);
        adj[best].clear();
        gone[best] = 1;
    }

    td.bags.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        auto& bag = td.bags[position[v]];
        bag = elim_nbrs[v];
        bag.push_back(v);
        std::sort(bag.begin(), bag.end());
    }
    // Bag i hangs below the bag of its first-eliminated neighbor; bags whose
    // vertex was isolated at elimination attach to the final bag.
    for (int i = 0; i < n - 1; ++i) {
        VertexId v = order[i];
        int parent = n - 1;
        for (VertexId u : elim_nbrs[v]) parent = std::min(parent, position[u]);
        td.tree_edges.emplace_back(i, parent == i ? n - 1 : parent);
    }
    return td;
}

namespace {

struct NiceBuilder {
    std::vector<NiceNode> nodes;

    int add(NodeKind kind, VertexId vertex, std::vector<VertexId> bag,
            std::vector<int> children) {
        nodes.push_back({kind, vertex, std::move(bag), std::move(children)});
        return static_cast<int>(nodes.size()) - 1;
    }

    // Leaf -> introduce chain up to `bag`.
    int build_leaf_chain(const std::vector<VertexId>& bag) {
        int cur = add(NodeKind::Leaf, -1, {}, {});
        std::vector<VertexId> cur_bag;
        for (VertexId v : bag) {
            cur_bag.push_back(v);
            cur = add(NodeKind::Introduce, v, cur_bag, {cur});
        }
        return cur;
    }

    // Forget `from \ to`, then introduce `to \ from` above node `cur`.
    int morph(int cur, const std::vector<VertexId>& from, const std::vector<VertexId>& to) {
        std::vector<VertexId> bag = from;
        for (VertexId v : from) {
            if (bag_contains(to, v)) continue;
            bag.erase(std::find(bag.begin(), bag.end(), v));
            cur = add(NodeKind::Forget, v, bag, {cur});
        }
        for (VertexId v : to) {
            if (bag_contains(from, v)) continue;
            bag.insert(std::upper_bound(bag.begin(), bag.end(), v), v);
            cur = add(NodeKind::Introduce, v, bag, {cur});
        }
        return cur;
    }
};

} // namespace

NiceTreeDecomposition make_nice(const Graph& g, const TreeDecomposition& td) {
    TdReport rep = validate_td(g, td);
    if (!rep.ok())
        throw std::invalid_argument("make_nice: invalid decomposition: " +
                                    rep.violations.front());

    const int n_nodes = static_cast<int>(td.bags.size());
    std::vector<std::vector<int>> adj(n_nodes);
    for (auto [a, b] : td.tree_edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }

    NiceBuilder nb;
    // Iterative post-order from node 0.
    struct Frame { int node; int parent; std::size_t next_child; std::vector<int> branch_tops; };
    std::vector<Frame> stack;
    stack.push_back({0, -1, 0, {}});
    int built_root = -1;
    while (!stack.empty()) {
        Frame& f = stack.back();
        std::size_t scanned = 0;
        int descend = -1;
        for (std::size_t i = 0, k = 0; i < adj[f.node].size(); ++i) {
            int c = adj[f.node][i];
            if (c == f.parent) continue;
            if (k++ == f.next_child) { descend = c; break; }
            ++scanned;
        }
        (void)scanned;
        if (descend >= 0) {
            ++f.next_child;
            stack.push_back({descend, f.node, 0, {}});
            continue;
        }
        // All children done: combine branches at this bag.
        const auto& bag = td.bags[f.node];
        int top;
        if (f.branch_tops.empty()) {
            top = nb.build_leaf_chain(bag);
        } else {
            top = f.branch_tops[0];
            for (std::size_t i = 1; i < f.branch_tops.size(); ++i)
                top = nb.add(NodeKind::Join, -1, bag, {top, f.branch_tops[i]});
        }
        int node = f.node, parent = f.parent;
        stack.pop_back();
        if (parent < 0) {
            // Forget everything above the root bag.
            built_root = nb.morph(top, td.bags[node], {});
        } else {
            int branch = nb.morph(top, td.bags[node], td.bags[parent]);
            stack.back().branch_tops.push_back(branch);
        }
    }

    NiceTreeDecomposition out;
    out.nodes = std::move(nb.nodes);
    out.root = built_root;
    return out;
}

NiceTreeDecomposition augment_all_bags(const NiceTreeDecomposition& ntd, VertexId v) {
    NiceTreeDecomposition out;
    // Skip Introduce(v)/Forget(v): with v everywhere their bags equal the child's.
    std::vector<int> remap(ntd.nodes.size(), -1);
    // Children precede parents in a post-order walk.
    std::vector<int> order;
    order.reserve(ntd.nodes.size());
    std::vector<std::pair<int, bool>> st{{ntd.root, false}};
    while (!st.empty()) {
        auto [node, expanded] = st.back();
        st.pop_back();
        if (expanded) {
            order.push_back(node);
            continue;
        }
        st.push_back({node, true});
        for (int c : ntd.nodes[node].children) st.push_back({c, false});
    }
    for (int id : order) {
        const NiceNode& nd = ntd.nodes[id];
        if ((nd.kind == NodeKind::Introduce || nd.kind == NodeKind::Forget) &&
            nd.vertex == v) {
            remap[id] = remap[nd.children[0]];
            continue;
        }
        NiceNode copy = nd;
        if (!bag_contains(copy.bag, v))
            copy.bag.insert(std::upper_bound(copy.bag.begin(), copy.bag.end(), v), v);
        for (int& c : copy.children) c = remap[c];
        remap[id] = static_cast<int>(out.nodes.size());
        out.nodes.push_back(std::move(copy));
    }
    out.root = remap[ntd.root];
    return out;
}

TreeDecomposition to_plain(const NiceTreeDecomposition& ntd) {
    TreeDecomposition td;
    td.bags.reserve(ntd.nodes.size());
    for (const auto& nd : ntd.nodes) td.bags.push_back(nd.bag);
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i)
        for (int c : ntd.nodes[i].children)
            td.tree_edges.emplace_back(static_cast<int>(i), c);
    return td;
}

TdReport validate_nice(const Graph& g, const NiceTreeDecomposition& ntd) {
    TdReport rep = validate_td(g, to_plain(ntd));
    for (std::size_t i = 0; i < ntd.nodes.size(); ++i) {
        const NiceNode& nd = ntd.nodes[i];
        const std::string where = "node " + std::to_string(i);
        switch (nd.kind) {
        case NodeKind::Leaf:
            if (!nd.children.empty())
                rep.violations.push_back(where + ": leaf with children");
            break;
        case NodeKind::Introduce: {
            if (nd.children.size() != 1) {
                rep.violations.push_back(where + ": introduce needs one child");
                break;
            }
            const auto& cb = ntd.nodes[nd.children[0]].bag;
            std::vector<VertexId> expect = cb;
            if (bag_contains(cb, nd.vertex)) {
                rep.violations.push_back(where + ": introduced vertex already in child bag");
                break;
            }
            expect.insert(std::upper_bound(expect.begin(), expect.end(), nd.vertex),
                          nd.vertex);
            if (expect != nd.bag)
                rep.violations.push_back(where + ": introduce bag mismatch " +
                                         bag_to_string(nd.bag));
            break;
        }
        case NodeKind::Forget: {
            if (nd.children.size() != 1) {
                rep.violations.push_back(where + ": forget needs one child");
                break;
            }
            const auto& cb = ntd.nodes[nd.children[0]].bag;
            if (!bag_contains(cb, nd.vertex)) {
                rep.violations.push_back(where + ": forgotten vertex missing from child bag");
                break;
            }
            std::vector<VertexId> expect;
            for (VertexId u : cb)
                if (u != nd.vertex) expect.push_back(u);
            if (expect != nd.bag)
                rep.violations.push_back(where + ": forget bag mismatch");
            break;
        }
        case NodeKind::Join:
            if (nd.children.size() != 2) {
                rep.violations.push_back(where + ": join needs two children");
                break;
            }
            if (ntd.nodes[nd.children[0]].bag != nd.bag ||
                ntd.nodes[nd.children[1]].bag != nd.bag)
                rep.violations.push_back(where + ": join bags differ");
            break;
        }
    }
    return rep;
}

} // namespace nk
