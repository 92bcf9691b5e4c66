#include "prym/cover.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym {

std::set<int> FreeDoubleCover::total_tree() const {
    std::set<int> tt;
    for (int t : tree) {
        tt.insert(lift(t, +1));
        tt.insert(lift(t, -1));
    }
    tt.insert(lift(e0, +1));
    return tt;
}

FreeDoubleCover build_cover(const Graph& base, const std::set<int>& tree,
                            const std::set<int>& flips, int e0,
                            const std::map<int, int>& sigma) {
    base.validate();
    if (!is_connected(base)) throw std::invalid_argument("base graph is disconnected");
    if (flips.empty()) throw std::invalid_argument("disconnected cover: flip set is empty");
    if (!is_spanning_tree(base, tree)) throw std::invalid_argument("tree is not spanning");
    for (int e : flips) {
        if (e < 0 || e >= base.num_edges()) throw std::invalid_argument("unknown flip edge");
        if (tree.count(e)) throw std::invalid_argument("flip edge lies in the tree");
    }
    if (e0 < 0)
        e0 = *flips.begin();
    else if (!flips.count(e0))
        throw std::invalid_argument("e0 must be a flip edge");

    FreeDoubleCover cov;
    cov.base = base;
    cov.tree = tree;
    cov.flips = flips;
    cov.e0 = e0;
    for (int e : flips) {
        if (e == e0) continue;
        int s = +1;
        auto it = sigma.find(e);
        if (it != sigma.end()) {
            if (it->second != 1 && it->second != -1)
                throw std::invalid_argument("sigma values must be +1 or -1");
            s = it->second;
        }
        cov.sigma[e] = s;
    }
    for (const auto& [e, s] : sigma)
        if (!flips.count(e) || e == e0)
            throw std::invalid_argument("sigma given for a non-flip edge");

    int n = base.num_vertices, m = base.num_edges();
    Graph total;
    total.num_vertices = 2 * n;
    total.edges.resize(2 * m);
    total.lengths.resize(2 * m);
    for (int e = 0; e < m; ++e) {
        int s = base.edges[e].src, t = base.edges[e].dst;
        int sp, tp;  // endpoints of lift+(e)
        if (!flips.count(e)) {
            sp = s;
            tp = t;
        } else if (e == e0 || cov.sigma.at(e) == +1) {
            sp = s;
            tp = t + n;
        } else {
            sp = s + n;
            tp = t;
        }
        total.edges[e] = Edge{e, sp, tp};
        total.edges[e + m] = Edge{e + m, (sp + n) % (2 * n), (tp + n) % (2 * n)};
        total.lengths[e] = total.lengths[e + m] = base.lengths[e];
    }
    total.validate();
    cov.total = total;
    if (!is_connected(total))
        throw std::logic_error("internal error: total graph disconnected");
    if (genus(total) != 2 * genus(base) - 1)
        throw std::logic_error("internal error: total genus mismatch");
    if (!is_spanning_tree(total, cov.total_tree()))
        throw std::logic_error("internal error: lifted tree not spanning");
    return cov;
}

Subgraph full_subgraph(const Graph& g) {
    Subgraph s;
    for (int v = 0; v < g.num_vertices; ++v) s.vertices.insert(v);
    for (const Edge& e : g.edges) s.edges.insert(e.id);
    return s;
}

static void validate_subgraph(const Graph& base, const Subgraph& sub) {
    for (int v : sub.vertices)
        if (v < 0 || v >= base.num_vertices) throw std::invalid_argument("unknown vertex");
    for (int e : sub.edges) {
        if (e < 0 || e >= base.num_edges()) throw std::invalid_argument("unknown edge");
        if (!sub.vertices.count(base.edges[e].src) || !sub.vertices.count(base.edges[e].dst))
            throw std::invalid_argument("subgraph edge with endpoint outside vertex set");
    }
    if (sub.vertices.empty()) throw std::invalid_argument("empty subgraph");
    // Connectivity of the subgraph itself.
    std::map<int, std::vector<int>> adj;
    for (int v : sub.vertices) adj[v];
    for (int e : sub.edges) {
        adj[base.edges[e].src].push_back(base.edges[e].dst);
        adj[base.edges[e].dst].push_back(base.edges[e].src);
    }
    std::set<int> seen;
    std::vector<int> stack{*sub.vertices.begin()};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    if (seen.size() != sub.vertices.size())
        throw std::invalid_argument("subgraph is disconnected");
}

bool preimage_connected_lift(const FreeDoubleCover& cov, const Subgraph& sub) {
    validate_subgraph(cov.base, sub);
    std::map<int, std::vector<int>> adj;
    for (int v : sub.vertices) {
        adj[cov.vert_lift(v, +1)];
        adj[cov.vert_lift(v, -1)];
    }
    for (int e : sub.edges) {
        for (int sign : {+1, -1}) {
            const Edge& ed = cov.total.edges[cov.lift(e, sign)];
            adj[ed.src].push_back(ed.dst);
            adj[ed.dst].push_back(ed.src);
        }
    }
    std::set<int> seen;
    std::vector<int> stack{adj.begin()->first};
    seen.insert(stack[0]);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (seen.insert(w).second) stack.push_back(w);
    }
    return seen.size() == adj.size();
}

bool preimage_connected_parity(const FreeDoubleCover& cov, const Subgraph& sub) {
    validate_subgraph(cov.base, sub);
    // BFS tree of the subgraph; each complementary subgraph edge closes a
    // cycle, and the preimage is connected iff some such cycle carries an odd
    // number of flip edges.
    std::map<int, int> flips_to_root;  // parity of flip count on the tree path
    std::map<int, std::vector<std::pair<int, int>>> adj;  // v -> (edge, other end)
    for (int e : sub.edges) {
        adj[cov.base.edges[e].src].push_back({e, cov.base.edges[e].dst});
        adj[cov.base.edges[e].dst].push_back({e, cov.base.edges[e].src});
    }
    int root = *sub.vertices.begin();
    flips_to_root[root] = 0;
    std::set<int> tree_edges;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [e, w] : adj[v]) {
            if (!flips_to_root.count(w)) {
                flips_to_root[w] = (flips_to_root[v] + (cov.flips.count(e) ? 1 : 0)) % 2;
                tree_edges.insert(e);
                stack.push_back(w);
            }
        }
    }
    for (int e : sub.edges) {
        if (tree_edges.count(e)) continue;
        int u = cov.base.edges[e].src, w = cov.base.edges[e].dst;
        int parity = (flips_to_root.at(u) + flips_to_root.at(w) + (cov.flips.count(e) ? 1 : 0)) % 2;
        if (parity == 1) return true;
    }
    return false;
}

bool preimage_connected(const FreeDoubleCover& cov, const Subgraph& sub) {
    bool a = preimage_connected_lift(cov, sub);
    bool b = preimage_connected_parity(cov, sub);
    if (a != b) throw std::logic_error("internal error: preimage connectivity methods disagree");
    return a;
}

Chain pushforward_chain(const FreeDoubleCover& cov, const Chain& c_total) {
    Chain out;
    for (const auto& [e, v] : c_total) chain_add(out, Chain{{cov.edge_base(e), 1}}, v);
    return out;
}

Chain pullback_chain(const FreeDoubleCover& cov, const Chain& c_base) {
    Chain out;
    for (const auto& [e, v] : c_base) {
        out[cov.lift(e, +1)] = v;
        out[cov.lift(e, -1)] = v;
    }
    return out;
}

Chain involute_chain(const FreeDoubleCover& cov, const Chain& c_total) {
    Chain out;
    for (const auto& [e, v] : c_total) out[cov.inv_edge(e)] = v;
    return out;
}

Divisor pushforward_divisor(const FreeDoubleCover& cov, const Divisor& d_total) {
    Divisor out;
    for (const auto& [v, a] : d_total) chain_add(out, Divisor{{cov.vert_base(v), 1}}, a);
    return out;
}

Divisor involute_divisor(const FreeDoubleCover& cov, const Divisor& d_total) {
    Divisor out;
    for (const auto& [v, a] : d_total) out[cov.inv_vertex(v)] = a;
    return out;
}

RefinedCover subdivide_cover(const FreeDoubleCover& cov, int base_edge, const Rat& first_len) {
    SubdividedGraph sg = subdivide_edge(cov.base, base_edge, first_len);
    int fresh = sg.new_edge;
    std::set<int> tree = cov.tree;
    std::set<int> flips = cov.flips;
    std::map<int, int> sigma = cov.sigma;
    int e0 = cov.e0;
    if (cov.tree.count(base_edge)) {
        tree.insert(fresh);
    } else {
        // The first half joins the tree; the second half takes over the
        // complementary-edge role (and flip status) of the original.
        tree.insert(base_edge);
        if (flips.count(base_edge)) {
            flips.erase(base_edge);
            flips.insert(fresh);
            if (base_edge == e0) {
                e0 = fresh;
            } else {
                sigma[fresh] = sigma.at(base_edge);
                sigma.erase(base_edge);
            }
        }
    }
    RefinedCover out;
    out.cover = build_cover(sg.graph, tree, flips, e0, sigma);
    for (int e = 0; e < cov.base.num_edges(); ++e) out.trace[e] = BaseEdgeTrace{e, Rat(0)};
    out.trace[base_edge] = BaseEdgeTrace{base_edge, Rat(0)};
    out.trace[fresh] = BaseEdgeTrace{base_edge, first_len};
    return out;
}

RefinedCover loopless_model(const FreeDoubleCover& cov) {
    RefinedCover cur;
    cur.cover = cov;
    for (int e = 0; e < cov.base.num_edges(); ++e) cur.trace[e] = BaseEdgeTrace{e, Rat(0)};
    std::vector<int> loops;
    for (int e = 0; e < cov.base.num_edges(); ++e)
        if (cov.base.is_loop(e)) loops.push_back(e);
    for (int e : loops) {
        Rat half = cur.cover.base.lengths[e] / 2;
        RefinedCover next = subdivide_cover(cur.cover, e, half);
        std::map<int, BaseEdgeTrace> trace;
        for (const auto& [ne, tr] : next.trace) {
            BaseEdgeTrace base_tr = cur.trace.at(tr.orig);
            trace[ne] = BaseEdgeTrace{base_tr.orig, base_tr.offset + tr.offset};
        }
        cur.cover = next.cover;
        cur.trace = trace;
    }
    return cur;
}

}  // namespace prym
