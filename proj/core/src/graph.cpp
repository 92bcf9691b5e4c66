#include "prym/graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace prym {

void Graph::validate() const {
    if (num_vertices < 0) throw std::invalid_argument("negative vertex count");
    for (int i = 0; i < num_edges(); ++i) {
        const Edge& e = edges[i];
        if (e.id != i) throw std::invalid_argument("edge ids must be dense 0..m-1");
        if (e.src < 0 || e.src >= num_vertices || e.dst < 0 || e.dst >= num_vertices)
            throw std::invalid_argument("edge endpoint out of range");
    }
    if (lengths.size() != edges.size())
        throw std::invalid_argument("lengths/edges size mismatch");
    for (const Rat& l : lengths)
        if (l <= 0) throw std::invalid_argument("edge lengths must be positive");
}

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<Rat>& lengths) {
    Graph g;
    g.num_vertices = num_vertices;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i)
        g.edges.push_back(Edge{i, edges[i].first, edges[i].second});
    if (lengths.empty())
        g.lengths.assign(edges.size(), Rat(1));
    else
        g.lengths = lengths;
    g.validate();
    return g;
}

void chain_add(Chain& dst, const Chain& src, const Int& scale) {
    for (const auto& [id, c] : src) {
        Int v = c * scale;
        if (dst.count(id)) v += dst[id];
        if (v == 0)
            dst.erase(id);
        else
            dst[id] = v;
    }
}

Chain chain_scaled(const Chain& c, const Int& scale) {
    Chain out;
    if (scale == 0) return out;
    for (const auto& [id, v] : c) out[id] = v * scale;
    return out;
}

Int chain_coeff(const Chain& c, int id) {
    auto it = c.find(id);
    return it == c.end() ? Int(0) : it->second;
}

std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::set<int>& removed) {
    std::vector<std::vector<int>> adj(g.num_vertices);
    for (const Edge& e : g.edges) {
        if (removed.count(e.id)) continue;
        adj[e.src].push_back(e.dst);
        adj[e.dst].push_back(e.src);
    }
    std::vector<int> comp(g.num_vertices, -1);
    std::vector<std::vector<int>> out;
    for (int start = 0; start < g.num_vertices; ++start) {
        if (comp[start] != -1) continue;
        std::vector<int> stack{start}, members;
        comp[start] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v]) {
                if (comp[w] == -1) {
                    comp[w] = comp[start];
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices == 0) return true;
    return connected_components(g).size() == 1;
}

static std::string describe_components(const std::vector<std::vector<int>>& comps) {
    std::ostringstream os;
    for (size_t i = 0; i < comps.size(); ++i) {
        os << (i ? " | {" : "{");
        for (size_t j = 0; j < comps[i].size(); ++j) os << (j ? "," : "") << comps[i][j];
        os << "}";
    }
    return os.str();
}

int genus(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1)
        throw std::invalid_argument("graph is disconnected: components " +
                                    describe_components(comps));
    return g.num_edges() - g.num_vertices + 1;
}

int subgraph_genus(const Graph& g, const std::vector<int>& comp_vertices,
                   const std::set<int>& removed) {
    std::set<int> verts(comp_vertices.begin(), comp_vertices.end());
    int edge_count = 0;
    for (const Edge& e : g.edges) {
        if (removed.count(e.id)) continue;
        if (verts.count(e.src) && verts.count(e.dst)) ++edge_count;
    }
    return edge_count - static_cast<int>(verts.size()) + 1;
}

bool is_spanning_tree(const Graph& g, const std::set<int>& tree) {
    if (static_cast<int>(tree.size()) != g.num_vertices - 1) return false;
    // n-1 edges and connected => acyclic and spanning.
    std::set<int> removed;
    for (const Edge& e : g.edges)
        if (!tree.count(e.id)) removed.insert(e.id);
    return connected_components(g, removed).size() == 1;
}

std::vector<std::set<int>> spanning_trees(const Graph& g) {
    auto comps = connected_components(g);
    if (comps.size() > 1)
        throw std::invalid_argument("graph is disconnected: components " +
                                    describe_components(comps));
    int m = g.num_edges(), k = g.num_vertices - 1;
    std::vector<std::set<int>> out;
    if (k < 0) return out;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    // Enumerate k-subsets of {0..m-1} in lexicographic order.
    if (k == 0) {
        out.push_back({});
        return out;
    }
    if (k > m) return out;
    while (true) {
        std::set<int> cand(idx.begin(), idx.end());
        if (is_spanning_tree(g, cand)) out.push_back(cand);
        int i = k - 1;
        while (i >= 0 && idx[i] == m - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

Chain fundamental_cycle(const Graph& g, const std::set<int>& tree, int e) {
    if (tree.count(e)) throw std::invalid_argument("edge lies in the tree");
    if (!is_spanning_tree(g, tree)) throw std::invalid_argument("not a spanning tree");
    Chain cyc;
    cyc[e] = 1;
    const Edge& ed = g.edges[e];
    if (ed.src == ed.dst) return cyc;  // loop is its own cycle
    // Walk the tree from t(e) back to s(e).
    std::vector<std::vector<std::pair<int, int>>> adj(g.num_vertices);  // (edge, to)
    for (int t : tree) {
        adj[g.edges[t].src].push_back({t, g.edges[t].dst});
        adj[g.edges[t].dst].push_back({t, g.edges[t].src});
    }
    std::vector<int> via_edge(g.num_vertices, -1), parent(g.num_vertices, -1);
    std::vector<int> stack{ed.dst};
    std::vector<bool> seen(g.num_vertices, false);
    seen[ed.dst] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == ed.src) break;
        for (auto [t, w] : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                via_edge[w] = t;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    int v = ed.src;
    while (v != ed.dst) {
        int t = via_edge[v];
        int p = parent[v];
        // Traveled p -> v along tree edge t.
        chain_add(cyc, Chain{{t, g.edges[t].src == p ? 1 : -1}});
        v = p;
    }
    return cyc;
}

Divisor chain_boundary(const Graph& g, const Chain& c) {
    Divisor d;
    for (const auto& [e, v] : c) {
        chain_add(d, Divisor{{g.edges[e].dst, 1}}, v);
        chain_add(d, Divisor{{g.edges[e].src, -1}}, v);
    }
    return d;
}

Int chain_pairing(const Chain& c, const Chain& d) {
    Int s = 0;
    for (const auto& [e, v] : c) {
        auto it = d.find(e);
        if (it != d.end()) s += v * it->second;
    }
    return s;
}

Rat length_pairing(const Chain& c, const Chain& d, const Graph& g) {
    Rat s = 0;
    for (const auto& [e, v] : c) {
        auto it = d.find(e);
        if (it != d.end()) s += Rat(v * it->second) * g.lengths[e];
    }
    return s;
}

SubdividedGraph subdivide_edge(const Graph& g, int e, const Rat& first_len) {
    if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("no such edge");
    if (first_len <= 0 || first_len >= g.lengths[e])
        throw std::invalid_argument("subdivision point outside the edge");
    SubdividedGraph out;
    out.graph = g;
    out.new_vertex = g.num_vertices;
    out.new_edge = g.num_edges();
    out.graph.num_vertices += 1;
    int dst = g.edges[e].dst;
    out.graph.edges[e].dst = out.new_vertex;
    out.graph.lengths[e] = first_len;
    out.graph.edges.push_back(Edge{out.new_edge, out.new_vertex, dst});
    out.graph.lengths.push_back(g.lengths[e] - first_len);
    out.provenance[e] = EdgeProvenance{e, 0, Rat(0)};
    out.provenance[out.new_edge] = EdgeProvenance{e, 1, first_len};
    return out;
}

}  // namespace prym
