#pragma once

#include <map>
#include <set>
#include <vector>

#include "prym/rat.hpp"

namespace prym {

// Oriented multigraph with exact rational edge lengths. Vertex ids are
// 0..n-1 and edge ids 0..m-1 (dense). Loops and parallel edges are allowed.
// Orientation is fixed at construction; "reversing" an edge is expressed by
// negating chain coefficients, never by mutating the graph.
struct Edge {
    int id;
    int src;
    int dst;
};

struct Graph {
    int num_vertices = 0;
    std::vector<Edge> edges;    // edges[i].id == i
    std::vector<Rat> lengths;   // lengths[i] > 0; defaults to 1

    int num_edges() const { return static_cast<int>(edges.size()); }
    bool is_loop(int e) const { return edges[e].src == edges[e].dst; }
    void validate() const;  // throws std::invalid_argument on any broken invariant
};

Graph make_graph(int num_vertices, const std::vector<std::pair<int, int>>& edges,
                 const std::vector<Rat>& lengths = {});

// Integer 1-chain (or 0-chain/divisor): sparse id -> coefficient map.
// Zero coefficients are never stored.
using Chain = std::map<int, Int>;
using Divisor = std::map<int, Int>;

void chain_add(Chain& dst, const Chain& src, const Int& scale = 1);
Chain chain_scaled(const Chain& c, const Int& scale);
Int chain_coeff(const Chain& c, int id);

bool is_connected(const Graph& g);

// Components of the graph with `removed` edges deleted (vertices are kept).
// Each component is a sorted vertex list; components sorted by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g,
                                                   const std::set<int>& removed = {});

// First Betti number |E| - |V| + 1. Throws on disconnected input, naming the
// components in the message.
int genus(const Graph& g);

// Genus of a subgraph induced by a vertex set together with the edges of
// `allowed` whose endpoints both lie in it.
int subgraph_genus(const Graph& g, const std::vector<int>& comp_vertices,
                   const std::set<int>& removed);

bool is_spanning_tree(const Graph& g, const std::set<int>& tree);

// Exhaustive, duplicate-free enumeration in lexicographic order of the
// sorted edge-id lists. Desk scale: |E| choose |V|-1 subsets.
std::vector<std::set<int>> spanning_trees(const Graph& g);

// The unique cycle supported on tree ∪ {e} containing +e.
Chain fundamental_cycle(const Graph& g, const std::set<int>& tree, int e);

// Boundary of a 1-chain: sum of c_e (t(e) - s(e)).
Divisor chain_boundary(const Graph& g, const Chain& c);

// <c,d> = sum_e c_e d_e (lengths ignored).
Int chain_pairing(const Chain& c, const Chain& d);

// (c,d) = sum_e c_e d_e l(e).
Rat length_pairing(const Chain& c, const Chain& d, const Graph& g);

// Pure edge subdivision: edge e of length l becomes e (src -> w, length
// first_len) followed by a fresh edge (w -> dst, length l - first_len), where
// w is a fresh vertex. `half` in the provenance record is 0 for the piece
// containing src and 1 for the piece containing dst.
struct EdgeProvenance {
    int orig_edge;
    int half;        // 0 or 1
    Rat offset;      // distance from the original source to this piece's source
};

struct SubdividedGraph {
    Graph graph;
    int new_vertex;
    int new_edge;
    std::map<int, EdgeProvenance> provenance;  // only for the two pieces
};

SubdividedGraph subdivide_edge(const Graph& g, int e, const Rat& first_len);

}  // namespace prym
