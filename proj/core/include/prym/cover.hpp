#pragma once

#include "prym/graph.hpp"

namespace prym {

// Free double cover of a connected base graph, presented by a spanning tree
// and a nonempty flip set S of complementary edges. The total graph is built
// deterministically:
//   vertices: v+ = v, v- = v + n        (n = base vertex count)
//   edges:    lift+(e) = e, lift-(e) = e + m   (m = base edge count)
// Tree edges and unflipped complementary edges lift within a sheet. Flip
// edges cross sheets; the distinguished flip e0 always has
// s(lift+(e0)) = s(e0)+ and t(lift+(e0)) = t(e0)-. For the remaining flips
// the attachment is recorded in sigma: sigma[e] = +1 iff s(lift+(e)) lies on
// the + sheet.
struct FreeDoubleCover {
    Graph base;
    std::set<int> tree;
    std::set<int> flips;
    int e0 = -1;
    std::map<int, int> sigma;  // flips \ {e0} -> +1/-1
    Graph total;

    int n() const { return base.num_vertices; }
    int m() const { return base.num_edges(); }

    int lift(int base_edge, int sign) const { return sign > 0 ? base_edge : base_edge + m(); }
    int vert_lift(int base_vertex, int sign) const {
        return sign > 0 ? base_vertex : base_vertex + n();
    }
    int edge_base(int total_edge) const { return total_edge % m(); }
    int edge_sign(int total_edge) const { return total_edge < m() ? +1 : -1; }
    int vert_base(int total_vertex) const { return total_vertex % n(); }
    int vert_sign(int total_vertex) const { return total_vertex < n() ? +1 : -1; }
    int inv_vertex(int total_vertex) const { return (total_vertex + n()) % (2 * n()); }
    int inv_edge(int total_edge) const { return (total_edge + m()) % (2 * m()); }

    // Spanning tree of the total graph: both lifts of every tree edge plus
    // lift+(e0).
    std::set<int> total_tree() const;
};

// sigma defaults to +1 for unspecified flips; e0 defaults to the minimum-id
// flip edge. Throws on empty flips ("disconnected cover"), non-spanning tree,
// or tree/flips overlap.
FreeDoubleCover build_cover(const Graph& base, const std::set<int>& tree,
                            const std::set<int>& flips, int e0 = -1,
                            const std::map<int, int>& sigma = {});

// Connected subgraph of the base: explicit vertex and edge sets.
struct Subgraph {
    std::set<int> vertices;
    std::set<int> edges;
};

Subgraph full_subgraph(const Graph& g);

// True iff the preimage of `sub` in the total graph is connected. Computed
// two independent ways (direct DFS on the lifted subgraph; existence of a
// cycle in `sub` with an odd number of flip edges) which must agree.
bool preimage_connected(const FreeDoubleCover& cov, const Subgraph& sub);
bool preimage_connected_lift(const FreeDoubleCover& cov, const Subgraph& sub);
bool preimage_connected_parity(const FreeDoubleCover& cov, const Subgraph& sub);

Chain pushforward_chain(const FreeDoubleCover& cov, const Chain& c_total);
Chain pullback_chain(const FreeDoubleCover& cov, const Chain& c_base);
Chain involute_chain(const FreeDoubleCover& cov, const Chain& c_total);

// Divisor pushforward along the projection (the norm map lives in
// prym_group; this is the underlying vertex map).
Divisor pushforward_divisor(const FreeDoubleCover& cov, const Divisor& d_total);
Divisor involute_divisor(const FreeDoubleCover& cov, const Divisor& d_total);

// Subdivision of a cover: the base edge is split and the (tree, flips, e0,
// sigma) data rebuilt so that the new cover is the subdivision of the old
// one. `trace` maps every edge of the new base to the original base edge it
// lies on, with its offset from the original source.
struct BaseEdgeTrace {
    int orig;
    Rat offset;
};

struct RefinedCover {
    FreeDoubleCover cover;
    std::map<int, BaseEdgeTrace> trace;
};

RefinedCover subdivide_cover(const FreeDoubleCover& cov, int base_edge, const Rat& first_len);

// Splits every base loop at its midpoint; the result has no loops in either
// the base or the total graph.
RefinedCover loopless_model(const FreeDoubleCover& cov);

}  // namespace prym
