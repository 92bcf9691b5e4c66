#pragma once

#include "prym/cover.hpp"

namespace prym {

// Odd genus-one decomposition: a set of g-1 base edges whose removal leaves
// only genus-one components, each with connected preimage in the cover.
struct OgodComponent {
    std::vector<int> vertices;
    int genus = 0;
    bool preimage_connected = false;
};

struct OgodRecord {
    std::set<int> edges;                   // |edges| = g-1
    int rank = 0;                          // number of components
    std::vector<OgodComponent> components;
    Rat weight;                            // product of edge lengths w(F)
};

// All ogods, sorted lexicographically by edge set. Exhaustive over the
// C(|E|, g-1) subsets with incremental genus pruning.
std::vector<OgodRecord> enumerate_ogods(const FreeDoubleCover& cov);

// Squared Jacobian volume: sum of w(F) over g-subsets F with G\F a spanning
// tree (equivalently, over spanning trees T, the product of the lengths of
// the complementary edges).
Rat vol2_jacobian(const Graph& g);

// Squared Prym volume: sum over ogods of 4^(rank-1) * w(F).
Rat vol2_prym(const FreeDoubleCover& cov);

}  // namespace prym
