#pragma once

#include "prym/cover.hpp"
#include "prym/smith.hpp"

namespace prym {

// Basis of the kernel of the cycle pushforward, built from fundamental
// cycles of the lifted tree: for each complementary base edge e != e0 the
// plus-lift's fundamental cycle gamma_e+ gives the basis element
// gamma_e+ - iota(gamma_e+). There are g-1 of them.
struct PrymBasis {
    std::vector<int> base_edges;      // complementary base edges, increasing, e0 omitted
    std::vector<Chain> plus_cycles;   // gamma_e+ on the total graph
    Chain gamma0;                     // fundamental cycle of the minus-lift of e0
    std::vector<Chain> cycles;        // gamma_e+ - iota(gamma_e+)
};

PrymBasis prym_basis(const FreeDoubleCover& cov);

// Principally polarized pairing: half the length pairing on the total graph.
Rat prym_pairing(const FreeDoubleCover& cov, const Chain& c, const Chain& d);

RatMat gram_matrix(const FreeDoubleCover& cov, const PrymBasis& basis);

// Gram determinant of the basis under the pairing = squared Prym volume.
Rat vol2_prym_gram(const FreeDoubleCover& cov);

// True iff the basis generates the full lattice Ker p_* inside the integer
// cycle lattice of the total graph (mutual integer expressibility against a
// kernel-lattice computation).
bool prym_basis_is_saturated(const FreeDoubleCover& cov, const PrymBasis& basis);

}  // namespace prym
