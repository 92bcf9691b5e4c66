#pragma once

#include "prym/cover.hpp"
#include "prym/divisor.hpp"

namespace prym {

// Norm map: pushforward of divisors along the projection.
Divisor norm(const FreeDoubleCover& cov, const Divisor& d_total);

// Parity of a divisor in the divisor-level kernel of the norm (coefficients
// satisfy a_{v+} = -a_{v-}): sum of the +-sheet coefficients mod 2. Throws
// unless Nm(d) = 0 exactly.
int parity(const FreeDoubleCover& cov, const Divisor& d_total);

// Q_rho - A_rho, indexed by base vertices: off-diagonal entries count flip
// edges minus non-flip edges between the two vertices; diagonal entries are
// 4*(flip loops) + (non-loop edges) at the vertex.
IntMat signed_laplacian(const FreeDoubleCover& cov);

// S-twisted incidence matrix B_S (vertices x edges) with
// B_S * B_S^T = Q_rho - A_rho.
IntMat s_twisted_incidence(const FreeDoubleCover& cov);

enum class PrymOrderMethod { ratio, signed_det, ogod_sum };

// Order of the Prym group by the requested route:
//   ratio      |Jac(total)| / (2 |Jac(base)|)
//   signed_det (1/4) det(Q_rho - A_rho)
//   ogod_sum   sum over odd genus-one decompositions of 4^(rank-1)
Int prym_order(const FreeDoubleCover& cov, PrymOrderMethod method);

// Structure of Ker Nm as an abstract group, presented on the generators
// D_v = v+ - v- with relations given by principality on the total graph.
AbelianGroupStructure ker_nm_structure(const FreeDoubleCover& cov);

Int ker_nm_order(const FreeDoubleCover& cov);

}  // namespace prym
