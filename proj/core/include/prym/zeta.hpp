#pragma once

#include "prym/cover.hpp"
#include "prym/polynomial.hpp"
#include "prym/smith.hpp"

namespace prym {

using PolyMat = std::vector<std::vector<IntPolynomial>>;

// Fraction-free (Bareiss) determinant over Z[s]; all divisions exact.
IntPolynomial poly_det(PolyMat a);

// Valency matrix Q (loops count twice) and adjacency matrix A (a loop adds 2
// to the diagonal).
IntMat valency_matrix(const Graph& g);
IntMat adjacency_matrix(const Graph& g);

// Character-twisted adjacency: -1 per flip edge, +1 per non-flip edge, with
// loops contributing -2/+2 on the diagonal.
IntMat twisted_adjacency_matrix(const FreeDoubleCover& cov);

// Reciprocal of the Ihara zeta function (Bass determinant):
// (1 - s^2)^(g-1) det(I - A s + (Q - I) s^2). Degree 2|E|.
IntPolynomial ihara_zeta_reciprocal(const Graph& g);

// Reciprocal of the L-function of the nontrivial character of the cover:
// (1 - s^2)^(g-1) det(I - A_rho s + (Q - I) s^2). Satisfies
// zeta(total)^-1 = zeta(base)^-1 * L^-1.
IntPolynomial artin_L_reciprocal(const FreeDoubleCover& cov);

}  // namespace prym
