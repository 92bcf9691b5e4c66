#pragma once

#include "prym/graph.hpp"
#include "prym/smith.hpp"

namespace prym {

Int divisor_degree(const Divisor& d);

std::vector<Int> divisor_to_vector(const Graph& g, const Divisor& d);
Divisor vector_to_divisor(const std::vector<Int>& v);

// Graph Laplacian L = Q - A; loops cancel (they add 2 to the valency and 2
// to the adjacency diagonal).
IntMat laplacian(const Graph& g);

// Reduced Laplacian: L with row and column `drop` deleted (default vertex 0).
IntMat reduced_laplacian(const Graph& g, int drop = 0);

// Number of spanning trees = |det(reduced Laplacian)| (Kirchhoff).
Int jacobian_order(const Graph& g);

AbelianGroupStructure jacobian_structure(const Graph& g);

// d1 ~ d2 iff d1 - d2 = -L*a for an integer firing vector a; the witness a
// is returned on success.
struct EquivalenceResult {
    bool equivalent = false;
    std::vector<Int> witness;  // firing vector a when equivalent
};

EquivalenceResult linearly_equivalent(const Graph& g, const Divisor& d1, const Divisor& d2);

// Divisor of the firing vector a: -L*a (chips flow toward fired vertices'
// neighbours).
Divisor principal_divisor(const Graph& g, const std::vector<Int>& a);

}  // namespace prym
