#pragma once

#include <optional>
#include <vector>

#include "prym/rat.hpp"

namespace prym {

using IntMat = std::vector<std::vector<Int>>;
using RatMat = std::vector<std::vector<Rat>>;

IntMat int_identity(int n);

// Fraction-free (Bareiss) determinant.
Int det_int(IntMat a);

Rat det_rat(RatMat a);

// Solves a square system a*x = b over the rationals; nullopt if singular.
std::optional<std::vector<Rat>> solve_rat(RatMat a, std::vector<Rat> b);

// Smith normal form: u * a * v = s with u, v unimodular, s diagonal with
// non-negative entries s[0][0] | s[1][1] | ...
struct SmithResult {
    IntMat u, s, v;
    int rank = 0;
};

SmithResult smith_normal_form(const IntMat& a);

// Cokernel of the column lattice of `relations` acting on Z^rows.
struct AbelianGroupStructure {
    std::vector<Int> invariant_factors;  // each > 1, divisibility chain
    int free_rank = 0;

    Int order() const;  // product of factors; only meaningful when free_rank == 0
};

AbelianGroupStructure group_structure(const IntMat& relations);

// Solves a*x = b over the integers; nullopt when no integer solution exists.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// Columns generating the integer kernel lattice {x : a*x = 0}.
IntMat kernel_lattice(const IntMat& a);

IntMat mat_mul(const IntMat& a, const IntMat& b);
std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x);

}  // namespace prym
