#pragma once

#include <random>

#include "prym/cover.hpp"

namespace prym {

// Bundled example covers used by the test suite and the CLI self-test.

// Four-vertex chain with doubled end edges: vertices 0..3; edge 0 and edge 2
// parallel between 0,1; edge 3 the middle bridge 1-2; edge 4 and edge 1
// parallel between 2,3. Tree {2,3,4}, flips {0,1}. Genus 2;
// |Jac| = 4, |Jac(total)| = 64, |Prym| = 8.
Graph banana_chain_graph();
FreeDoubleCover banana_chain_cover();

// Genus-two dumbbell: loop 0 at vertex 0 (length x1), loop 1 at vertex 1
// (length x2), bridge 2 (length x3).
Graph dumbbell_graph(const Rat& x1 = 1, const Rat& x2 = 1, const Rat& x3 = 1);
// Both loops flipped; squared Prym volume x1 + x2 + 4 x3.
FreeDoubleCover dumbbell_cover_one(const Rat& x1 = 1, const Rat& x2 = 1, const Rat& x3 = 1);
// Only loop 0 flipped; squared Prym volume x2.
FreeDoubleCover dumbbell_cover_two(const Rat& x1 = 1, const Rat& x2 = 1, const Rat& x3 = 1);

// Genus-three graph: loop 0 at vertex 0, edge 1 from 1 to 0, parallel pair
// {2: 2->1, 3: 1->2}, edge 4 from 2 to 3, loop 5 at vertex 3. The cover has
// tree {1,3,4}, flips {0,2,5}, e0 = 2 and sigma(5) = -1; it has 13 ogods and
// Prym order 49 at unit lengths. `lengths` must be empty (all 1) or list all
// six edge lengths.
Graph loop_biangle_loop_graph(const std::vector<Rat>& lengths = {});
FreeDoubleCover loop_biangle_loop_cover(const std::vector<Rat>& lengths = {});
// The length assignment (12/5, 4/5, 1, 7/5, 11/10, 7/5) used for the
// tessellation drawing.
std::vector<Rat> loop_biangle_loop_demo_lengths();

// Genus-three cover whose degree-two Abel-Prym map has fiber points of
// different local degrees over one target: vertices 0,1,2; edge 0 from 0 to
// 1, edge 1 from 2 to 1, loop 2 at vertex 1 (length 4), parallel edges 3 and
// 4 from 0 to 2. Tree {0,1}, flips {2,3}.
FreeDoubleCover mixed_degree_cover();

// Deterministic random instances for property suites. All draws use raw
// mt19937_64 output (modulo reduction), so sequences are identical across
// platforms.
using Rng = std::mt19937_64;

int rand_below(Rng& rng, int n);  // uniform-ish in [0, n)

// Positive fraction with numerator in [1, max_num] and denominator in
// [1, max_den].
Rat random_positive_rat(Rng& rng, int max_num = 20, int max_den = 12);

// Connected graph with num_vertices vertices and num_vertices - 1 + extra
// edges (spanning tree plus `extra` uniformly chosen endpoint pairs, loops
// allowed); unit lengths.
Graph random_connected_graph(Rng& rng, int num_vertices, int extra);

// Random cover of `base`: uniformly chosen spanning tree, nonempty flip
// subset of the complement, random sigma signs.
FreeDoubleCover random_cover(Rng& rng, const Graph& base);

// Random connected cover with genus in [1, max_genus] and at most
// max_vertices vertices.
FreeDoubleCover random_cover(Rng& rng, int max_vertices, int max_genus);

}  // namespace prym
