#pragma once

#include <iosfwd>
#include <stdexcept>

#include "prym/ogod.hpp"
#include "prym/prym_lattice.hpp"

namespace prym {

// Cell-level data for the degree-(g-1) map D -> D - iota(D) from the
// symmetric product of the total graph to the Prym torsor. All operations
// require a loopless model; ApContext builds one automatically.
struct CellMatrix {
    std::vector<int> edges;  // g-1 total-graph edge ids, fixed orientations
    RatMat matrix;           // entries (1/2) <gamma_j, f_i - iota(f_i)>
    Rat det;
    Int degree;              // |det| (always an integer for the standard basis)
};

// Point on the Prym torsor in the coordinate system dual to the basis
// cycles; defined modulo the lattice spanned by the Gram-matrix rows.
struct TorsorPoint {
    std::vector<Rat> coords;
};

struct NonGenericTarget : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ApContext {
    FreeDoubleCover cover;               // loopless model
    std::map<int, BaseEdgeTrace> trace;  // loopless base edge -> original edge
    PrymBasis basis;
    RatMat gram;
    int dim = 0;                              // g-1
    std::vector<std::vector<Rat>> ecol;       // per total edge: matrix column
    std::vector<std::vector<Rat>> vcoord;     // per total vertex: tree-path coords
};

// Auto-subdivides loops at their midpoints.
ApContext make_ap_context(const FreeDoubleCover& cov);

// Throws if the total graph has loops.
CellMatrix cell_matrix(const FreeDoubleCover& cov, const PrymBasis& basis,
                       const std::vector<int>& edges);
CellMatrix cell_matrix(const ApContext& ctx, const std::vector<int>& edges);

// Degree computed both from |det| and from the ogod route (0 unless the
// projection of the edge list is a distinct-edge ogod, else 2^(rank-1));
// throws on internal disagreement.
Int cell_degree(const ApContext& ctx, const std::vector<int>& edges);

// All non-contracted top cells: for each ogod of the loopless base, all
// 2^(g-1) sheet choices of its edges.
struct ApCell {
    std::vector<int> edges;  // total edge ids, ascending by base edge
    std::set<int> base_edges;
    int rank = 0;
};

std::vector<ApCell> enumerate_cells(const ApContext& ctx);

// Balance data at a codimension-one cell: the chosen endpoint of the dropped
// edge, and for every total edge leaving that vertex the determinant of the
// cell matrix with the dropped column replaced by that edge's column
// (oriented away from the vertex). The signed determinants always sum to
// zero.
struct BalanceReport {
    int vertex = 0;
    std::vector<std::pair<int, Rat>> entries;  // (total edge, determinant)
    Rat sum;
    Rat positive_total;
    Rat negative_total;
};

BalanceReport harmonicity_balance(const ApContext& ctx, const std::vector<int>& edges,
                                  int drop_index, int vertex_end);

// Point of the symmetric product: g-1 points given as (total edge id,
// distance from the edge's source).
using SymPoint = std::vector<std::pair<int, Rat>>;

TorsorPoint torsor_coordinates(const ApContext& ctx, const SymPoint& divisor);

// Exact equality on the torsor: difference lies in the Gram-row lattice.
bool torsor_equal(const ApContext& ctx, const TorsorPoint& a, const TorsorPoint& b);

struct FiberPoint {
    ApCell cell;
    std::vector<Rat> params;  // strictly inside (0, length) per cell edge
    Int degree;
};

// All preimages of a generic target; throws NonGenericTarget when a solution
// lands exactly on a cell boundary. The local degrees sum to 2^(g-1).
std::vector<FiberPoint> fiber(const ApContext& ctx, const TorsorPoint& target);

Int fiber_degree_sum(const std::vector<FiberPoint>& pts);

// Re-presentation of the cover adapted to one ogod (components re-rooted,
// per-component trees, contracted-tree connectors absorbed into the new
// spanning tree). With columns in construction order the cell matrix is
// lower triangular with diagonal (2,...,2,1,...,1).
struct AdaptedCellBasis {
    FreeDoubleCover cover;     // same cover, new (tree, flips, e0) presentation
    PrymBasis basis;
    std::vector<int> columns;  // chosen lifts of the ogod edges, in order
    CellMatrix cell;
    int rank = 0;
};

AdaptedCellBasis construction_c_analysis(const FreeDoubleCover& cov,
                                         const std::set<int>& ogod_edges);

// Planar tessellation drawing of the non-contracted cell images with degree
// labels; only for dim == 2.
void emit_cells_svg(const ApContext& ctx, std::ostream& os);

}  // namespace prym
