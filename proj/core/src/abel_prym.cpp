#include "prym/abel_prym.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace prym {

namespace {

bool has_loops(const Graph& g) {
    for (const Edge& e : g.edges)
        if (e.src == e.dst) return true;
    return false;
}

Int rat_to_int_exact(const Rat& r, const char* what) {
    if (r.get_den() != 1) throw std::logic_error(std::string("internal error: ") + what);
    return r.get_num();
}

std::vector<Rat> mat_vec_rat(const RatMat& m, const std::vector<Rat>& x) {
    std::vector<Rat> out(m.size(), Rat(0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) out[i] += m[i][j] * x[j];
    return out;
}

// Column of the cell matrix attached to a single total edge.
std::vector<Rat> edge_column(const FreeDoubleCover& cov, const PrymBasis& basis, int e) {
    std::vector<Rat> col(basis.cycles.size());
    int ie = cov.inv_edge(e);
    for (size_t j = 0; j < basis.cycles.size(); ++j)
        col[j] = Rat(chain_coeff(basis.cycles[j], e) - chain_coeff(basis.cycles[j], ie)) / 2;
    return col;
}

}  // namespace

ApContext make_ap_context(const FreeDoubleCover& cov) {
    ApContext ctx;
    RefinedCover rc = loopless_model(cov);
    ctx.cover = rc.cover;
    ctx.trace = rc.trace;
    ctx.basis = prym_basis(ctx.cover);
    ctx.gram = gram_matrix(ctx.cover, ctx.basis);
    ctx.dim = static_cast<int>(ctx.basis.cycles.size());
    const Graph& tot = ctx.cover.total;
    ctx.ecol.resize(tot.num_edges());
    for (int e = 0; e < tot.num_edges(); ++e) ctx.ecol[e] = edge_column(ctx.cover, ctx.basis, e);
    // Tree-path coordinates from the base point (total vertex 0).
    ctx.vcoord.assign(tot.num_vertices, std::vector<Rat>(ctx.dim, Rat(0)));
    std::set<int> ttree = ctx.cover.total_tree();
    std::vector<std::vector<std::pair<int, int>>> adj(tot.num_vertices);
    for (int t : ttree) {
        adj[tot.edges[t].src].push_back({t, tot.edges[t].dst});
        adj[tot.edges[t].dst].push_back({t, tot.edges[t].src});
    }
    std::vector<bool> seen(tot.num_vertices, false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [t, w] : adj[v]) {
            if (seen[w]) continue;
            seen[w] = true;
            int dir = tot.edges[t].src == v ? +1 : -1;  // traversed v -> w
            for (int j = 0; j < ctx.dim; ++j)
                ctx.vcoord[w][j] = ctx.vcoord[v][j] + Rat(dir) * tot.lengths[t] * ctx.ecol[t][j];
            stack.push_back(w);
        }
    }
    return ctx;
}

CellMatrix cell_matrix(const FreeDoubleCover& cov, const PrymBasis& basis,
                       const std::vector<int>& edges) {
    if (has_loops(cov.total))
        throw std::invalid_argument("graph model has loops; subdivide them first");
    int d = static_cast<int>(basis.cycles.size());
    if (static_cast<int>(edges.size()) != d)
        throw std::invalid_argument("cell needs exactly g-1 edges");
    CellMatrix cm;
    cm.edges = edges;
    cm.matrix.assign(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> col = edge_column(cov, basis, edges[i]);
        for (int j = 0; j < d; ++j) cm.matrix[j][i] = col[j];
    }
    cm.det = det_rat(cm.matrix);
    cm.degree = rat_to_int_exact(cm.det < 0 ? Rat(-cm.det) : cm.det, "non-integer cell degree");
    return cm;
}

CellMatrix cell_matrix(const ApContext& ctx, const std::vector<int>& edges) {
    return cell_matrix(ctx.cover, ctx.basis, edges);
}

Int cell_degree(const ApContext& ctx, const std::vector<int>& edges) {
    CellMatrix cm = cell_matrix(ctx, edges);
    // Independent route: nonzero exactly on distinct-edge ogod cells, where
    // the degree is 2^(rank-1).
    std::set<int> base;
    bool distinct = true;
    for (int e : edges)
        if (!base.insert(ctx.cover.edge_base(e)).second) distinct = false;
    Int expected = 0;
    if (distinct) {
        for (const OgodRecord& rec : enumerate_ogods(ctx.cover)) {
            if (rec.edges == base) {
                expected = 1;
                for (int i = 1; i < rec.rank; ++i) expected *= 2;
                break;
            }
        }
    }
    if (cm.degree != expected)
        throw std::logic_error("internal error: determinant and ogod degrees disagree");
    return cm.degree;
}

std::vector<ApCell> enumerate_cells(const ApContext& ctx) {
    std::vector<ApCell> out;
    for (const OgodRecord& rec : enumerate_ogods(ctx.cover)) {
        std::vector<int> base(rec.edges.begin(), rec.edges.end());
        int d = static_cast<int>(base.size());
        for (int mask = 0; mask < (1 << d); ++mask) {
            ApCell cell;
            cell.base_edges = rec.edges;
            cell.rank = rec.rank;
            for (int i = 0; i < d; ++i)
                cell.edges.push_back(ctx.cover.lift(base[i], (mask >> i) & 1 ? -1 : +1));
            out.push_back(std::move(cell));
        }
    }
    return out;
}

BalanceReport harmonicity_balance(const ApContext& ctx, const std::vector<int>& edges,
                                  int drop_index, int vertex_end) {
    CellMatrix cm = cell_matrix(ctx, edges);
    if (drop_index < 0 || drop_index >= static_cast<int>(edges.size()))
        throw std::invalid_argument("drop index out of range");
    const Edge& ea = ctx.cover.total.edges[edges[drop_index]];
    BalanceReport rep;
    rep.vertex = vertex_end == 0 ? ea.src : ea.dst;
    rep.sum = rep.positive_total = rep.negative_total = 0;
    for (const Edge& f : ctx.cover.total.edges) {
        int dir = 0;
        if (f.src == rep.vertex) dir = +1;
        else if (f.dst == rep.vertex) dir = -1;
        if (dir == 0) continue;
        RatMat m = cm.matrix;
        for (int j = 0; j < ctx.dim; ++j) m[j][drop_index] = Rat(dir) * ctx.ecol[f.id][j];
        Rat det = det_rat(m);
        rep.entries.push_back({f.id, det});
        rep.sum += det;
        if (det > 0) rep.positive_total += det;
        if (det < 0) rep.negative_total -= det;
    }
    return rep;
}

TorsorPoint torsor_coordinates(const ApContext& ctx, const SymPoint& divisor) {
    if (static_cast<int>(divisor.size()) != ctx.dim)
        throw std::invalid_argument("divisor must consist of g-1 points");
    TorsorPoint p;
    p.coords.assign(ctx.dim, Rat(0));
    for (const auto& [e, x] : divisor) {
        if (e < 0 || e >= ctx.cover.total.num_edges())
            throw std::invalid_argument("unknown edge in divisor");
        if (x < 0 || x > ctx.cover.total.lengths[e])
            throw std::invalid_argument("point parameter outside the edge");
        int src = ctx.cover.total.edges[e].src;
        for (int j = 0; j < ctx.dim; ++j)
            p.coords[j] += ctx.vcoord[src][j] + x * ctx.ecol[e][j];
    }
    return p;
}

bool torsor_equal(const ApContext& ctx, const TorsorPoint& a, const TorsorPoint& b) {
    std::vector<Rat> diff(ctx.dim);
    for (int j = 0; j < ctx.dim; ++j) diff[j] = a.coords[j] - b.coords[j];
    RatMat gt(ctx.dim, std::vector<Rat>(ctx.dim));
    for (int i = 0; i < ctx.dim; ++i)
        for (int j = 0; j < ctx.dim; ++j) gt[i][j] = ctx.gram[j][i];
    auto lam = solve_rat(gt, diff);
    if (!lam) return false;
    for (const Rat& l : *lam)
        if (l.get_den() != 1) return false;
    return true;
}

std::vector<FiberPoint> fiber(const ApContext& ctx, const TorsorPoint& target) {
    if (static_cast<int>(target.coords.size()) != ctx.dim)
        throw std::invalid_argument("target dimension mismatch");
    int d = ctx.dim;
    RatMat gt(d, std::vector<Rat>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) gt[i][j] = ctx.gram[j][i];

    std::vector<FiberPoint> out;
    for (const ApCell& cell : enumerate_cells(ctx)) {
        RatMat m(d, std::vector<Rat>(d));
        std::vector<Rat> c(d, Rat(0)), len(d);
        for (int i = 0; i < d; ++i) {
            int e = cell.edges[i];
            len[i] = ctx.cover.total.lengths[e];
            for (int j = 0; j < d; ++j) m[j][i] = ctx.ecol[e][j];
            int src = ctx.cover.total.edges[e].src;
            for (int j = 0; j < d; ++j) c[j] += ctx.vcoord[src][j];
        }
        Rat detm = det_rat(m);
        if (detm == 0) continue;  // contracted cells never meet a generic target
        // Lattice translates: bound lambda by its value at the box corners.
        std::vector<Int> lo(d), hi(d);
        bool first = true;
        for (int mask = 0; mask < (1 << d); ++mask) {
            std::vector<Rat> corner(d);
            for (int i = 0; i < d; ++i) corner[i] = (mask >> i) & 1 ? len[i] : Rat(0);
            std::vector<Rat> y = mat_vec_rat(m, corner);
            for (int j = 0; j < d; ++j) y[j] += c[j] - target.coords[j];
            auto lam = solve_rat(gt, y);
            for (int j = 0; j < d; ++j) {
                Int fl = rat_floor((*lam)[j]), ce = rat_ceil((*lam)[j]);
                if (first || fl < lo[j]) lo[j] = fl;
                if (first || ce > hi[j]) hi[j] = ce;
            }
            first = false;
        }
        std::vector<Int> lam(d);
        std::function<void(int)> walk = [&](int pos) {
            if (pos == d) {
                std::vector<Rat> rhs(d);
                for (int j = 0; j < d; ++j) {
                    rhs[j] = target.coords[j] - c[j];
                    for (int k = 0; k < d; ++k) rhs[j] += ctx.gram[k][j] * Rat(lam[k]);
                }
                auto x = solve_rat(m, rhs);
                bool interior = true, closed = true;
                for (int i = 0; i < d; ++i) {
                    if ((*x)[i] <= 0 || (*x)[i] >= len[i]) interior = false;
                    if ((*x)[i] < 0 || (*x)[i] > len[i]) closed = false;
                }
                if (closed && !interior)
                    throw NonGenericTarget("target lies on a cell-image boundary; resample");
                if (interior) out.push_back(FiberPoint{cell, *x, Int(0)});
                return;
            }
            for (Int v = lo[pos]; v <= hi[pos]; ++v) {
                lam[pos] = v;
                walk(pos + 1);
            }
        };
        walk(0);
        Int deg = rat_to_int_exact(detm < 0 ? Rat(-detm) : detm, "non-integer cell degree");
        for (auto& fp : out)
            if (fp.degree == 0 && fp.cell.edges == cell.edges) fp.degree = deg;
    }
    return out;
}

Int fiber_degree_sum(const std::vector<FiberPoint>& pts) {
    Int s = 0;
    for (const FiberPoint& p : pts) s += p.degree;
    return s;
}

AdaptedCellBasis construction_c_analysis(const FreeDoubleCover& cov,
                                         const std::set<int>& ogod_edges) {
    const Graph& base = cov.base;
    int g = genus(base);
    if (static_cast<int>(ogod_edges.size()) != g - 1)
        throw std::invalid_argument("expected g-1 edges");
    auto comps = connected_components(base, ogod_edges);
    int r = static_cast<int>(comps.size());
    std::vector<int> comp_of(base.num_vertices, -1);
    for (int k = 0; k < r; ++k)
        for (int v : comps[k]) comp_of[v] = k;

    // Order the components by discovery from the one containing vertex 0,
    // scanning the removed edges in ascending id; record the connector edge
    // that discovers each component.
    std::vector<int> order{comp_of[0]};
    std::vector<int> connectors;
    std::vector<bool> discovered(r, false);
    discovered[comp_of[0]] = true;
    while (static_cast<int>(order.size()) < r) {
        bool progress = false;
        for (int f : ogod_edges) {
            int a = comp_of[base.edges[f].src], b = comp_of[base.edges[f].dst];
            if (discovered[a] == discovered[b]) continue;
            int child = discovered[a] ? b : a;
            discovered[child] = true;
            order.push_back(child);
            connectors.push_back(f);
            progress = true;
            break;
        }
        if (!progress) throw std::logic_error("internal error: contracted graph disconnected");
    }

    // Per-component spanning trees (greedy ascending = lexicographically
    // least) and the single leftover cycle edge of each component.
    std::vector<int> uf(base.num_vertices);
    for (int v = 0; v < base.num_vertices; ++v) uf[v] = v;
    std::function<int(int)> find = [&](int v) { return uf[v] == v ? v : uf[v] = find(uf[v]); };
    std::set<int> tree;
    std::vector<int> cycle_edge(r, -1);
    for (const Edge& e : base.edges) {
        if (ogod_edges.count(e.id)) continue;
        int a = find(e.src), b = find(e.dst);
        if (a != b) {
            uf[a] = b;
            tree.insert(e.id);
        } else {
            int k = comp_of[e.src];
            if (cycle_edge[k] != -1)
                throw std::invalid_argument("component has genus > 1; not an ogod");
            cycle_edge[k] = e.id;
        }
    }
    for (int k = 0; k < r; ++k)
        if (cycle_edge[k] == -1) throw std::invalid_argument("component is a tree; not an ogod");
    for (int f : connectors) tree.insert(f);

    // Flip set of the same cover in the new presentation: a complementary
    // edge is flipped iff its fundamental cycle is odd for the original
    // flips.
    std::set<int> flips;
    for (int e = 0; e < base.num_edges(); ++e) {
        if (tree.count(e)) continue;
        Chain cyc = fundamental_cycle(base, tree, e);
        int parity = 0;
        for (const auto& [ce, cv] : cyc)
            if (cov.flips.count(ce)) parity ^= 1;
        if (parity) flips.insert(e);
    }
    int e0 = cycle_edge[order[0]];
    if (!flips.count(e0))
        throw std::invalid_argument("root component has even cycle; not an ogod");

    AdaptedCellBasis out;
    out.rank = r;
    out.cover = build_cover(base, tree, flips, e0);
    out.basis = prym_basis(out.cover);

    // Row order of the construction: cycle edges of the components in
    // discovery order (root omitted), then the non-connector ogod edges.
    std::vector<int> row_edges;
    for (int k = 1; k < r; ++k) row_edges.push_back(cycle_edge[order[k]]);
    std::set<int> connector_set(connectors.begin(), connectors.end());
    std::vector<int> tail;
    for (int f : ogod_edges)
        if (!connector_set.count(f)) tail.push_back(f);
    for (int f : tail) row_edges.push_back(f);

    std::map<int, int> basis_index;
    for (size_t i = 0; i < out.basis.base_edges.size(); ++i)
        basis_index[out.basis.base_edges[i]] = static_cast<int>(i);

    int d = g - 1;
    out.cell.matrix.assign(d, std::vector<Rat>(d));
    std::vector<int> col_edges;
    for (int f : connectors) col_edges.push_back(f);
    for (int f : tail) col_edges.push_back(f);
    for (int i = 0; i < d; ++i) {
        int lift = out.cover.lift(col_edges[i], +1);
        std::vector<Rat> col = edge_column(out.cover, out.basis, lift);
        // Reorder to construction rows; pick the lift that makes the
        // diagonal positive.
        std::vector<Rat> rows(d);
        for (int j = 0; j < d; ++j) rows[j] = col[basis_index.at(row_edges[j])];
        if (rows[i] < 0) {
            lift = out.cover.lift(col_edges[i], -1);
            for (int j = 0; j < d; ++j) rows[j] = -rows[j];
        }
        out.columns.push_back(lift);
        for (int j = 0; j < d; ++j) out.cell.matrix[j][i] = rows[j];
    }
    out.cell.edges = out.columns;
    out.cell.det = det_rat(out.cell.matrix);
    out.cell.degree =
        rat_to_int_exact(out.cell.det < 0 ? Rat(-out.cell.det) : out.cell.det, "cell degree");
    return out;
}

void emit_cells_svg(const ApContext& ctx, std::ostream& os) {
    if (ctx.dim != 2)
        throw std::invalid_argument("tessellation drawing requires g-1 = 2");
    struct Poly {
        double pts[4][2];
        Int degree;
    };
    std::vector<Poly> polys;
    RatMat gt(2, std::vector<Rat>(2));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) gt[i][j] = ctx.gram[j][i];

    for (const ApCell& cell : enumerate_cells(ctx)) {
        RatMat m(2, std::vector<Rat>(2));
        std::vector<Rat> c(2, Rat(0)), len(2);
        for (int i = 0; i < 2; ++i) {
            int e = cell.edges[i];
            len[i] = ctx.cover.total.lengths[e];
            for (int j = 0; j < 2; ++j) m[j][i] = ctx.ecol[e][j];
            for (int j = 0; j < 2; ++j) c[j] += ctx.vcoord[ctx.cover.total.edges[e].src][j];
        }
        Rat detm = det_rat(m);
        // Translate the barycenter into the fundamental domain of the
        // Gram-row lattice so the picture stays compact.
        std::vector<Rat> bary(2);
        for (int j = 0; j < 2; ++j) bary[j] = c[j] + m[j][0] * len[0] / 2 + m[j][1] * len[1] / 2;
        auto mu = solve_rat(gt, bary);
        for (int j = 0; j < 2; ++j) {
            Rat shift = 0;
            for (int k = 0; k < 2; ++k) shift += ctx.gram[k][j] * Rat(rat_floor((*mu)[k]));
            c[j] -= shift;
        }
        Poly p;
        int corner_order[4][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
        for (int k = 0; k < 4; ++k)
            for (int j = 0; j < 2; ++j) {
                Rat v = c[j];
                if (corner_order[k][0]) v += m[j][0] * len[0];
                if (corner_order[k][1]) v += m[j][1] * len[1];
                p.pts[k][j] = v.get_d();
            }
        Rat absdet = detm < 0 ? Rat(-detm) : detm;
        p.degree = absdet.get_num();
        polys.push_back(p);
    }
    double minx = 0, miny = 0, maxx = 0, maxy = 0;
    bool first = true;
    for (const Poly& p : polys)
        for (int k = 0; k < 4; ++k) {
            if (first || p.pts[k][0] < minx) minx = p.pts[k][0];
            if (first || p.pts[k][0] > maxx) maxx = p.pts[k][0];
            if (first || p.pts[k][1] < miny) miny = p.pts[k][1];
            if (first || p.pts[k][1] > maxy) maxy = p.pts[k][1];
            first = false;
        }
    double w = maxx - minx, h = maxy - miny;
    if (w == 0) w = 1;
    if (h == 0) h = 1;
    double scale = 760.0 / std::max(w, h);
    auto sx = [&](double x) { return 20 + (x - minx) * scale; };
    auto sy = [&](double y) { return 780 - (y - miny) * scale; };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"800\" "
          "viewBox=\"0 0 800 800\">\n";
    const char* fills[] = {"#cfe8ff", "#ffe3b3", "#d8f5d0", "#f5d0e8", "#e0e0e0"};
    for (const Poly& p : polys) {
        int deg_idx = 0;
        for (Int d = p.degree; d > 1; d /= 2) ++deg_idx;
        os << "<polygon points=\"";
        for (int k = 0; k < 4; ++k)
            os << sx(p.pts[k][0]) << "," << sy(p.pts[k][1]) << (k < 3 ? " " : "");
        os << "\" fill=\"" << fills[std::min(deg_idx, 4)]
           << "\" fill-opacity=\"0.45\" stroke=\"#333\" stroke-width=\"1\"/>\n";
        double cx = (p.pts[0][0] + p.pts[2][0]) / 2, cy = (p.pts[0][1] + p.pts[2][1]) / 2;
        os << "<text x=\"" << sx(cx) << "\" y=\"" << sy(cy)
           << "\" font-size=\"13\" text-anchor=\"middle\">" << p.degree.get_str()
           << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace prym
