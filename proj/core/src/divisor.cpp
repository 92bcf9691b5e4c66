#include "prym/divisor.hpp"

#include <stdexcept>

namespace prym {

Int divisor_degree(const Divisor& d) {
    Int s = 0;
    for (const auto& [v, a] : d) s += a;
    return s;
}

std::vector<Int> divisor_to_vector(const Graph& g, const Divisor& d) {
    std::vector<Int> out(g.num_vertices, 0);
    for (const auto& [v, a] : d) {
        if (v < 0 || v >= g.num_vertices) throw std::invalid_argument("unknown vertex in divisor");
        out[v] = a;
    }
    return out;
}

Divisor vector_to_divisor(const std::vector<Int>& v) {
    Divisor d;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) d[static_cast<int>(i)] = v[i];
    return d;
}

IntMat laplacian(const Graph& g) {
    IntMat l(g.num_vertices, std::vector<Int>(g.num_vertices, 0));
    for (const Edge& e : g.edges) {
        if (e.src == e.dst) continue;
        l[e.src][e.src] += 1;
        l[e.dst][e.dst] += 1;
        l[e.src][e.dst] -= 1;
        l[e.dst][e.src] -= 1;
    }
    return l;
}

IntMat reduced_laplacian(const Graph& g, int drop) {
    IntMat l = laplacian(g);
    IntMat out;
    for (int i = 0; i < g.num_vertices; ++i) {
        if (i == drop) continue;
        std::vector<Int> row;
        for (int j = 0; j < g.num_vertices; ++j)
            if (j != drop) row.push_back(l[i][j]);
        out.push_back(std::move(row));
    }
    return out;
}

Int jacobian_order(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    Int d = det_int(reduced_laplacian(g));
    return d < 0 ? Int(-d) : d;
}

AbelianGroupStructure jacobian_structure(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    return group_structure(reduced_laplacian(g));
}

EquivalenceResult linearly_equivalent(const Graph& g, const Divisor& d1, const Divisor& d2) {
    EquivalenceResult res;
    if (divisor_degree(d1) != divisor_degree(d2)) return res;
    std::vector<Int> rhs = divisor_to_vector(g, d2);
    std::vector<Int> v1 = divisor_to_vector(g, d1);
    for (int i = 0; i < g.num_vertices; ++i) rhs[i] -= v1[i];
    // L*a = d2 - d1, so d2 = d1 + principal_divisor(-a); store -a so that
    // adding principal_divisor(witness) to d1 reproduces d2.
    auto a = solve_integer(laplacian(g), rhs);
    if (!a) return res;
    res.equivalent = true;
    res.witness = *a;
    for (Int& x : res.witness) x = -x;
    return res;
}

Divisor principal_divisor(const Graph& g, const std::vector<Int>& a) {
    std::vector<Int> la = mat_vec(laplacian(g), a);
    for (Int& x : la) x = -x;
    return vector_to_divisor(la);
}

}  // namespace prym
