#include "prym/zeta.hpp"

#include <stdexcept>

namespace prym {

IntPolynomial poly_det(PolyMat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return IntPolynomial::constant(1);
    IntPolynomial prev = IntPolynomial::constant(1);
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (!a[i][k].is_zero()) {
                    swap = i;
                    break;
                }
            if (swap < 0) return IntPolynomial();
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                IntPolynomial num =
                    poly_sub(poly_mul(a[i][j], a[k][k]), poly_mul(a[i][k], a[k][j]));
                a[i][j] = poly_divexact(num, prev);
            }
            a[i][k] = IntPolynomial();
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : poly_neg(a[n - 1][n - 1]);
}

IntMat valency_matrix(const Graph& g) {
    IntMat q(g.num_vertices, std::vector<Int>(g.num_vertices, 0));
    for (const Edge& e : g.edges) {
        q[e.src][e.src] += 1;
        q[e.dst][e.dst] += 1;  // a loop lands here twice
    }
    return q;
}

IntMat adjacency_matrix(const Graph& g) {
    IntMat a(g.num_vertices, std::vector<Int>(g.num_vertices, 0));
    for (const Edge& e : g.edges) {
        a[e.src][e.dst] += 1;
        a[e.dst][e.src] += 1;  // a loop contributes 2 to the diagonal
    }
    return a;
}

IntMat twisted_adjacency_matrix(const FreeDoubleCover& cov) {
    const Graph& g = cov.base;
    IntMat a(g.num_vertices, std::vector<Int>(g.num_vertices, 0));
    for (const Edge& e : g.edges) {
        int w = cov.flips.count(e.id) ? -1 : 1;
        a[e.src][e.dst] += w;
        a[e.dst][e.src] += w;
    }
    return a;
}

static IntPolynomial three_term_determinant(const IntMat& a, const IntMat& q, int g) {
    int n = static_cast<int>(a.size());
    PolyMat m(n, std::vector<IntPolynomial>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Int> c(3, 0);
            c[0] = (i == j) ? 1 : 0;
            c[1] = -a[i][j];
            c[2] = q[i][j] - (i == j ? 1 : 0);
            m[i][j] = IntPolynomial(std::move(c));
        }
    IntPolynomial det = poly_det(std::move(m));
    // (1 - s^2)^(g-1)
    IntPolynomial front = poly_pow(IntPolynomial(std::vector<Int>{1, 0, -1}), g - 1);
    return poly_mul(front, det);
}

IntPolynomial ihara_zeta_reciprocal(const Graph& g) {
    int gen = genus(g);
    if (gen < 1) throw std::invalid_argument("zeta is trivial for genus 0");
    return three_term_determinant(adjacency_matrix(g), valency_matrix(g), gen);
}

IntPolynomial artin_L_reciprocal(const FreeDoubleCover& cov) {
    int gen = genus(cov.base);
    return three_term_determinant(twisted_adjacency_matrix(cov), valency_matrix(cov.base), gen);
}

}  // namespace prym
