#include "prym/prym_lattice.hpp"

#include <stdexcept>

namespace prym {

PrymBasis prym_basis(const FreeDoubleCover& cov) {
    PrymBasis b;
    std::set<int> ttree = cov.total_tree();
    b.gamma0 = fundamental_cycle(cov.total, ttree, cov.lift(cov.e0, -1));
    for (int e = 0; e < cov.m(); ++e) {
        if (cov.tree.count(e) || e == cov.e0) continue;
        b.base_edges.push_back(e);
        Chain plus = fundamental_cycle(cov.total, ttree, cov.lift(e, +1));
        Chain elem = plus;
        chain_add(elem, involute_chain(cov, plus), -1);
        b.plus_cycles.push_back(std::move(plus));
        b.cycles.push_back(std::move(elem));
    }
    if (static_cast<int>(b.cycles.size()) != genus(cov.base) - 1)
        throw std::logic_error("internal error: basis size mismatch");
    for (const Chain& c : b.cycles)
        for (const auto& [e, v] : pushforward_chain(cov, c))
            if (v != 0) throw std::logic_error("internal error: basis cycle has nonzero pushforward");
    return b;
}

Rat prym_pairing(const FreeDoubleCover& cov, const Chain& c, const Chain& d) {
    return length_pairing(c, d, cov.total) / 2;
}

RatMat gram_matrix(const FreeDoubleCover& cov, const PrymBasis& basis) {
    int k = static_cast<int>(basis.cycles.size());
    RatMat g(k, std::vector<Rat>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            g[i][j] = prym_pairing(cov, basis.cycles[i], basis.cycles[j]);
    return g;
}

Rat vol2_prym_gram(const FreeDoubleCover& cov) {
    return det_rat(gram_matrix(cov, prym_basis(cov)));
}

bool prym_basis_is_saturated(const FreeDoubleCover& cov, const PrymBasis& basis) {
    // Kernel of the pushforward on the cycle space of the total graph,
    // expressed in edge coordinates.
    std::set<int> ttree = cov.total_tree();
    std::vector<Chain> h1;
    for (const Edge& e : cov.total.edges)
        if (!ttree.count(e.id)) h1.push_back(fundamental_cycle(cov.total, ttree, e.id));
    int m2 = cov.total.num_edges(), h = static_cast<int>(h1.size());
    // p_* composed with the H1 coordinates: base-edge rows, H1-basis columns.
    IntMat push(cov.m(), std::vector<Int>(h, 0));
    for (int j = 0; j < h; ++j)
        for (const auto& [e, v] : pushforward_chain(cov, h1[j])) push[e][j] = v;
    IntMat ker = kernel_lattice(push);
    int k = ker.empty() ? 0 : static_cast<int>(ker[0].size());
    // Kernel generators as edge-coordinate columns.
    IntMat kgen(m2, std::vector<Int>(k, 0));
    for (int j = 0; j < k; ++j) {
        Chain c;
        for (int i = 0; i < h; ++i) chain_add(c, h1[i], ker[i][j]);
        for (const auto& [e, v] : c) kgen[e][j] = v;
    }
    IntMat bmat(m2, std::vector<Int>(basis.cycles.size(), 0));
    for (size_t j = 0; j < basis.cycles.size(); ++j)
        for (const auto& [e, v] : basis.cycles[j]) bmat[e][j] = v;

    auto column = [m2](const IntMat& m, int j) {
        std::vector<Int> col(m2);
        for (int i = 0; i < m2; ++i) col[i] = m[i][j];
        return col;
    };
    for (size_t j = 0; j < basis.cycles.size(); ++j)
        if (!solve_integer(kgen, column(bmat, static_cast<int>(j)))) return false;
    for (int j = 0; j < k; ++j)
        if (!solve_integer(bmat, column(kgen, j))) return false;
    return true;
}

}  // namespace prym
