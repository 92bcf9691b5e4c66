#include "prym/prym_group.hpp"

#include <stdexcept>

#include "prym/ogod.hpp"

namespace prym {

Divisor norm(const FreeDoubleCover& cov, const Divisor& d_total) {
    return pushforward_divisor(cov, d_total);
}

int parity(const FreeDoubleCover& cov, const Divisor& d_total) {
    for (const auto& [v, a] : norm(cov, d_total))
        if (a != 0) throw std::invalid_argument("divisor is not in the kernel of the norm");
    Int s = 0;
    for (const auto& [v, a] : d_total)
        if (cov.vert_sign(v) > 0) s += a;
    return static_cast<int>(mpz_class(abs(s) % 2).get_si());
}

IntMat signed_laplacian(const FreeDoubleCover& cov) {
    int n = cov.n();
    IntMat q(n, std::vector<Int>(n, 0));
    for (const Edge& e : cov.base.edges) {
        bool flip = cov.flips.count(e.id) > 0;
        if (e.src == e.dst) {
            if (flip) q[e.src][e.src] += 4;
        } else {
            q[e.src][e.src] += 1;
            q[e.dst][e.dst] += 1;
            q[e.src][e.dst] += flip ? 1 : -1;
            q[e.dst][e.src] += flip ? 1 : -1;
        }
    }
    return q;
}

IntMat s_twisted_incidence(const FreeDoubleCover& cov) {
    int n = cov.n(), m = cov.m();
    IntMat b(n, std::vector<Int>(m, 0));
    for (const Edge& e : cov.base.edges) {
        bool flip = cov.flips.count(e.id) > 0;
        if (e.src == e.dst) {
            if (flip) b[e.src][e.id] = 2;
        } else {
            b[e.dst][e.id] = 1;
            b[e.src][e.id] = flip ? 1 : -1;
        }
    }
    return b;
}

Int prym_order(const FreeDoubleCover& cov, PrymOrderMethod method) {
    switch (method) {
        case PrymOrderMethod::ratio: {
            Int num = jacobian_order(cov.total);
            Int den = 2 * jacobian_order(cov.base);
            if (num % den != 0)
                throw std::logic_error("internal error: Jacobian ratio is not an integer");
            return num / den;
        }
        case PrymOrderMethod::signed_det: {
            Int d = det_int(signed_laplacian(cov));
            if (d < 0 || d % 4 != 0)
                throw std::logic_error("internal error: signed determinant not divisible by 4");
            return d / 4;
        }
        case PrymOrderMethod::ogod_sum: {
            Int s = 0;
            for (const OgodRecord& rec : enumerate_ogods(cov)) {
                Int term = 1;
                for (int i = 1; i < rec.rank; ++i) term *= 4;
                s += term;
            }
            return s;
        }
    }
    throw std::invalid_argument("unknown method");
}

AbelianGroupStructure ker_nm_structure(const FreeDoubleCover& cov) {
    // Generators D_v = v+ - v-. A combination sum a_v D_v is principal iff
    // L_total * c = (a, -a) for an integer c; stack [L_total | -P] with
    // P*a = (a, -a) and project its kernel onto the a-block.
    int n = cov.n();
    IntMat l = laplacian(cov.total);
    int rows = 2 * n;
    IntMat stacked(rows, std::vector<Int>(2 * n + n, 0));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < 2 * n; ++j) stacked[i][j] = l[i][j];
    for (int v = 0; v < n; ++v) {
        stacked[v][2 * n + v] = -1;       // v+ coefficient of P
        stacked[v + n][2 * n + v] = 1;    // v- coefficient of P is -1, negated
    }
    IntMat ker = kernel_lattice(stacked);
    int k = ker.empty() ? 0 : static_cast<int>(ker[0].size());
    IntMat relations(n, std::vector<Int>(k, 0));
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < k; ++j) relations[v][j] = ker[2 * n + v][j];
    return group_structure(relations);
}

Int ker_nm_order(const FreeDoubleCover& cov) {
    AbelianGroupStructure s = ker_nm_structure(cov);
    if (s.free_rank != 0) throw std::logic_error("internal error: Ker Nm not finite");
    return s.order();
}

}  // namespace prym
