#include "prym/smith.hpp"

#include <algorithm>
#include <stdexcept>

namespace prym {

IntMat int_identity(int n) {
    IntMat m(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Int det_int(IntMat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    for (auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("not square");
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int swap = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0) return 0;
            std::swap(a[k], a[swap]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                // Bareiss: division by the previous pivot is exact.
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Rat det_rat(RatMat a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Rat det = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[k], a[piv]);
            det = -det;
        }
        det *= a[k][k];
        for (int i = k + 1; i < n; ++i) {
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

std::optional<std::vector<Rat>> solve_rat(RatMat a, std::vector<Rat> b) {
    int n = static_cast<int>(a.size());
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][k] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (int i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            Rat f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    std::vector<Rat> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

static void row_op(IntMat& m, int dst, int src, const Int& f) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += f * m[src][j];
}

static void col_op(IntMat& m, int dst, int src, const Int& f) {
    for (size_t i = 0; i < m.size(); ++i) m[i][dst] += f * m[i][src];
}

SmithResult smith_normal_form(const IntMat& a) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    SmithResult out;
    out.s = a;
    out.u = int_identity(r);
    out.v = int_identity(c);
    IntMat& s = out.s;
    IntMat& u = out.u;
    IntMat& v = out.v;

    auto clear_from = [&](int start) {
        for (int k = start; k < std::min(r, c); ++k) {
            while (true) {
                // Smallest-magnitude nonzero pivot in the trailing block.
                int pi = -1, pj = -1;
                for (int i = k; i < r; ++i)
                    for (int j = k; j < c; ++j)
                        if (s[i][j] != 0 &&
                            (pi < 0 || abs(s[i][j]) < abs(s[pi][pj]))) {
                            pi = i;
                            pj = j;
                        }
                if (pi < 0) return;  // trailing block is zero
                if (pi != k) {
                    std::swap(s[pi], s[k]);
                    std::swap(u[pi], u[k]);
                }
                if (pj != k) {
                    for (int i = 0; i < r; ++i) std::swap(s[i][pj], s[i][k]);
                    for (int i = 0; i < c; ++i) std::swap(v[i][pj], v[i][k]);
                }
                bool clean = true;
                for (int i = k + 1; i < r; ++i) {
                    if (s[i][k] == 0) continue;
                    Int q = s[i][k] / s[k][k];
                    row_op(s, i, k, -q);
                    row_op(u, i, k, -q);
                    if (s[i][k] != 0) clean = false;
                }
                for (int j = k + 1; j < c; ++j) {
                    if (s[k][j] == 0) continue;
                    Int q = s[k][j] / s[k][k];
                    col_op(s, j, k, -q);
                    col_op(v, j, k, -q);
                    if (s[k][j] != 0) clean = false;
                }
                if (clean) break;
            }
        }
    };

    clear_from(0);

    // Normalize signs and enforce the divisibility chain.
    int d = std::min(r, c);
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < d; ++i) {
            if (s[i][i] < 0) {
                for (int j = 0; j < c; ++j) s[i][j] = -s[i][j];
                for (int j = 0; j < r; ++j) u[i][j] = -u[i][j];
            }
        }
        for (int i = 0; i + 1 < d; ++i) {
            if (s[i + 1][i + 1] != 0 && s[i][i] == 0) {
                // Push zeros to the end.
                std::swap(s[i], s[i + 1]);
                std::swap(u[i], u[i + 1]);
                for (int j = 0; j < r; ++j) std::swap(s[j][i], s[j][i + 1]);
                // (columns of s are already diagonal, swap v too)
                for (int j = 0; j < c; ++j) std::swap(v[j][i], v[j][i + 1]);
                changed = true;
            } else if (s[i][i] != 0 && s[i + 1][i + 1] % s[i][i] != 0) {
                col_op(s, i, i + 1, 1);
                col_op(v, i, i + 1, 1);
                clear_from(i);
                changed = true;
            }
        }
    }
    out.rank = 0;
    for (int i = 0; i < d; ++i)
        if (s[i][i] != 0) ++out.rank;
    return out;
}

Int AbelianGroupStructure::order() const {
    Int o = 1;
    for (const Int& f : invariant_factors) o *= f;
    return o;
}

AbelianGroupStructure group_structure(const IntMat& relations) {
    SmithResult snf = smith_normal_form(relations);
    AbelianGroupStructure g;
    int rows = static_cast<int>(relations.size());
    g.free_rank = rows - snf.rank;
    for (int i = 0; i < snf.rank; ++i)
        if (snf.s[i][i] > 1) g.invariant_factors.push_back(snf.s[i][i]);
    return g;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    if (static_cast<int>(b.size()) != r) throw std::invalid_argument("size mismatch");
    SmithResult snf = smith_normal_form(a);
    std::vector<Int> ub = mat_vec(snf.u, b);
    std::vector<Int> y(c, 0);
    for (int i = 0; i < r; ++i) {
        Int di = (i < std::min(r, c)) ? snf.s[i][i] : Int(0);
        if (di == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        }
    }
    return mat_vec(snf.v, y);
}

IntMat kernel_lattice(const IntMat& a) {
    int r = static_cast<int>(a.size());
    int c = r ? static_cast<int>(a[0].size()) : 0;
    SmithResult snf = smith_normal_form(a);
    // Columns of v with index >= rank span the kernel.
    IntMat out(c, std::vector<Int>(c - snf.rank, 0));
    for (int j = snf.rank; j < c; ++j)
        for (int i = 0; i < c; ++i) out[i][j - snf.rank] = snf.v[i][j];
    return out;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    int r = static_cast<int>(a.size());
    int k = r ? static_cast<int>(a[0].size()) : 0;
    int c = k ? static_cast<int>(b[0].size()) : 0;
    IntMat out(r, std::vector<Int>(c, 0));
    for (int i = 0; i < r; ++i)
        for (int l = 0; l < k; ++l)
            if (a[i][l] != 0)
                for (int j = 0; j < c; ++j) out[i][j] += a[i][l] * b[l][j];
    return out;
}

std::vector<Int> mat_vec(const IntMat& a, const std::vector<Int>& x) {
    std::vector<Int> out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i] += a[i][j] * x[j];
    return out;
}

}  // namespace prym
