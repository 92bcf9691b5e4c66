#include <doctest.h>

#include "oracles.hpp"
#include "prym/divisor.hpp"
#include "prym/fixtures.hpp"
#include "prym/prym_group.hpp"
#include "prym/zeta.hpp"

using namespace prym;

TEST_CASE("cycle graph zeta") {
    // n-cycle: exactly two prime classes (the two orientations), so
    // 1/zeta = (1 - s^n)^2
    for (int n : {3, 4, 5}) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
        Graph g = make_graph(n, edges);
        IntPolynomial z = ihara_zeta_reciprocal(g);
        std::vector<Int> expect(2 * n + 1, 0);
        expect[0] = 1;
        expect[n] = -2;
        expect[2 * n] = 1;
        CHECK(z.coeffs == expect);
    }
}

TEST_CASE("euler product oracle confirms the determinant formula") {
    Rng rng(43);
    int done = 0;
    while (done < 12) {
        FreeDoubleCover cov = random_cover(rng, 6, 4);
        if (cov.m() > 6) continue;
        ++done;
        int cap = 12;
        IntPolynomial z = ihara_zeta_reciprocal(cov.base);
        REQUIRE(z.degree() <= cap);
        std::vector<Int> want = oracle::zeta_reciprocal_euler(cov.base, cap);
        for (int i = 0; i <= cap; ++i) CHECK(z.coeff(i) == want[i]);
        IntPolynomial l = artin_L_reciprocal(cov);
        std::vector<Int> lwant = oracle::artin_L_reciprocal_euler(cov, cap);
        for (int i = 0; i <= cap; ++i) CHECK(l.coeff(i) == lwant[i]);
    }
}

TEST_CASE("zeta factorization along the cover") {
    Rng rng(47);
    for (int i = 0; i < 25; ++i) {
        FreeDoubleCover cov = random_cover(rng, 7, 5);
        IntPolynomial prod = poly_mul(ihara_zeta_reciprocal(cov.base), artin_L_reciprocal(cov));
        CHECK(prod == ihara_zeta_reciprocal(cov.total));
    }
}

TEST_CASE("L-function reciprocal has constant term one") {
    Rng rng(53);
    for (int i = 0; i < 10; ++i) {
        FreeDoubleCover cov = random_cover(rng, 7, 5);
        CHECK(artin_L_reciprocal(cov).coeff(0) == 1);
    }
}

TEST_CASE("vanishing at s=1 recovers the jacobian order") {
    Rng rng(59);
    int done = 0;
    while (done < 25) {
        Graph g = random_connected_graph(rng, 2 + rand_below(rng, 6), 2 + rand_below(rng, 4));
        int gen = genus(g);
        if (gen < 2) continue;
        ++done;
        VanishingInfo v = vanishing_order_and_leading(ihara_zeta_reciprocal(g));
        CHECK(v.order == gen);
        Int scale = (gen % 2 == 0 ? -1 : 1) * (Int(1) << gen) * (gen - 1);
        CHECK(v.leading == scale * jacobian_order(g));
    }
}

TEST_CASE("L-function leading coefficient recovers the prym order") {
    Rng rng(61);
    for (int i = 0; i < 25; ++i) {
        FreeDoubleCover cov = random_cover(rng, 7, 5);
        int gen = genus(cov.base);
        VanishingInfo v = vanishing_order_and_leading(artin_L_reciprocal(cov));
        CHECK(v.order == gen - 1);
        Int det = det_int(signed_laplacian(cov));
        Int scale = (gen % 2 == 0 ? -1 : 1) * (Int(1) << (gen - 1));
        CHECK(v.leading == scale * det);
        CHECK(v.leading == scale * 4 * prym_order(cov, PrymOrderMethod::ratio));
    }
}

TEST_CASE("zeta requires positive genus") {
    Graph tree = make_graph(2, {{0, 1}});
    CHECK_THROWS_AS(ihara_zeta_reciprocal(tree), std::invalid_argument);
}
