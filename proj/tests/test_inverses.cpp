#include <doctest.h>

#include "geninv/genrand.hpp"
#include "geninv/inverses.hpp"
#include "test_support.hpp"

using namespace geninv;
using geninv::test::check_close;
using geninv::test::dist;
using geninv::test::kCfg;

namespace {

const ComplexMatrix kExampleA{{1, 0, 0}, {0, 1, 2}, {0, 0, 0}};
const ComplexMatrix kExampleB{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}};
// A B B^+ = [[1,0,0],[0,0,2],[0,0,0]]; its pseudoinverse by the Penrose check.
const ComplexMatrix kExampleWant{{1, 0, 0}, {0, 0, 0}, {0, 0.5, 0}};

constexpr GeninvWrtRoute kAllRoutes[] = {
    GeninvWrtRoute::definition,
    GeninvWrtRoute::pair_svd,
    GeninvWrtRoute::core_ep_pair,
    GeninvWrtRoute::product_form,
};

/// Seeded pair with rank(A) = ra, rank(B) = s and R(B) inside R(A^*), which
/// makes A injective on R(B) and therefore rank(AB) = rank(B). This is the
/// regime in which all four routes provably coincide.
std::pair<ComplexMatrix, ComplexMatrix> pair_in_agreement_regime(std::size_t n, std::size_t ra,
                                                                 std::size_t s,
                                                                 std::uint64_t seed) {
    REQUIRE(s <= ra);
    ComplexMatrix a = random_matrix_with_rank(n, n, ra, seed);
    SubspaceBasis row_space = range_basis(adjoint(a), kCfg);
    REQUIRE(row_space.dim() == ra);
    ComplexMatrix mix = random_matrix_with_rank(ra, n, s, seed + 1);
    ComplexMatrix b = *row_space.basis * mix;
    REQUIRE(rank(b, kCfg) == s);
    REQUIRE(rank(a * b, kCfg) == s);
    return {std::move(a), std::move(b)};
}

} // namespace

TEST_CASE("geninv_wrt: worked example, all four routes") {
    REQUIRE(geninv::test::penrose_residual(kExampleA * kExampleB * pinv(kExampleB, kCfg),
                                           kExampleWant) <= 1e-12);
    for (GeninvWrtRoute route : kAllRoutes) {
        ComplexMatrix x = geninv_wrt(kExampleA, kExampleB, kCfg, route);
        check_close(x, kExampleWant, 1e-12);
    }
}

TEST_CASE("geninv_wrt: B = I gives the Moore-Penrose inverse") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::size_t n = 2 + seed % 4;
        ComplexMatrix a = random_matrix_with_rank(n, n, 1 + seed % n, 100 + seed);
        check_close(geninv_wrt(a, ComplexMatrix::identity(n), kCfg), pinv(a, kCfg));
    }
}

TEST_CASE("geninv_wrt: AB = 0 gives the zero matrix") {
    ComplexMatrix a{{0, 1}, {0, 0}};
    ComplexMatrix b{{1, 0}, {0, 0}};
    REQUIRE(frobenius_norm(a * b) == 0.0);
    for (GeninvWrtRoute route :
         {GeninvWrtRoute::definition, GeninvWrtRoute::pair_svd, GeninvWrtRoute::product_form}) {
        CHECK(frobenius_norm(geninv_wrt(a, b, kCfg, route)) <= 1e-12);
    }
    // core_ep_pair route is undefined here: (AB)^k = 0.
    CHECK_THROWS_AS(geninv_wrt(a, b, kCfg, GeninvWrtRoute::core_ep_pair), NilpotentProduct);

    SUBCASE("random-frame AB = 0 instances stay clean on every defined route") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            ComplexMatrix af = random_matrix_with_rank(4, 4, 2, 200 + seed);
            SubspaceBasis nb = null_basis(af, kCfg);
            REQUIRE(nb.dim() == 2);
            ComplexMatrix bf = *nb.basis * random_matrix_with_rank(2, 4, 2, 300 + seed);
            REQUIRE(frobenius_norm(af * bf) <= 1e-14);
            for (GeninvWrtRoute route : {GeninvWrtRoute::definition, GeninvWrtRoute::pair_svd,
                                         GeninvWrtRoute::product_form}) {
                CHECK(frobenius_norm(geninv_wrt(af, bf, kCfg, route)) <= 1e-9);
            }
        }
    }
}

TEST_CASE("geninv_wrt: route agreement on the provable regime") {
    std::size_t count = 0;
    for (std::uint64_t seed = 1; count < 50; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const std::size_t ra = 1 + seed % n;
        const std::size_t s = 1 + seed % ra;
        auto [a, b] = pair_in_agreement_regime(n, ra, s, 400 + 5 * seed);
        ComplexMatrix x0 = geninv_wrt(a, b, kCfg);
        const double scale = std::max(1.0, frobenius_norm(x0));
        for (GeninvWrtRoute route : kAllRoutes) {
            if (route == GeninvWrtRoute::core_ep_pair && rank(matrix_power(a * b, 1), kCfg) == 0)
                continue;
            ComplexMatrix x = geninv_wrt(a, b, kCfg, route);
            CHECK(dist(x, x0) <= 1e-8 * scale);
        }
        ++count;
    }
}

TEST_CASE("geninv_wrt: product form needs rank(AB) = rank(B)") {
    // Exact counterexample: with invertible B the definition gives A^+, the
    // product form does not.
    ComplexMatrix a{{1, 0}, {0, 0}};
    ComplexMatrix b{{1, 1}, {0, 1}};
    REQUIRE(rank(a * b, kCfg) == 1);
    REQUIRE(rank(b, kCfg) == 2);
    ComplexMatrix x_def = geninv_wrt(a, b, kCfg);
    check_close(x_def, ComplexMatrix{{1, 0}, {0, 0}}, 1e-12);
    ComplexMatrix x_prod = geninv_wrt(a, b, kCfg, GeninvWrtRoute::product_form);
    check_close(x_prod, ComplexMatrix{{1, 0}, {0.5, 0}}, 1e-12);
    CHECK(dist(x_def, x_prod) > 0.4);

    // The other routes agree with the definition even here.
    check_close(geninv_wrt(a, b, kCfg, GeninvWrtRoute::pair_svd), x_def, 1e-12);
    check_close(geninv_wrt(a, b, kCfg, GeninvWrtRoute::core_ep_pair), x_def, 1e-12);
}

TEST_CASE("geninv_wrt: preconditions") {
    ComplexMatrix a = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(geninv_wrt(a, ComplexMatrix::identity(3), kCfg), DimensionMismatch);
    CHECK_THROWS_AS(geninv_wrt(ComplexMatrix::zero(2, 3), ComplexMatrix::zero(3, 2), kCfg),
                    NotSquare);
    CHECK_THROWS_AS(geninv_wrt(ComplexMatrix::zero(2, 2), a, kCfg, GeninvWrtRoute::pair_svd),
                    ZeroMatrix);
}

TEST_CASE("drazin") {
    SUBCASE("invertible diag(2,3) -> diag(1/2,1/3)") {
        check_close(drazin(ComplexMatrix::diagonal({2.0, 3.0}), kCfg),
                    ComplexMatrix::diagonal({0.5, 1.0 / 3.0}), 1e-12);
    }
    SUBCASE("idempotent [[1,1],[0,0]] is its own Drazin inverse") {
        ComplexMatrix a{{1, 1}, {0, 0}};
        check_close(drazin(a, kCfg), a, 1e-12);
    }
    SUBCASE("nilpotent -> 0") {
        CHECK(frobenius_norm(drazin(ComplexMatrix{{0, 1}, {0, 0}}, kCfg)) <= 1e-12);
    }
    SUBCASE("three Drazin equations on planted-index instances") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const std::size_t n = 2 + seed % 6;
            const std::size_t k = seed % std::min<std::size_t>(n + 1, 4);
            ComplexMatrix a = random_with_index(n, k, 500 + seed);
            ComplexMatrix x = drazin(a, kCfg);
            const double scale = std::max(1.0, frobenius_norm(a));
            CHECK(dist(x * a * x, x) <= 1e-8 * scale);
            CHECK(dist(a * x, x * a) <= 1e-8 * scale);
            CHECK(dist(x * matrix_power(a, k + 1), matrix_power(a, k)) <=
                  1e-8 * std::max(1.0, frobenius_norm(matrix_power(a, k))));
        }
    }
    SUBCASE("not square") {
        CHECK_THROWS_AS(drazin(ComplexMatrix::zero(2, 3), kCfg), NotSquare);
    }
}

TEST_CASE("core_ep: examples") {
    SUBCASE("invertible -> inverse") {
        ComplexMatrix a = ComplexMatrix::diagonal({2.0, 4.0});
        for (CoreEpRoute route :
             {CoreEpRoute::direct_formula, CoreEpRoute::via_drazin, CoreEpRoute::via_geninv_wrt})
            check_close(core_ep(a, kCfg, route), ComplexMatrix::diagonal({0.5, 0.25}), 1e-12);
    }
    SUBCASE("hand example [[1,1],[0,0]]") {
        // k = 1; (A^*)A^2 = [[1,1],[1,1]], pinv = J/4, A J/4 A^* = [[1,0],[0,0]].
        ComplexMatrix a{{1, 1}, {0, 0}};
        ComplexMatrix want{{1, 0}, {0, 0}};
        for (CoreEpRoute route :
             {CoreEpRoute::direct_formula, CoreEpRoute::via_drazin, CoreEpRoute::via_geninv_wrt})
            check_close(core_ep(a, kCfg, route), want, 1e-12);
    }
    SUBCASE("nilpotent -> 0") {
        ComplexMatrix a{{0, 1}, {0, 0}};
        for (CoreEpRoute route :
             {CoreEpRoute::direct_formula, CoreEpRoute::via_drazin, CoreEpRoute::via_geninv_wrt})
            CHECK(frobenius_norm(core_ep(a, kCfg, route)) <= 1e-12);
    }
}

TEST_CASE("core_ep: three routes agree on planted-index instances") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const std::size_t n = 2 + seed % 7;
        const std::size_t k = seed % std::min<std::size_t>(n + 1, 4);
        ComplexMatrix a = random_with_index(n, k, 600 + seed);
        ComplexMatrix x0 = core_ep(a, kCfg, CoreEpRoute::direct_formula);
        const double scale = std::max(1.0, frobenius_norm(x0));
        CHECK(dist(x0, core_ep(a, kCfg, CoreEpRoute::via_drazin)) <= 1e-8 * scale);
        CHECK(dist(x0, core_ep(a, kCfg, CoreEpRoute::via_geninv_wrt)) <= 1e-8 * scale);
    }
}

TEST_CASE("bt") {
    SUBCASE("invertible -> inverse") {
        check_close(bt(ComplexMatrix::diagonal({2.0, 4.0}), kCfg),
                    ComplexMatrix::diagonal({0.5, 0.25}), 1e-12);
    }
    SUBCASE("hand example: A P_A = [[1,0],[0,0]]") {
        ComplexMatrix a{{1, 1}, {0, 0}};
        check_close(bt(a, kCfg), ComplexMatrix{{1, 0}, {0, 0}}, 1e-12);
    }
    SUBCASE("zero -> zero") {
        CHECK(frobenius_norm(bt(ComplexMatrix::zero(3, 3), kCfg)) == 0.0);
    }
    SUBCASE("bt(A) = geninv_wrt(A, A)") {
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            const std::size_t n = 2 + seed % 5;
            ComplexMatrix a = random_with_index(n, seed % std::min<std::size_t>(n + 1, 3),
                                                700 + seed);
            check_close(bt(a, kCfg), geninv_wrt(a, a, kCfg), 1e-9);
        }
    }
}

TEST_CASE("w_bt") {
    SUBCASE("W = I reduces to bt") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const std::size_t n = 2 + seed % 4;
            ComplexMatrix a = random_matrix_with_rank(n, n, 1 + seed % n, 800 + seed);
            check_close(w_bt(a, ComplexMatrix::identity(n), kCfg), bt(a, kCfg), 1e-9);
        }
    }
    SUBCASE("hand example with W = I") {
        ComplexMatrix a{{1, 1}, {0, 0}};
        check_close(w_bt(a, ComplexMatrix::identity(2), kCfg), ComplexMatrix{{1, 0}, {0, 0}},
                    1e-12);
    }
    SUBCASE("square cross-check: w_bt(A, W) = geninv_wrt(WAW, AW)") {
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            const std::size_t n = 3;
            ComplexMatrix a = random_matrix_with_rank(n, n, 1 + seed % n, 900 + seed);
            ComplexMatrix w = random_matrix_with_rank(n, n, 1 + (seed / 2) % n, 950 + seed);
            ComplexMatrix lhs = w_bt(a, w, kCfg);
            ComplexMatrix rhs = geninv_wrt(w * a * w, a * w, kCfg);
            CHECK(dist(lhs, rhs) <= 1e-9 * std::max(1.0, frobenius_norm(rhs)));
        }
    }
    SUBCASE("rectangular shapes accepted") {
        ComplexMatrix a = random_matrix_with_rank(3, 4, 2, 33);
        ComplexMatrix w = random_matrix_with_rank(4, 3, 2, 34);
        ComplexMatrix x = w_bt(a, w, kCfg);
        CHECK(x.rows() == 3);
        CHECK(x.cols() == 4);
        CHECK_THROWS_AS(w_bt(a, adjoint(w), kCfg), DimensionMismatch);
    }
}

TEST_CASE("w_core_ep") {
    SUBCASE("W = I reduces to core_ep") {
        for (std::uint64_t seed = 1; seed <= 8; ++seed) {
            const std::size_t n = 2 + seed % 4;
            ComplexMatrix a = random_with_index(n, seed % std::min<std::size_t>(n + 1, 3),
                                                1000 + seed);
            check_close(w_core_ep(a, ComplexMatrix::identity(n), kCfg), core_ep(a, kCfg), 1e-9);
        }
    }
    SUBCASE("hand example with W = I") {
        ComplexMatrix a{{1, 1}, {0, 0}};
        check_close(w_core_ep(a, ComplexMatrix::identity(2), kCfg), ComplexMatrix{{1, 0}, {0, 0}},
                    1e-12);
    }
    SUBCASE("three routes agree on planted-index products") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const std::size_t n = 4;
            // Plant Ind(AW) = 2 by choosing A with index 2 and W = I-like
            // random full-rank weight, plus fully random pairs.
            ComplexMatrix a = (seed % 2) ? random_with_index(n, 2, 1100 + seed)
                                         : random_matrix_with_rank(n, n, 2 + seed % 3, 1100 + seed);
            ComplexMatrix w = random_matrix_with_rank(n, n, 2 + (seed / 2) % 3, 1150 + seed);
            ComplexMatrix x0 = w_core_ep(a, w, kCfg, WCoreEpRoute::direct_formula);
            const double scale = std::max(1.0, frobenius_norm(x0));
            CHECK(dist(x0, w_core_ep(a, w, kCfg, WCoreEpRoute::projector_formula)) <=
                  1e-8 * scale);
            CHECK(dist(x0, w_core_ep(a, w, kCfg, WCoreEpRoute::via_geninv_wrt)) <= 1e-8 * scale);
        }
    }
    SUBCASE("zero weight rejected") {
        CHECK_THROWS_AS(w_core_ep(ComplexMatrix::identity(2), ComplexMatrix::zero(2, 2), kCfg),
                        ZeroMatrix);
    }
    SUBCASE("rectangular direct formula") {
        ComplexMatrix a = random_matrix_with_rank(3, 4, 2, 55);
        ComplexMatrix w = random_matrix_with_rank(4, 3, 3, 56);
        ComplexMatrix x = w_core_ep(a, w, kCfg);
        CHECK(x.rows() == 3);
        CHECK(x.cols() == 4);
        CHECK_THROWS_AS(w_core_ep(a, w, kCfg, WCoreEpRoute::via_geninv_wrt), DimensionMismatch);
    }
}

TEST_CASE("weighted block forms") {
    SUBCASE("diagonal A with W = I embeds core_ep / bt") {
        ComplexMatrix a = ComplexMatrix::diagonal({2.0, 1.0, 0.0});
        ComplexMatrix w = ComplexMatrix::identity(3);
        check_close(w_core_ep_block_form(a, w, kCfg), core_ep(a, kCfg), 1e-9);
        check_close(w_bt_block_form(a, w, kCfg), bt(a, kCfg), 1e-9);
    }
    SUBCASE("seeded 4x4: block form matches the direct weighted formulas") {
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            ComplexMatrix a = random_matrix_with_rank(4, 4, 1 + seed % 4, 1200 + seed);
            ComplexMatrix w = random_matrix_with_rank(4, 4, 1 + (seed / 2) % 4, 1250 + seed);
            ComplexMatrix cep = w_core_ep(a, w, kCfg);
            CHECK(dist(w_core_ep_block_form(a, w, kCfg), cep) <=
                  1e-8 * std::max(1.0, frobenius_norm(cep)));
            ComplexMatrix wbt = w_bt(a, w, kCfg);
            CHECK(dist(w_bt_block_form(a, w, kCfg), wbt) <=
                  1e-8 * std::max(1.0, frobenius_norm(wbt)));
        }
    }
    SUBCASE("full-rank A (empty trailing blocks)") {
        ComplexMatrix a = random_matrix_with_rank(4, 4, 4, 1300);
        ComplexMatrix w = random_matrix_with_rank(4, 4, 4, 1301);
        check_close(w_core_ep_block_form(a, w, kCfg), w_core_ep(a, w, kCfg), 1e-8);
        check_close(w_bt_block_form(a, w, kCfg), w_bt(a, w, kCfg), 1e-8);
    }
}

TEST_CASE("remark reductions: geninv_wrt(A,A) = bt(A), geninv_wrt(A,A^k) = core_ep(A)") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t n = 2 + seed % 5;
        const std::size_t k = seed % std::min<std::size_t>(n + 1, 3);
        ComplexMatrix a = random_with_index(n, k, 1400 + seed);
        check_close(geninv_wrt(a, a, kCfg), bt(a, kCfg), 1e-9);
        const std::size_t ka = matrix_index(a, kCfg).index;
        // Skip the pure-nilpotent case: A^k is the zero matrix there and the
        // reduction degenerates to 0 = 0 (covered by the nilpotent example).
        if (ka < n)
            check_close(geninv_wrt(a, matrix_power(a, ka), kCfg), core_ep(a, kCfg), 1e-9);
    }
}

TEST_CASE("theorem-v oracle: weighted inverses as geninv_wrt of (WAW, AW^k) pairs") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const std::size_t n = 2 + seed % 4;
        ComplexMatrix a = random_matrix_with_rank(n, n, 1 + seed % n, 1500 + seed);
        ComplexMatrix w = random_matrix_with_rank(n, n, 1 + (seed / 3) % n, 1550 + seed);
        ComplexMatrix aw = a * w;
        ComplexMatrix waw = w * a * w;
        check_close(w_bt(a, w, kCfg), geninv_wrt(waw, aw, kCfg), 1e-8);
        const std::size_t k =
            std::max(matrix_index(aw, kCfg).index, matrix_index(w * a, kCfg).index);
        ComplexMatrix awk = matrix_power(aw, k);
        if (rank(awk, kCfg) > 0)
            check_close(w_core_ep(a, w, kCfg), geninv_wrt(waw, awk, kCfg), 1e-8);
    }
}
