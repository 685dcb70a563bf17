#include <doctest.h>

#include "geninv/decomp.hpp"
#include "geninv/genrand.hpp"
#include "test_support.hpp"

using namespace geninv;
using geninv::test::check_close;
using geninv::test::kCfg;

TEST_CASE("random_unitary") {
    SUBCASE("1x1 is unit modulus") {
        ComplexMatrix u = random_unitary(1, 3);
        CHECK(std::abs(u(0, 0)) == doctest::Approx(1.0));
    }
    SUBCASE("determinism") {
        ComplexMatrix a = random_unitary(5, 123);
        ComplexMatrix b = random_unitary(5, 123);
        CHECK(a.entries() == b.entries());
        ComplexMatrix c = random_unitary(5, 124);
        CHECK(a.entries() != c.entries());
    }
    SUBCASE("unitarity residual") {
        for (std::uint64_t seed : {7ull, 8ull, 9ull}) {
            ComplexMatrix u = random_unitary(4, seed);
            CHECK(frobenius_norm(adjoint(u) * u - ComplexMatrix::identity(4)) <= 1e-12 * 4);
        }
    }
}

TEST_CASE("random_matrix_with_rank") {
    CHECK(frobenius_norm(random_matrix_with_rank(3, 4, 0, 5)) == 0.0);
    CHECK(rank(random_matrix_with_rank(3, 3, 3, 6), kCfg) == 3);
    CHECK(rank(random_matrix_with_rank(4, 4, 2, 3), kCfg) == 2);
    CHECK_THROWS_AS(random_matrix_with_rank(3, 4, 4, 5), RankOutOfRange);

    SUBCASE("singular values land in [0.5, 2]") {
        SvdResult f = svd(random_matrix_with_rank(5, 5, 3, 17), kCfg);
        for (std::size_t i = 0; i < 3; ++i) {
            CHECK(f.singular_values[i] >= 0.5 - 1e-12);
            CHECK(f.singular_values[i] <= 2.0 + 1e-12);
        }
        CHECK(f.singular_values[3] <= 1e-14);
    }

    SUBCASE("determinism") {
        CHECK(random_matrix_with_rank(4, 4, 2, 3).entries() ==
              random_matrix_with_rank(4, 4, 2, 3).entries());
    }
}

TEST_CASE("random_with_index") {
    CHECK(matrix_index(random_with_index(4, 0, 9), kCfg).index == 0);
    CHECK(matrix_index(random_with_index(5, 5, 10), kCfg).index == 5); // pure shift
    CHECK(matrix_index(random_with_index(5, 2, 11), kCfg).index == 2);
    CHECK_THROWS_AS(random_with_index(3, 4, 5), IndexOutOfRange);

    SUBCASE("planted index holds across seeds") {
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            const std::size_t n = 2 + seed % 7;
            const std::size_t k = seed % (n + 1);
            CHECK(matrix_index(random_with_index(n, k, 1000 + seed), kCfg).index == k);
        }
    }
}

TEST_CASE("random_pair_with_core_ep_structure") {
    CHECK_THROWS_AS(random_pair_with_core_ep_structure(4, 4, 0, 1, 5), ParameterMismatch);
    CHECK_THROWS_AS(random_pair_with_core_ep_structure(4, 4, 2, 0, 5), ParameterMismatch);
    // t = n leaves no room for the nilpotent blocks
    CHECK_THROWS_AS(random_pair_with_core_ep_structure(4, 4, 4, 1, 5), ParameterMismatch);
    CHECK_THROWS_AS(random_pair_with_core_ep_structure(4, 4, 2, 3, 5), ParameterMismatch);

    SUBCASE("round-trip through the decomposition") {
        auto [a, b] = random_pair_with_core_ep_structure(4, 4, 2, 2, 5);
        CoreEpPairDecomposition d = core_ep_pair_decomposition(a, b, kCfg);
        CHECK(d.t == 2);
        CHECK(d.k == 2);
    }

    SUBCASE("planted (t, k) recovered across shapes and seeds") {
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            const std::size_t m = 3 + seed % 4;
            const std::size_t n = 3 + (seed / 2) % 4;
            const std::size_t t = 1 + seed % 2;
            const std::size_t kmax = std::min(m - t, n - t);
            if (kmax < 1)
                continue;
            const std::size_t k = 1 + seed % kmax;
            auto [a, b] = random_pair_with_core_ep_structure(m, n, t, k, 2000 + seed);
            CHECK(matrix_index(a * b, kCfg).index == k);
            CHECK(matrix_index(b * a, kCfg).index == k);
            CHECK(rank(matrix_power(a * b, k), kCfg) == t);
        }
    }

    SUBCASE("determinism") {
        auto [a1, b1] = random_pair_with_core_ep_structure(5, 5, 2, 2, 99);
        auto [a2, b2] = random_pair_with_core_ep_structure(5, 5, 2, 2, 99);
        CHECK(a1.entries() == a2.entries());
        CHECK(b1.entries() == b2.entries());
    }
}
