#pragma once

#include <cstdint>
#include <utility>

#include "geninv/matrix.hpp"

namespace geninv {

// Seeded, reproducible instance generators. Output is a pure function of
// (seed, parameters); Gaussian sampling and orthonormalization are done with
// a fixed in-library scheme so results do not depend on the standard
// library's distribution implementations.

/// Random n x n unitary (Haar-like; exact distribution is not guaranteed,
/// unitarity is). Phase convention: the first entry of noticeable modulus in
/// each column is made real positive.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

/// Random m x n matrix with rank exactly r under the default tau policy;
/// nonzero singular values drawn uniformly from [0.5, 2.0].
ComplexMatrix random_matrix_with_rank(std::size_t m, std::size_t n, std::size_t r,
                                      std::uint64_t seed);

/// Random n x n matrix with matrix index exactly k:
/// Q [T, S; 0, N] Q^* with T invertible (n-k) x (n-k), N the k x k upper
/// shift, S random coupling. k = 0 yields an invertible matrix, k = n the
/// pure shift.
ComplexMatrix random_with_index(std::size_t n, std::size_t k, std::uint64_t seed);

/// Pair (A, B), A m x n and B n x m, with planted core-EP pair structure:
/// invertible t x t leading blocks and trailing blocks whose products are
/// nilpotent of index exactly k, so that max(Ind(AB), Ind(BA)) = k and
/// rank((AB)^k) = t. Requires t >= 1, k >= 1, m - t >= k, n - t >= k.
std::pair<ComplexMatrix, ComplexMatrix> random_pair_with_core_ep_structure(
    std::size_t m, std::size_t n, std::size_t t, std::size_t k, std::uint64_t seed);

} // namespace geninv
