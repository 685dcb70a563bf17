#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "geninv/matcore.hpp"
#include "geninv/matrix.hpp"

namespace geninv {

/// Simultaneous factorization of a square pair (A, B) of the same size:
///
///   A = U [Sigma_A A1, Sigma_A A2; 0, 0] V^*
///   B = V [Sigma_B B1, Sigma_B B2; 0, 0] U^*
///
/// with U, V unitary, Sigma_A (r x r) and Sigma_B (s x s) positive diagonal,
/// r = rank(A), s = rank(B), and row-orthonormal block rows
/// A1 A1^* + A2 A2^* = I_r, B1 B1^* + B2 B2^* = I_s. Trailing blocks are
/// absent when s = n (A2) or r = n (B2).
struct PairSvdDecomposition {
    ComplexMatrix u;
    ComplexMatrix v;
    std::vector<double> sigma_a; // r positive values, nonincreasing
    std::vector<double> sigma_b; // s positive values, nonincreasing
    ComplexMatrix a1;            // r x s
    std::optional<ComplexMatrix> a2; // r x (n - s)
    ComplexMatrix b1;            // s x r
    std::optional<ComplexMatrix> b2; // s x (n - r)
    std::size_t r = 0;
    std::size_t s = 0;
};

/// Factorization of a pair A (m x n), B (n x m):
///
///   A = U [A1, A12; 0, A2] V^*,   B = V [B1, B12; 0, B2] U^*
///
/// with A1, B1 nonsingular t x t, t = rank((AB)^k),
/// k = max(Ind(AB), Ind(BA)), and A2 B2, B2 A2 nilpotent of indices
/// Ind(AB), Ind(BA). Off-diagonal/trailing blocks are absent when their
/// dimensions vanish (t = m and/or t = n).
struct CoreEpPairDecomposition {
    ComplexMatrix u; // m x m
    ComplexMatrix v; // n x n
    ComplexMatrix a1; // t x t
    std::optional<ComplexMatrix> a12; // t x (n - t)
    std::optional<ComplexMatrix> a2;  // (m - t) x (n - t)
    ComplexMatrix b1; // t x t
    std::optional<ComplexMatrix> b12; // t x (m - t)
    std::optional<ComplexMatrix> b2;  // (n - t) x (m - t)
    std::size_t t = 0;
    std::size_t k = 0;
};

/// C = U [C1, C2; 0, C3] V^* with C1 nonsingular t x t and U (m x m),
/// V (n x n) unitary. C2 is t x (n-t), C3 is (m-t) x (n-t); either may be
/// absent when the trailing dimensions vanish.
struct BlockTriangularForm {
    ComplexMatrix u;
    ComplexMatrix v;
    ComplexMatrix c1;
    std::optional<ComplexMatrix> c2;
    std::optional<ComplexMatrix> c3;
};

/// Construction: U and V are the left singular frames of A and B; the block
/// rows come from the unitary cross products V_A^* U_B and V_B^* U_A, so
/// row-orthonormality of [A1 A2] and [B1 B2] is inherited rather than
/// enforced. Requires rank(A) >= 1 and rank(B) >= 1.
PairSvdDecomposition pair_svd_decomposition(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ToleranceConfig& cfg);

/// Construction via the invariant subspaces R((AB)^k) and R((BA)^k): their
/// orthonormal bases are completed to the unitary U, V, and the (2,1) blocks
/// U2^* A V1, V2^* B U1 are asserted (not forced) to vanish within
/// residual_tol. Throws NilpotentProduct when rank((AB)^k) = 0.
CoreEpPairDecomposition core_ep_pair_decomposition(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const ToleranceConfig& cfg);

/// Pseudoinverse of the reconstructed C through the block formula
///
///   C^+ = V [C1^* Om,              -C1^* Om C2 C3^+                    ;
///            (I - Q_C3) C2^* Om,    C3^+ - (I - Q_C3) C2^* Om C2 C3^+ ] U^*
///
/// with Om = (C1 C1^* + C2 (I - Q_C3) C2^*)^{-1}. Throws
/// SingularLeadingBlock when C1 fails the nonsingularity tolerance.
ComplexMatrix block_pinv(const BlockTriangularForm& form, const ToleranceConfig& cfg);

/// The Hermitian positive definite inverse factor Om used by block_pinv.
ComplexMatrix block_omega(const BlockTriangularForm& form, const ToleranceConfig& cfg);

/// C C^+ = U [I_t, 0; 0, P_C3] U^*.
ComplexMatrix block_projector(const BlockTriangularForm& form, const ToleranceConfig& cfg);

ComplexMatrix reconstruct_a(const PairSvdDecomposition& d);
ComplexMatrix reconstruct_b(const PairSvdDecomposition& d);
ComplexMatrix reconstruct_a(const CoreEpPairDecomposition& d);
ComplexMatrix reconstruct_b(const CoreEpPairDecomposition& d);
ComplexMatrix reconstruct(const BlockTriangularForm& form);

} // namespace geninv
