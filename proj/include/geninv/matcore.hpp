#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "geninv/matrix.hpp"

namespace geninv {

/// Thresholds governing every floating-point decision in the library.
///
/// The effective rank cutoff for a matrix M is
///   tau(M) = rank_tol_factor * max(rows, cols) * eps * sigma_max(M),
/// so sigma_max = 0 forces tau = 0 and rank 0. Residual checks compare
/// against residual_tol * max(1, scale of the operands).
struct ToleranceConfig {
    double rank_tol_factor = 4.0;
    double residual_tol = 1e-9;
    double zero_eig_tol_factor = 4.0;

    /// Throws Error unless all three factors are strictly positive.
    void validate() const;
};

/// Full singular value decomposition M = U * diag(sigma) * V^*, with square
/// unitary U (m x m) and V (n x n); singular values nonincreasing.
struct SvdResult {
    ComplexMatrix u;
    std::vector<double> singular_values;
    ComplexMatrix v;
};

/// Orthonormal basis of a subspace of C^ambient_dim. The zero-dimensional
/// subspace is represented explicitly (no basis matrix) rather than as a
/// 0-column edge case.
struct SubspaceBasis {
    std::size_t ambient_dim = 0;
    std::optional<ComplexMatrix> basis; // n x d, orthonormal columns

    std::size_t dim() const { return basis ? basis->cols() : 0; }
};

/// Result of the matrix index computation: the smallest k >= 0 with
/// rank(A^(k+1)) == rank(A^k), plus the rank sequence rank(A^j) for
/// j = 0 .. k+1 (A^0 = I).
struct IndexResult {
    std::size_t index = 0;
    std::vector<std::size_t> rank_sequence;
};

/// Rank plus the cutoff it was decided against. near_cutoff flags any
/// singular value within 10% of tau; the rank decision itself always follows
/// the strict sigma > tau rule, the flag is diagnostic only.
struct RankDecision {
    std::size_t rank = 0;
    double cutoff = 0.0;
    bool near_cutoff = false;
};

SvdResult svd(const ComplexMatrix& m, const ToleranceConfig& cfg);

std::size_t rank(const ComplexMatrix& m, const ToleranceConfig& cfg);
RankDecision rank_decision(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// Moore-Penrose pseudoinverse; singular values below tau(M) are treated as
/// exactly zero.
ComplexMatrix pinv(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// (P_A, Q_A) = (A * pinv(A), pinv(A) * A): the orthogonal projectors onto
/// the range of A and of A^*.
std::pair<ComplexMatrix, ComplexMatrix> projectors(const ComplexMatrix& a, const ToleranceConfig& cfg);

IndexResult matrix_index(const ComplexMatrix& a, const ToleranceConfig& cfg);

/// Orthonormal basis of the column space (leading rank(M) left singular vectors).
SubspaceBasis range_basis(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// Orthonormal basis of the null space (trailing right singular vectors).
SubspaceBasis null_basis(const ComplexMatrix& m, const ToleranceConfig& cfg);

/// Projector-residual containment test:
/// true iff ||(I - Y Y^*) X||_F <= residual_tol * max(1, ||X||_F).
bool subspace_contained(const SubspaceBasis& x, const SubspaceBasis& y, const ToleranceConfig& cfg);

bool subspace_equal(const SubspaceBasis& x, const SubspaceBasis& y, const ToleranceConfig& cfg);

} // namespace geninv
