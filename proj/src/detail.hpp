#pragma once

// Internal numerical kernels shared by the library's translation units.
// Everything here works on Eigen row-major complex matrices, which (unlike
// the public carrier) may have zero rows or columns — block dismantling and
// reassembly rely on that.
//
// The *_h variants take a scale hint: the cutoff for rank decisions becomes
//   tau = rank_tol_factor * max(dims) * eps * max(sigma_max(M), hint).
// Pass the product of the source operands' spectral norms when M is a
// derived block or power; a matrix that is zero in exact arithmetic then
// comes out as rank 0 instead of having its roundoff inverted.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "geninv/errors.hpp"
#include "geninv/matcore.hpp"
#include "geninv/matrix.hpp"

namespace geninv::detail {

using CMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CMap = Eigen::Map<const CMat>;
using Eigen::Index;

inline CMap map(const ComplexMatrix& m) {
    return CMap(m.data(), static_cast<Index>(m.rows()), static_cast<Index>(m.cols()));
}

inline ComplexMatrix unmap(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0)
        throw Error("internal: attempted to materialize an empty block");
    std::vector<Complex> entries(m.data(), m.data() + m.size());
    return ComplexMatrix(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()),
                         std::move(entries));
}

inline CMat to_cmat(const ComplexMatrix& m) { return CMat(map(m)); }

/// Optional block <-> possibly-empty Eigen matrix.
inline CMat block_or_empty(const std::optional<ComplexMatrix>& m, Index rows, Index cols) {
    if (m)
        return to_cmat(*m);
    return CMat::Zero(rows, cols);
}

inline std::optional<ComplexMatrix> optional_block(const CMat& m) {
    if (m.rows() == 0 || m.cols() == 0)
        return std::nullopt;
    return unmap(m);
}

inline double spectral_norm(const CMat& m) {
    if (m.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<CMat> svd(m);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
}

struct FullSvd {
    CMat u;
    Eigen::VectorXd sigma;
    CMat v;
};

inline FullSvd svd_full(const CMat& m) {
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    if (svd.info() != Eigen::Success)
        throw ConvergenceFailure("svd did not converge");
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

inline double cutoff(Index rows, Index cols, double sigma_max, const ToleranceConfig& cfg,
                     double hint = 0.0) {
    const double eps = std::numeric_limits<double>::epsilon();
    return cfg.rank_tol_factor * static_cast<double>(std::max(rows, cols)) * eps *
           std::max(sigma_max, hint);
}

inline Index rank_from_sigma(const Eigen::VectorXd& sigma, double tau) {
    Index r = 0;
    while (r < sigma.size() && sigma(r) > tau)
        ++r;
    return r;
}

inline Index rank_h(const CMat& m, const ToleranceConfig& cfg, double hint = 0.0) {
    if (m.size() == 0)
        return 0;
    Eigen::JacobiSVD<CMat> svd(m);
    const auto& s = svd.singularValues();
    return rank_from_sigma(s, cutoff(m.rows(), m.cols(), s.size() ? s(0) : 0.0, cfg, hint));
}

inline CMat pinv_h(const CMat& m, const ToleranceConfig& cfg, double hint = 0.0) {
    if (m.rows() == 0 || m.cols() == 0)
        return CMat::Zero(m.cols(), m.rows());
    Eigen::JacobiSVD<CMat> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (svd.info() != Eigen::Success)
        throw ConvergenceFailure("svd did not converge");
    const auto& s = svd.singularValues();
    const double tau = cutoff(m.rows(), m.cols(), s.size() ? s(0) : 0.0, cfg, hint);
    Eigen::VectorXd inv = Eigen::VectorXd::Zero(s.size());
    for (Index i = 0; i < s.size(); ++i)
        if (s(i) > tau)
            inv(i) = 1.0 / s(i);
    return svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
}

/// M * pinv(M): orthogonal projector onto the range.
inline CMat projector_h(const CMat& m, const ToleranceConfig& cfg, double hint = 0.0) {
    return m * pinv_h(m, cfg, hint);
}

/// Leading rank columns of the left singular frame (orthonormal range basis).
inline CMat range_cols_h(const CMat& m, const ToleranceConfig& cfg, double hint = 0.0) {
    FullSvd f = svd_full(m);
    const Index r =
        rank_from_sigma(f.sigma, cutoff(m.rows(), m.cols(), f.sigma.size() ? f.sigma(0) : 0.0, cfg, hint));
    return f.u.leftCols(r);
}

inline CMat power(const CMat& m, std::size_t k) {
    CMat p = CMat::Identity(m.rows(), m.cols());
    for (std::size_t i = 0; i < k; ++i)
        p = p * m;
    return p;
}

/// Matrix index of a square product with per-power cutoffs floored at
/// sigma_max(m)^j; returns (k, rank sequence for j = 0..k+1).
inline std::pair<std::size_t, std::vector<Index>> index_h(const CMat& m, const ToleranceConfig& cfg,
                                                          bool scale_by_powers) {
    const Index n = m.rows();
    std::vector<Index> ranks{n};
    const double base = spectral_norm(m);
    double hint = 1.0;
    CMat p = CMat::Identity(n, n);
    for (std::size_t j = 1; j <= static_cast<std::size_t>(n) + 1; ++j) {
        p = p * m;
        hint *= base;
        ranks.push_back(rank_h(p, cfg, scale_by_powers ? hint : 0.0));
        if (ranks[j] == ranks[j - 1])
            return {j - 1, std::move(ranks)};
    }
    // Ranks strictly decrease until they stabilize, so this is unreachable
    // for exact input; guard against a pathological tolerance configuration.
    throw ConvergenceFailure("matrix index did not stabilize within n+1 powers");
}

/// Extend t orthonormal columns to a full unitary. The complement comes from
/// the dominant singular vectors of I - U1 U1^*, so the given columns are
/// kept verbatim.
inline CMat complete_unitary(const CMat& u1, Index n) {
    const Index t = u1.cols();
    if (t == 0)
        return CMat::Identity(n, n);
    if (t == n)
        return u1;
    CMat p = CMat::Identity(n, n) - u1 * u1.adjoint();
    FullSvd f = svd_full(p);
    CMat full(n, n);
    full.leftCols(t) = u1;
    full.rightCols(n - t) = f.u.leftCols(n - t);
    return full;
}

inline double fro(const CMat& m) { return m.norm(); }

inline void require_finite(const ComplexMatrix& m, const char* what) {
    if (!m.all_finite())
        throw NonFinite(std::string(what) + ": input contains NaN or Inf");
}

inline void require_square(const ComplexMatrix& m, const char* what) {
    if (!m.is_square())
        throw NotSquare(std::string(what) + ": matrix must be square");
}

} // namespace geninv::detail
