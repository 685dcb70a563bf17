#include "geninv/matcore.hpp"

#include "detail.hpp"

namespace geninv {

using detail::CMat;
using detail::Index;

void ToleranceConfig::validate() const {
    if (!(rank_tol_factor > 0.0) || !(residual_tol > 0.0) || !(zero_eig_tol_factor > 0.0))
        throw Error("ToleranceConfig: all factors must be strictly positive");
}

SvdResult svd(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(m, "svd");
    detail::FullSvd f = detail::svd_full(detail::to_cmat(m));
    std::vector<double> sigma(f.sigma.data(), f.sigma.data() + f.sigma.size());
    return {detail::unmap(f.u), std::move(sigma), detail::unmap(f.v)};
}

RankDecision rank_decision(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(m, "rank");
    Eigen::JacobiSVD<CMat> svd(detail::to_cmat(m));
    const auto& s = svd.singularValues();
    const double sigma_max = s.size() ? s(0) : 0.0;
    const double tau = detail::cutoff(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()),
                                      sigma_max, cfg);
    RankDecision d;
    d.cutoff = tau;
    for (Index i = 0; i < s.size(); ++i) {
        if (s(i) > tau)
            ++d.rank;
        if (tau > 0.0 && std::abs(s(i) - tau) <= 0.1 * tau)
            d.near_cutoff = true;
    }
    return d;
}

std::size_t rank(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    return rank_decision(m, cfg).rank;
}

ComplexMatrix pinv(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(m, "pinv");
    return detail::unmap(detail::pinv_h(detail::to_cmat(m), cfg));
}

std::pair<ComplexMatrix, ComplexMatrix> projectors(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(a, "projectors");
    CMat m = detail::to_cmat(a);
    CMat mp = detail::pinv_h(m, cfg);
    return {detail::unmap(CMat(m * mp)), detail::unmap(CMat(mp * m))};
}

IndexResult matrix_index(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "matrix_index");
    detail::require_finite(a, "matrix_index");
    // Fresh rank evaluation per power, with the cutoff floored at
    // sigma_max(A)^j: a power that vanishes in exact arithmetic must count
    // as rank 0, or the sequence never stabilizes.
    auto [k, ranks] = detail::index_h(detail::to_cmat(a), cfg, /*scale_by_powers=*/true);
    IndexResult res;
    res.index = k;
    res.rank_sequence.assign(ranks.begin(), ranks.end());
    return res;
}

SubspaceBasis range_basis(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(m, "range_basis");
    CMat u1 = detail::range_cols_h(detail::to_cmat(m), cfg);
    SubspaceBasis b;
    b.ambient_dim = m.rows();
    b.basis = detail::optional_block(u1);
    return b;
}

SubspaceBasis null_basis(const ComplexMatrix& m, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_finite(m, "null_basis");
    detail::FullSvd f = detail::svd_full(detail::to_cmat(m));
    const double sigma_max = f.sigma.size() ? f.sigma(0) : 0.0;
    const Index r = detail::rank_from_sigma(
        f.sigma, detail::cutoff(static_cast<Index>(m.rows()), static_cast<Index>(m.cols()), sigma_max, cfg));
    const Index n = static_cast<Index>(m.cols());
    SubspaceBasis b;
    b.ambient_dim = m.cols();
    b.basis = detail::optional_block(f.v.rightCols(n - r));
    return b;
}

bool subspace_contained(const SubspaceBasis& x, const SubspaceBasis& y, const ToleranceConfig& cfg) {
    cfg.validate();
    if (x.ambient_dim != y.ambient_dim)
        throw DimensionMismatch("subspace_contained: ambient dimensions differ");
    if (x.dim() == 0)
        return true;
    CMat xb = detail::to_cmat(*x.basis);
    double residual;
    if (y.dim() == 0) {
        residual = xb.norm();
    } else {
        CMat yb = detail::to_cmat(*y.basis);
        residual = (xb - yb * (yb.adjoint() * xb)).norm();
    }
    return residual <= cfg.residual_tol * std::max(1.0, xb.norm());
}

bool subspace_equal(const SubspaceBasis& x, const SubspaceBasis& y, const ToleranceConfig& cfg) {
    return subspace_contained(x, y, cfg) && subspace_contained(y, x, cfg);
}

} // namespace geninv
