#include "geninv/inverses.hpp"

#include <cmath>

#include "detail.hpp"
#include "geninv/decomp.hpp"

namespace geninv {

using detail::CMat;
using detail::Index;

namespace {

// Route internals hint every derived pseudoinverse/rank with the product of
// the source operands' spectral norms (see detail.hpp).

ComplexMatrix geninv_wrt_definition(const CMat& a, const CMat& b, const ToleranceConfig& cfg) {
    const double sa = detail::spectral_norm(a);
    CMat abbp = a * b * detail::pinv_h(b, cfg);
    return detail::unmap(detail::pinv_h(abbp, cfg, sa));
}

ComplexMatrix geninv_wrt_product(const CMat& a, const CMat& b, const ToleranceConfig& cfg) {
    const double hint = detail::spectral_norm(a) * detail::spectral_norm(b);
    return detail::unmap(CMat(b * detail::pinv_h(a * b, cfg, hint)));
}

ComplexMatrix geninv_wrt_pair_svd(const ComplexMatrix& a, const ComplexMatrix& b,
                                  const ToleranceConfig& cfg) {
    PairSvdDecomposition d = pair_svd_decomposition(a, b, cfg);
    const Index n = static_cast<Index>(a.rows());
    const Index r = static_cast<Index>(d.r);
    const Index s = static_cast<Index>(d.s);
    CMat core = detail::to_cmat(d.a1);
    for (Index i = 0; i < r; ++i)
        core.row(i) *= d.sigma_a[static_cast<std::size_t>(i)];
    CMat inner = CMat::Zero(n, n);
    inner.topLeftCorner(s, r) = detail::pinv_h(core, cfg, d.sigma_a[0]);
    return detail::unmap(CMat(detail::map(d.v) * inner * detail::map(d.u).adjoint()));
}

ComplexMatrix geninv_wrt_core_ep_pair(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ToleranceConfig& cfg) {
    CoreEpPairDecomposition d = core_ep_pair_decomposition(a, b, cfg);
    const Index n = static_cast<Index>(a.rows());
    const Index t = static_cast<Index>(d.t);
    const Index q = n - t;
    const double sb = detail::spectral_norm(detail::to_cmat(b));

    // ABB^+ = U [A1, A12 P_B2; 0, A2 P_B2] V^* with P_B2 = B2 B2^+.
    CMat b2 = detail::block_or_empty(d.b2, q, n - t);
    CMat pb2 = detail::projector_h(b2, cfg, sb);
    CMat a12 = detail::block_or_empty(d.a12, t, q);
    CMat a2 = detail::block_or_empty(d.a2, n - t, q);

    BlockTriangularForm form{
        d.u,
        d.v,
        d.a1,
        detail::optional_block(CMat(a12 * pb2)),
        detail::optional_block(CMat(a2 * pb2)),
    };
    return block_pinv(form, cfg);
}

std::size_t index_of(const CMat& m, const ToleranceConfig& cfg) {
    return detail::index_h(m, cfg, /*scale_by_powers=*/true).first;
}

} // namespace

ComplexMatrix geninv_wrt(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg,
                         GeninvWrtRoute route) {
    cfg.validate();
    detail::require_square(a, "geninv_wrt");
    detail::require_square(b, "geninv_wrt");
    if (!same_shape(a, b))
        throw DimensionMismatch("geninv_wrt: A and B must have the same size");
    detail::require_finite(a, "geninv_wrt");
    detail::require_finite(b, "geninv_wrt");

    switch (route) {
    case GeninvWrtRoute::definition:
        return geninv_wrt_definition(detail::to_cmat(a), detail::to_cmat(b), cfg);
    case GeninvWrtRoute::pair_svd:
        return geninv_wrt_pair_svd(a, b, cfg);
    case GeninvWrtRoute::core_ep_pair:
        return geninv_wrt_core_ep_pair(a, b, cfg);
    case GeninvWrtRoute::product_form:
        return geninv_wrt_product(detail::to_cmat(a), detail::to_cmat(b), cfg);
    }
    throw Error("geninv_wrt: unknown route");
}

ComplexMatrix drazin(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "drazin");
    detail::require_finite(a, "drazin");
    CMat m = detail::to_cmat(a);
    const std::size_t k = index_of(m, cfg);
    CMat mk = detail::power(m, k);
    const double sa = detail::spectral_norm(m);
    CMat inv = detail::pinv_h(detail::power(m, 2 * k + 1), cfg, std::pow(sa, 2.0 * k + 1.0));
    return detail::unmap(CMat(mk * inv * mk));
}

ComplexMatrix core_ep(const ComplexMatrix& a, const ToleranceConfig& cfg, CoreEpRoute route) {
    cfg.validate();
    detail::require_square(a, "core_ep");
    detail::require_finite(a, "core_ep");
    CMat m = detail::to_cmat(a);
    const std::size_t k = index_of(m, cfg);
    const double sa = detail::spectral_norm(m);

    switch (route) {
    case CoreEpRoute::direct_formula: {
        CMat mk = detail::power(m, k);
        CMat mhk = detail::power(CMat(m.adjoint()), k);
        CMat inner = detail::pinv_h(CMat(mhk * detail::power(m, k + 1)), cfg,
                                    std::pow(sa, 2.0 * k + 1.0));
        return detail::unmap(CMat(mk * inner * mhk));
    }
    case CoreEpRoute::via_drazin: {
        CMat ad = detail::map(drazin(a, cfg));
        return detail::unmap(CMat(ad * detail::pinv_h(CMat(m * ad), cfg, 1.0)));
    }
    case CoreEpRoute::via_geninv_wrt: {
        CMat akm = detail::power(m, k);
        // A power that vanishes up to roundoff must be handed over as an
        // exact zero, or geninv_wrt would invert the junk.
        if (detail::rank_h(akm, cfg, std::pow(sa, static_cast<double>(k))) == 0)
            akm.setZero();
        return geninv_wrt(a, detail::unmap(akm), cfg, GeninvWrtRoute::definition);
    }
    }
    throw Error("core_ep: unknown route");
}

ComplexMatrix bt(const ComplexMatrix& a, const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "bt");
    detail::require_finite(a, "bt");
    CMat m = detail::to_cmat(a);
    const double sa = detail::spectral_norm(m);
    CMat pa = detail::projector_h(m, cfg);
    return detail::unmap(detail::pinv_h(CMat(m * pa), cfg, sa));
}

namespace {

void require_weighted_shapes(const ComplexMatrix& a, const ComplexMatrix& w, const char* what) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw DimensionMismatch(std::string(what) + ": need A m x n and W n x m");
}

} // namespace

ComplexMatrix w_bt(const ComplexMatrix& a, const ComplexMatrix& w, const ToleranceConfig& cfg) {
    cfg.validate();
    require_weighted_shapes(a, w, "w_bt");
    detail::require_finite(a, "w_bt");
    detail::require_finite(w, "w_bt");
    CMat am = detail::to_cmat(a);
    CMat wm = detail::to_cmat(w);
    const double sa = detail::spectral_norm(am);
    const double sw = detail::spectral_norm(wm);
    CMat aw = am * wm;
    CMat inner = wm * am * wm * am * wm * detail::pinv_h(aw, cfg, sa * sw);
    return detail::unmap(detail::pinv_h(inner, cfg, sw * sw * sa));
}

ComplexMatrix w_core_ep(const ComplexMatrix& a, const ComplexMatrix& w, const ToleranceConfig& cfg,
                        WCoreEpRoute route) {
    cfg.validate();
    require_weighted_shapes(a, w, "w_core_ep");
    detail::require_finite(a, "w_core_ep");
    detail::require_finite(w, "w_core_ep");
    if (frobenius_norm(w) == 0.0)
        throw ZeroMatrix("w_core_ep: W must be nonzero");

    CMat am = detail::to_cmat(a);
    CMat wm = detail::to_cmat(w);
    CMat aw = am * wm;
    const double sa = detail::spectral_norm(am);
    const double sw = detail::spectral_norm(wm);
    const double saw = detail::spectral_norm(aw);

    switch (route) {
    case WCoreEpRoute::direct_formula: {
        const std::size_t k = std::max(index_of(aw, cfg), index_of(CMat(wm * am), cfg));
        CMat awk = detail::power(aw, k);
        CMat proj = awk * detail::pinv_h(awk, cfg, std::pow(saw, static_cast<double>(k)));
        return detail::unmap(detail::pinv_h(CMat(wm * am * wm * proj), cfg, sw * sw * sa));
    }
    case WCoreEpRoute::projector_formula: {
        // P_{(AW)^k} is the same projector for k = Ind(AW) and for the max
        // convention, so this route only differs in how k is chosen.
        const std::size_t k = index_of(aw, cfg);
        CMat awk = detail::power(aw, k);
        CMat proj = awk * detail::pinv_h(awk, cfg, std::pow(saw, static_cast<double>(k)));
        return detail::unmap(detail::pinv_h(CMat(wm * am * wm * proj), cfg, sw * sw * sa));
    }
    case WCoreEpRoute::via_geninv_wrt: {
        if (a.rows() != a.cols())
            throw DimensionMismatch("w_core_ep: via_geninv_wrt requires square inputs");
        const std::size_t k = std::max(index_of(aw, cfg), index_of(CMat(wm * am), cfg));
        ComplexMatrix waw = detail::unmap(CMat(wm * am * wm));
        CMat awkm = detail::power(aw, k);
        if (detail::rank_h(awkm, cfg, std::pow(saw, static_cast<double>(k))) == 0)
            awkm.setZero();
        return geninv_wrt(waw, detail::unmap(awkm), cfg, GeninvWrtRoute::definition);
    }
    }
    throw Error("w_core_ep: unknown route");
}

namespace {

/// Shared skeleton of the two block-form reductions: decompose (A, W) by the
/// pair SVD, apply `inner_inverse` to the leading blocks Sigma_A A1 (r x s)
/// and Sigma_W W1 (s x r), and embed the result back through the frames as
/// U [X', 0; 0, 0] V^*.
template <typename InnerInverse>
ComplexMatrix weighted_block_form(const ComplexMatrix& a, const ComplexMatrix& w,
                                  const ToleranceConfig& cfg, InnerInverse inner_inverse) {
    detail::require_square(a, "weighted block form");
    if (!same_shape(a, w))
        throw DimensionMismatch("weighted block form: A and W must have the same size");
    PairSvdDecomposition d = pair_svd_decomposition(a, w, cfg);
    const Index n = static_cast<Index>(a.rows());
    const Index r = static_cast<Index>(d.r);
    const Index s = static_cast<Index>(d.s);

    CMat ablock = detail::to_cmat(d.a1); // r x s
    for (Index i = 0; i < r; ++i)
        ablock.row(i) *= d.sigma_a[static_cast<std::size_t>(i)];
    CMat wblock = detail::to_cmat(d.b1); // s x r
    for (Index i = 0; i < s; ++i)
        wblock.row(i) *= d.sigma_b[static_cast<std::size_t>(i)];

    ComplexMatrix x = inner_inverse(detail::unmap(ablock), detail::unmap(wblock));
    CMat inner = CMat::Zero(n, n);
    inner.topLeftCorner(r, s) = detail::map(x);
    return detail::unmap(CMat(detail::map(d.u) * inner * detail::map(d.v).adjoint()));
}

} // namespace

ComplexMatrix w_core_ep_block_form(const ComplexMatrix& a, const ComplexMatrix& w,
                                   const ToleranceConfig& cfg) {
    cfg.validate();
    return weighted_block_form(a, w, cfg, [&](const ComplexMatrix& ab, const ComplexMatrix& wb) {
        return w_core_ep(ab, wb, cfg, WCoreEpRoute::direct_formula);
    });
}

ComplexMatrix w_bt_block_form(const ComplexMatrix& a, const ComplexMatrix& w,
                              const ToleranceConfig& cfg) {
    cfg.validate();
    return weighted_block_form(a, w, cfg, [&](const ComplexMatrix& ab, const ComplexMatrix& wb) {
        return w_bt(ab, wb, cfg);
    });
}

} // namespace geninv
