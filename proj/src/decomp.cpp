#include "geninv/decomp.hpp"

#include <Eigen/Cholesky>

#include "detail.hpp"

namespace geninv {

using detail::CMat;
using detail::Index;

namespace {

CMat diag_cmat(const std::vector<double>& d) {
    CMat m = CMat::Zero(static_cast<Index>(d.size()), static_cast<Index>(d.size()));
    for (Index i = 0; i < m.rows(); ++i)
        m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

struct FormDims {
    Index t, m, n, p, q; // p = m - t rows below, q = n - t cols right
};

FormDims form_dims(const BlockTriangularForm& form) {
    FormDims d;
    d.t = static_cast<Index>(form.c1.rows());
    d.m = static_cast<Index>(form.u.rows());
    d.n = static_cast<Index>(form.v.rows());
    d.p = d.m - d.t;
    d.q = d.n - d.t;
    if (!form.c1.is_square())
        throw DimensionMismatch("block form: C1 must be square");
    if (!form.u.is_square() || !form.v.is_square())
        throw DimensionMismatch("block form: U and V must be square");
    if (d.p < 0 || d.q < 0)
        throw DimensionMismatch("block form: C1 larger than the frames");
    const Index c2r = form.c2 ? static_cast<Index>(form.c2->rows()) : d.t;
    const Index c2c = form.c2 ? static_cast<Index>(form.c2->cols()) : 0;
    const Index c3r = form.c3 ? static_cast<Index>(form.c3->rows()) : 0;
    const Index c3c = form.c3 ? static_cast<Index>(form.c3->cols()) : 0;
    if (form.c2 && (c2r != d.t || c2c != d.q))
        throw DimensionMismatch("block form: C2 has wrong shape");
    if (form.c3 && (c3r != d.p || c3c != d.q))
        throw DimensionMismatch("block form: C3 has wrong shape");
    if (!form.c2 && d.q != 0 && d.t != 0)
        throw DimensionMismatch("block form: C2 missing but n - t > 0");
    if (!form.c3 && d.q != 0 && d.p != 0)
        throw DimensionMismatch("block form: C3 missing but trailing corner is nonempty");
    return d;
}

/// Shared setup for the Lemma-a2 style formulas: the scale of the whole form
/// governs the C3 pseudoinverse and the C1 nonsingularity decision, so a
/// trailing block that is zero up to roundoff is treated as zero instead of
/// being inverted.
struct BlockParts {
    FormDims d;
    CMat c1, c2, c3;
    CMat c3p;     // C3^+
    CMat kperp;   // I - Q_C3
    CMat omega;   // (C1 C1^* + C2 kperp C2^*)^{-1}
    double scale;
};

BlockParts prepare(const BlockTriangularForm& form, const ToleranceConfig& cfg) {
    cfg.validate();
    BlockParts b;
    b.d = form_dims(form);
    b.c1 = detail::to_cmat(form.c1);
    b.c2 = detail::block_or_empty(form.c2, b.d.t, b.d.q);
    b.c3 = detail::block_or_empty(form.c3, b.d.p, b.d.q);
    b.scale = std::max({detail::spectral_norm(b.c1), detail::spectral_norm(b.c2),
                        detail::spectral_norm(b.c3)});

    Eigen::JacobiSVD<CMat> c1svd(b.c1);
    const double sigma_min = c1svd.singularValues()(c1svd.singularValues().size() - 1);
    const double eps = std::numeric_limits<double>::epsilon();
    const double nonsing_tol =
        cfg.zero_eig_tol_factor * static_cast<double>(std::max(b.d.m, b.d.n)) * eps * b.scale;
    if (!(sigma_min > nonsing_tol))
        throw SingularLeadingBlock("block form: C1 fails the nonsingularity tolerance");

    b.c3p = detail::pinv_h(b.c3, cfg, b.scale);
    b.kperp = CMat::Identity(b.d.q, b.d.q) - b.c3p * b.c3;

    CMat gram = b.c1 * b.c1.adjoint() + b.c2 * b.kperp * b.c2.adjoint();
    Eigen::LLT<Eigen::MatrixXcd> llt{Eigen::MatrixXcd(gram)};
    if (llt.info() != Eigen::Success)
        throw SingularLeadingBlock("block form: Gram matrix is not positive definite");
    b.omega = llt.solve(Eigen::MatrixXcd::Identity(b.d.t, b.d.t));
    return b;
}

} // namespace

PairSvdDecomposition pair_svd_decomposition(const ComplexMatrix& a, const ComplexMatrix& b,
                                            const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "pair_svd_decomposition");
    detail::require_square(b, "pair_svd_decomposition");
    if (!same_shape(a, b))
        throw DimensionMismatch("pair_svd_decomposition: A and B must have the same size");
    detail::require_finite(a, "pair_svd_decomposition");
    detail::require_finite(b, "pair_svd_decomposition");

    const Index n = static_cast<Index>(a.rows());
    detail::FullSvd fa = detail::svd_full(detail::to_cmat(a));
    detail::FullSvd fb = detail::svd_full(detail::to_cmat(b));
    const Index r = detail::rank_from_sigma(fa.sigma, detail::cutoff(n, n, fa.sigma(0), cfg));
    const Index s = detail::rank_from_sigma(fb.sigma, detail::cutoff(n, n, fb.sigma(0), cfg));
    if (r == 0)
        throw ZeroMatrix("pair_svd_decomposition: A has rank 0");
    if (s == 0)
        throw ZeroMatrix("pair_svd_decomposition: B has rank 0");

    // A = U_A diag(Sigma_A, 0) V_A^*; with U := U_A, V := U_B the block rows
    // are the leading rows of the unitary cross products, so their
    // row-orthonormality is automatic.
    CMat cross_a = fa.v.adjoint() * fb.u; // V_A^* U_B
    CMat cross_b = fb.v.adjoint() * fa.u; // V_B^* U_A

    PairSvdDecomposition d{
        detail::unmap(fa.u),
        detail::unmap(fb.u),
        std::vector<double>(fa.sigma.data(), fa.sigma.data() + r),
        std::vector<double>(fb.sigma.data(), fb.sigma.data() + s),
        detail::unmap(cross_a.topLeftCorner(r, s)),
        detail::optional_block(cross_a.topRightCorner(r, n - s)),
        detail::unmap(cross_b.topLeftCorner(s, r)),
        detail::optional_block(cross_b.topRightCorner(s, n - r)),
        static_cast<std::size_t>(r),
        static_cast<std::size_t>(s),
    };
    return d;
}

CoreEpPairDecomposition core_ep_pair_decomposition(const ComplexMatrix& a, const ComplexMatrix& b,
                                                   const ToleranceConfig& cfg) {
    cfg.validate();
    if (a.rows() != b.cols() || a.cols() != b.rows())
        throw DimensionMismatch("core_ep_pair_decomposition: need A m x n and B n x m");
    detail::require_finite(a, "core_ep_pair_decomposition");
    detail::require_finite(b, "core_ep_pair_decomposition");
    if (frobenius_norm(b) == 0.0)
        throw ZeroMatrix("core_ep_pair_decomposition: B must be nonzero");

    const Index m = static_cast<Index>(a.rows());
    const Index n = static_cast<Index>(a.cols());
    CMat am = detail::to_cmat(a);
    CMat bm = detail::to_cmat(b);
    CMat ab = am * bm;
    CMat ba = bm * am;

    const std::size_t k =
        std::max(detail::index_h(ab, cfg, true).first, detail::index_h(ba, cfg, true).first);
    CMat abk = detail::power(ab, k);
    CMat bak = detail::power(ba, k);
    const double hint_ab = std::pow(detail::spectral_norm(ab), static_cast<double>(k));

    const Index t = detail::rank_h(abk, cfg, hint_ab);
    if (t == 0)
        throw NilpotentProduct("core_ep_pair_decomposition: (AB)^k has rank 0");

    detail::FullSvd fab = detail::svd_full(abk);
    detail::FullSvd fba = detail::svd_full(bak);
    CMat u = detail::complete_unitary(fab.u.leftCols(t), m);
    CMat v = detail::complete_unitary(fba.u.leftCols(t), n);
    auto u1 = u.leftCols(t);
    auto u2 = u.rightCols(m - t);
    auto v1 = v.leftCols(t);
    auto v2 = v.rightCols(n - t);

    // The construction places R((AB)^k) and R((BA)^k) first, which makes the
    // lower-left blocks vanish; assert rather than force it.
    const double za = (u2.adjoint() * am * v1).norm();
    const double zb = (v2.adjoint() * bm * u1).norm();
    if (za > cfg.residual_tol * std::max(1.0, am.norm()) ||
        zb > cfg.residual_tol * std::max(1.0, bm.norm()))
        throw ConvergenceFailure("core_ep_pair_decomposition: lower-left block residual too large");

    CoreEpPairDecomposition d{
        detail::unmap(u),
        detail::unmap(v),
        detail::unmap(CMat(u1.adjoint() * am * v1)),
        detail::optional_block(CMat(u1.adjoint() * am * v2)),
        detail::optional_block(CMat(u2.adjoint() * am * v2)),
        detail::unmap(CMat(v1.adjoint() * bm * u1)),
        detail::optional_block(CMat(v1.adjoint() * bm * u2)),
        detail::optional_block(CMat(v2.adjoint() * bm * u2)),
        static_cast<std::size_t>(t),
        k,
    };
    return d;
}

ComplexMatrix block_pinv(const BlockTriangularForm& form, const ToleranceConfig& cfg) {
    BlockParts b = prepare(form, cfg);
    const auto& d = b.d;
    CMat top_left = b.c1.adjoint() * b.omega;                       // t x t
    CMat top_right = -b.c1.adjoint() * b.omega * b.c2 * b.c3p;      // t x p
    CMat bot_left = b.kperp * b.c2.adjoint() * b.omega;             // q x t
    CMat bot_right = b.c3p - b.kperp * b.c2.adjoint() * b.omega * b.c2 * b.c3p; // q x p

    CMat inner(d.n, d.m);
    inner.topLeftCorner(d.t, d.t) = top_left;
    inner.topRightCorner(d.t, d.p) = top_right;
    inner.bottomLeftCorner(d.q, d.t) = bot_left;
    inner.bottomRightCorner(d.q, d.p) = bot_right;
    return detail::unmap(CMat(detail::map(form.v) * inner * detail::map(form.u).adjoint()));
}

ComplexMatrix block_omega(const BlockTriangularForm& form, const ToleranceConfig& cfg) {
    return detail::unmap(prepare(form, cfg).omega);
}

ComplexMatrix block_projector(const BlockTriangularForm& form, const ToleranceConfig& cfg) {
    BlockParts b = prepare(form, cfg);
    const auto& d = b.d;
    CMat inner = CMat::Zero(d.m, d.m);
    inner.topLeftCorner(d.t, d.t) = CMat::Identity(d.t, d.t);
    inner.bottomRightCorner(d.p, d.p) = b.c3 * b.c3p;
    return detail::unmap(CMat(detail::map(form.u) * inner * detail::map(form.u).adjoint()));
}

ComplexMatrix reconstruct_a(const PairSvdDecomposition& d) {
    const Index n = static_cast<Index>(d.u.rows());
    const Index r = static_cast<Index>(d.r);
    const Index s = static_cast<Index>(d.s);
    CMat inner = CMat::Zero(n, n);
    CMat sig = diag_cmat(d.sigma_a);
    inner.topLeftCorner(r, s) = sig * detail::to_cmat(d.a1);
    if (d.a2)
        inner.topRightCorner(r, n - s) = sig * detail::to_cmat(*d.a2);
    return detail::unmap(CMat(detail::map(d.u) * inner * detail::map(d.v).adjoint()));
}

ComplexMatrix reconstruct_b(const PairSvdDecomposition& d) {
    const Index n = static_cast<Index>(d.u.rows());
    const Index r = static_cast<Index>(d.r);
    const Index s = static_cast<Index>(d.s);
    CMat inner = CMat::Zero(n, n);
    CMat sig = diag_cmat(d.sigma_b);
    inner.topLeftCorner(s, r) = sig * detail::to_cmat(d.b1);
    if (d.b2)
        inner.topRightCorner(s, n - r) = sig * detail::to_cmat(*d.b2);
    return detail::unmap(CMat(detail::map(d.v) * inner * detail::map(d.u).adjoint()));
}

ComplexMatrix reconstruct_a(const CoreEpPairDecomposition& d) {
    const Index m = static_cast<Index>(d.u.rows());
    const Index n = static_cast<Index>(d.v.rows());
    const Index t = static_cast<Index>(d.t);
    CMat inner = CMat::Zero(m, n);
    inner.topLeftCorner(t, t) = detail::to_cmat(d.a1);
    if (d.a12)
        inner.topRightCorner(t, n - t) = detail::to_cmat(*d.a12);
    if (d.a2)
        inner.bottomRightCorner(m - t, n - t) = detail::to_cmat(*d.a2);
    return detail::unmap(CMat(detail::map(d.u) * inner * detail::map(d.v).adjoint()));
}

ComplexMatrix reconstruct_b(const CoreEpPairDecomposition& d) {
    const Index m = static_cast<Index>(d.u.rows());
    const Index n = static_cast<Index>(d.v.rows());
    const Index t = static_cast<Index>(d.t);
    CMat inner = CMat::Zero(n, m);
    inner.topLeftCorner(t, t) = detail::to_cmat(d.b1);
    if (d.b12)
        inner.topRightCorner(t, m - t) = detail::to_cmat(*d.b12);
    if (d.b2)
        inner.bottomRightCorner(n - t, m - t) = detail::to_cmat(*d.b2);
    return detail::unmap(CMat(detail::map(d.v) * inner * detail::map(d.u).adjoint()));
}

ComplexMatrix reconstruct(const BlockTriangularForm& form) {
    FormDims d = form_dims(form);
    CMat inner = CMat::Zero(d.m, d.n);
    inner.topLeftCorner(d.t, d.t) = detail::to_cmat(form.c1);
    if (form.c2)
        inner.topRightCorner(d.t, d.q) = detail::to_cmat(*form.c2);
    if (form.c3)
        inner.bottomRightCorner(d.p, d.q) = detail::to_cmat(*form.c3);
    return detail::unmap(CMat(detail::map(form.u) * inner * detail::map(form.v).adjoint()));
}

} // namespace geninv
