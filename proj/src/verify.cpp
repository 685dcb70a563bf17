#include "geninv/verify.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "detail.hpp"
#include "geninv/inverses.hpp"

namespace geninv {

using detail::CMat;
using detail::Index;

const Condition* VerificationReport::find(std::string_view label) const {
    for (const auto& c : conditions)
        if (c.label == label)
            return &c;
    return nullptr;
}

namespace {

std::string_view group_of(std::string_view label) {
    const auto pos = label.find(':');
    return pos == std::string_view::npos ? label : label.substr(0, pos);
}

} // namespace

bool VerificationReport::group_pass(std::string_view group) const {
    bool seen = false;
    for (const auto& c : conditions) {
        if (group_of(c.label) != group)
            continue;
        seen = true;
        if (!c.pass)
            return false;
    }
    return seen;
}

bool VerificationReport::has_group(std::string_view group) const {
    for (const auto& c : conditions)
        if (group_of(c.label) == group)
            return true;
    return false;
}

namespace {

class ReportBuilder {
public:
    ReportBuilder(std::string theorem_id, const ToleranceConfig& cfg)
        : cfg_(cfg) {
        rep_.theorem_id = std::move(theorem_id);
    }

    /// Equation condition: pass iff residual <= residual_tol * scale.
    void residual(std::string label, double value, double scale) {
        Condition c;
        c.label = std::move(label);
        c.residual = value;
        c.scale = std::max(1.0, scale);
        c.threshold = cfg_.residual_tol * c.scale;
        c.pass = std::isfinite(value) && value <= c.threshold;
        rep_.conditions.push_back(std::move(c));
    }

    /// Biconditional condition: pass iff the two sides' verdicts agree.
    void verdict_equality(std::string label, bool left, bool right) {
        Condition c;
        c.label = std::move(label);
        c.residual = left == right ? 0.0 : 1.0;
        c.scale = 1.0;
        c.threshold = 0.5;
        c.pass = left == right;
        rep_.conditions.push_back(std::move(c));
    }

    /// Subspace containment of the column spaces spanned by two orthonormal
    /// bases; residual is the projector defect of X against Y.
    void contained(std::string label, const CMat& xbasis, const CMat& ybasis) {
        const double r = containment_residual(xbasis, ybasis);
        residual(std::move(label), r, std::max(1.0, xbasis.norm()));
    }

    void equal_spaces(std::string label, const CMat& xbasis, const CMat& ybasis) {
        const double r =
            std::max(containment_residual(xbasis, ybasis), containment_residual(ybasis, xbasis));
        residual(std::move(label), r, std::max(1.0, std::max(xbasis.norm(), ybasis.norm())));
    }

    static double containment_residual(const CMat& xbasis, const CMat& ybasis) {
        if (xbasis.cols() == 0)
            return 0.0;
        if (ybasis.cols() == 0)
            return xbasis.norm();
        return (xbasis - ybasis * (ybasis.adjoint() * xbasis)).norm();
    }

    bool would_pass(double value, double scale) const {
        return std::isfinite(value) && value <= cfg_.residual_tol * std::max(1.0, scale);
    }

    VerificationReport take() {
        rep_.overall = true;
        for (const auto& c : rep_.conditions)
            rep_.overall = rep_.overall && c.pass;
        return std::move(rep_);
    }

private:
    VerificationReport rep_;
    const ToleranceConfig& cfg_;
};

double fro(const CMat& m) { return m.norm(); }

/// Trailing right singular vectors past the (hinted) rank: null-space basis.
CMat null_cols_h(const CMat& m, const ToleranceConfig& cfg, double hint = 0.0) {
    detail::FullSvd f = detail::svd_full(m);
    const double smax = f.sigma.size() ? f.sigma(0) : 0.0;
    const Index r = detail::rank_from_sigma(f.sigma, detail::cutoff(m.rows(), m.cols(), smax, cfg, hint));
    return f.v.rightCols(m.cols() - r);
}

void require_shapes_axb(const ComplexMatrix& a, const ComplexMatrix& b, const ComplexMatrix& x,
                        const char* what) {
    if (!a.is_square() || !same_shape(a, b) || !same_shape(a, x))
        throw DimensionMismatch(std::string(what) + ": A, B, X must be square of the same size");
}

} // namespace

VerificationReport check_penrose(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ToleranceConfig& cfg) {
    cfg.validate();
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw DimensionMismatch("check_penrose: X must be n x m for A m x n");
    detail::require_finite(a, "check_penrose");
    detail::require_finite(x, "check_penrose");
    CMat am = detail::to_cmat(a), xm = detail::to_cmat(x);
    const double scale = std::max(fro(am), fro(xm));
    CMat ax = am * xm, xa = xm * am;
    ReportBuilder rb("penrose", cfg);
    rb.residual("i:AXA=A", fro(CMat(ax * am - am)), scale);
    rb.residual("ii:XAX=X", fro(CMat(xa * xm - xm)), scale);
    rb.residual("iii:(AX)*=AX", fro(CMat(ax.adjoint() - ax)), scale);
    rb.residual("iv:(XA)*=XA", fro(CMat(xa.adjoint() - xa)), scale);
    return rb.take();
}

VerificationReport check_geninv_wrt_spaces(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_shapes_axb(a, b, x, "check_geninv_wrt_spaces");
    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double sb = detail::spectral_norm(bm);

    CMat bbpas = bm * detail::pinv_h(bm, cfg) * am.adjoint(); // B B^+ A^*
    ReportBuilder rb("geninv-wrt-spaces", cfg);
    rb.equal_spaces("range:range(X)=range(BB+A*)", detail::range_cols_h(xm, cfg),
                    detail::range_cols_h(bbpas, cfg, sa));
    rb.equal_spaces("null:null(X)=null((AB)*)", null_cols_h(xm, cfg),
                    null_cols_h(CMat((am * bm).adjoint()), cfg, sa * sb));
    rb.residual("outer:XAX=X", fro(CMat(xm * am * xm - xm)), std::max(fro(am), fro(xm)));
    return rb.take();
}

VerificationReport check_projector_theorem(const ComplexMatrix& a, const ComplexMatrix& b,
                                           const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_shapes_axb(a, b, x, "check_projector_theorem");
    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double sb = detail::spectral_norm(bm);
    const double scale = std::max({fro(am), fro(bm), fro(xm)});

    CMat ax = am * xm, xa = xm * am;
    ReportBuilder rb("projector", cfg);
    rb.residual("AX:idempotent", fro(CMat(ax * ax - ax)), scale);
    rb.residual("AX:hermitian", fro(CMat(ax.adjoint() - ax)), scale);
    rb.equal_spaces("AX:range=range(AB)", detail::range_cols_h(ax, cfg, sa),
                    detail::range_cols_h(CMat(am * bm), cfg, sa * sb));
    rb.residual("XA:idempotent", fro(CMat(xa * xa - xa)), scale);
    CMat bbpas = bm * detail::pinv_h(bm, cfg) * am.adjoint();
    rb.equal_spaces("XA:range=range(BB+A*)", detail::range_cols_h(xa, cfg, sa),
                    detail::range_cols_h(bbpas, cfg, sa));
    rb.equal_spaces("XA:null=null(B*A*A)", null_cols_h(xa, cfg, sa),
                    null_cols_h(CMat(bm.adjoint() * am.adjoint() * am), cfg, sb * sa * sa));
    return rb.take();
}

VerificationReport check_system_tcf11(const ComplexMatrix& a, const ComplexMatrix& b,
                                      const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_shapes_axb(a, b, x, "check_system_tcf11");
    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double sb = detail::spectral_norm(bm);

    CMat abbp = am * bm * detail::pinv_h(bm, cfg);
    CMat g = detail::pinv_h(abbp, cfg, sa);
    ReportBuilder rb("tcf11", cfg);
    rb.residual("XA=(ABB+)+A", fro(CMat(xm * am - g * am)),
                std::max({fro(am), fro(bm), fro(xm)}));
    rb.contained("range(X*)<=range(AB)", detail::range_cols_h(CMat(xm.adjoint()), cfg),
                 detail::range_cols_h(CMat(am * bm), cfg, sa * sb));
    return rb.take();
}

VerificationReport check_system_a16(const ComplexMatrix& a, const ComplexMatrix& b,
                                    const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_shapes_axb(a, b, x, "check_system_a16");
    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double sb = detail::spectral_norm(bm);
    const double scale = std::max({fro(am), fro(bm), fro(xm)});

    CMat ab = am * bm;
    ReportBuilder rb("a16", cfg);
    rb.residual("XAX=X", fro(CMat(xm * am * xm - xm)), scale);
    rb.residual("AX=P_AB", fro(CMat(am * xm - detail::projector_h(ab, cfg, sa * sb))), scale);
    rb.residual("XA=B(AB)+A", fro(CMat(xm * am - bm * detail::pinv_h(ab, cfg, sa * sb) * am)),
                scale);
    return rb.take();
}

VerificationReport check_equiv_theorem(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_shapes_axb(a, b, x, "check_equiv_theorem");
    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double sb = detail::spectral_norm(bm);
    const double scale = std::max({fro(am), fro(bm), fro(xm)});

    CMat abbp = am * bm * detail::pinv_h(bm, cfg);
    CMat g = detail::pinv_h(abbp, cfg, sa);
    ReportBuilder rb("equiv", cfg);
    rb.residual("b:XAX=X", fro(CMat(xm * am * xm - xm)), scale);
    rb.residual("b:AX=A(ABB+)+", fro(CMat(am * xm - am * g)), scale);
    rb.residual("b:XA=(ABB+)+A", fro(CMat(xm * am - g * am)), scale);
    rb.residual("c:AX=P_AB", fro(CMat(am * xm - detail::projector_h(CMat(am * bm), cfg, sa * sb))),
                scale);
    rb.contained("c:range(X)<=range(BB+A*)", detail::range_cols_h(xm, cfg),
                 detail::range_cols_h(CMat(bm * detail::pinv_h(bm, cfg) * am.adjoint()), cfg, sa));
    return rb.take();
}

VerificationReport check_core_ep(const ComplexMatrix& a, const ComplexMatrix& x,
                                 const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "check_core_ep");
    if (!same_shape(a, x))
        throw NotSquare("check_core_ep: X must match A");
    detail::require_finite(a, "check_core_ep");
    detail::require_finite(x, "check_core_ep");
    CMat am = detail::to_cmat(a), xm = detail::to_cmat(x);
    const std::size_t k = detail::index_h(am, cfg, true).first;
    CMat ak = detail::power(am, k);
    CMat ak1 = ak * am;
    CMat ax = am * xm;
    const double scale = std::max({fro(am), fro(xm), fro(ak), fro(ak1)});

    ReportBuilder rb("core-ep", cfg);
    rb.residual("def:XAX=X", fro(CMat(xm * am * xm - xm)), scale);
    rb.residual("def:(AX)*=AX", fro(CMat(ax.adjoint() - ax)), scale);
    rb.residual("def:XA^(k+1)=A^k", fro(CMat(xm * ak1 - ak)), scale);

    CMat ad = detail::map(drazin(a, cfg));
    CMat aad = am * ad;
    CMat paad = detail::pinv_h(aad, cfg, 1.0);
    rb.residual("drz:XAX=X", fro(CMat(xm * am * xm - xm)), scale);
    rb.residual("drz:AX=AA^D(AA^D)+", fro(CMat(ax - aad * paad)), scale);
    rb.residual("drz:XA=A^D(AA^D)+A", fro(CMat(xm * am - ad * paad * am)), scale);
    return rb.take();
}

VerificationReport check_bt(const ComplexMatrix& a, const ComplexMatrix& x,
                            const ToleranceConfig& cfg) {
    cfg.validate();
    detail::require_square(a, "check_bt");
    if (!same_shape(a, x))
        throw NotSquare("check_bt: X must match A");
    detail::require_finite(a, "check_bt");
    detail::require_finite(x, "check_bt");
    CMat am = detail::to_cmat(a), xm = detail::to_cmat(x);
    const double sa = detail::spectral_norm(am);
    const double scale = std::max(fro(am), fro(xm));
    CMat a2 = am * am;

    ReportBuilder rb("bt", cfg);
    rb.residual("XAX=X", fro(CMat(xm * am * xm - xm)), scale);
    rb.residual("AX=P_A2", fro(CMat(am * xm - detail::projector_h(a2, cfg, sa * sa))), scale);
    rb.residual("XA=A(A2)+A", fro(CMat(xm * am - am * detail::pinv_h(a2, cfg, sa * sa) * am)),
                scale);
    return rb.take();
}

namespace {

void require_weighted_triple(const ComplexMatrix& a, const ComplexMatrix& w, const ComplexMatrix& x,
                             const char* what) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw DimensionMismatch(std::string(what) + ": need A m x n and W n x m");
    if (!same_shape(a, x))
        throw DimensionMismatch(std::string(what) + ": X must have the shape of A");
}

} // namespace

VerificationReport check_w_core_ep(const ComplexMatrix& a, const ComplexMatrix& w,
                                   const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_weighted_triple(a, w, x, "check_w_core_ep");
    detail::require_finite(a, "check_w_core_ep");
    detail::require_finite(w, "check_w_core_ep");
    detail::require_finite(x, "check_w_core_ep");

    CMat am = detail::to_cmat(a), wm = detail::to_cmat(w), xm = detail::to_cmat(x);
    CMat aw = am * wm, wa = wm * am, waw = wm * am * wm;
    const double sa = detail::spectral_norm(am);
    const double sw = detail::spectral_norm(wm);
    const double saw = detail::spectral_norm(aw);
    const double swa = detail::spectral_norm(wa);
    const double scale = std::max({fro(am), fro(wm), fro(xm)});

    ReportBuilder rb("w-core-ep", cfg);

    // Defining system, k = max(Ind(AW), Ind(WA)).
    const std::size_t kmax = std::max(detail::index_h(aw, cfg, true).first,
                                      detail::index_h(wa, cfg, true).first);
    const double hmax = std::pow(saw, static_cast<double>(kmax));
    CMat wak = detail::power(wa, kmax);
    rb.residual("sys:WAWX=P_((WA)^k)",
                fro(CMat(waw * xm -
                         detail::projector_h(wak, cfg, std::pow(swa, static_cast<double>(kmax))))),
                scale);
    rb.contained("sys:range(X)<=range((AW)^k)", detail::range_cols_h(xm, cfg),
                 detail::range_cols_h(detail::power(aw, kmax), cfg, hmax));

    // Equivalence items (unproved source theorem; transcribed as printed),
    // stated with k = Ind(AW). Square inputs only.
    if (a.rows() != a.cols())
        return rb.take();

    const std::size_t k = detail::index_h(aw, cfg, true).first;
    const double hk = std::pow(saw, static_cast<double>(k));
    CMat awk = detail::power(aw, k);
    CMat awk_p = detail::pinv_h(awk, cfg, hk);
    CMat p_awk = awk * awk_p;
    CMat g = detail::pinv_h(CMat(waw * p_awk), cfg, sw * sw * sa);

    rb.residual("b:XWAWX=X", fro(CMat(xm * waw * xm - xm)), scale);
    rb.equal_spaces("b:range(X)=range(P_k(WAW)*)", detail::range_cols_h(xm, cfg),
                    detail::range_cols_h(CMat(p_awk * waw.adjoint()), cfg, sw * sw * sa));
    rb.equal_spaces("b:null(X)=null(WAW((AW)^k)*)", null_cols_h(xm, cfg),
                    null_cols_h(CMat(waw * awk.adjoint()), cfg, sw * sw * sa * hk));

    rb.residual("c:XWAW=(WAWP_k)+WAW", fro(CMat(xm * waw - g * waw)), scale);
    rb.contained("c:range(X*)<=range(W(AW)^(k+1))", detail::range_cols_h(CMat(xm.adjoint()), cfg),
                 detail::range_cols_h(CMat(wm * detail::power(aw, k + 1)), cfg, sw * hk * saw));

    rb.residual("d:XWAWX=X", fro(CMat(xm * waw * xm - xm)), scale);
    rb.residual("d:WAWX=WAW(WAWP_k)+", fro(CMat(waw * xm - waw * g)), scale);
    rb.residual("d:XWAW=X(WAWP_k)+", fro(CMat(xm * waw - xm * g)), scale);

    rb.residual("e:WAWX=P_(W(AW)^(k+1))",
                fro(CMat(waw * xm -
                         detail::projector_h(CMat(wm * detail::power(aw, k + 1)), cfg, sw * hk * saw))),
                scale);
    rb.contained("e:range(X)<=range(P_k(WAW)*)", detail::range_cols_h(xm, cfg),
                 detail::range_cols_h(CMat(p_awk * waw.adjoint()), cfg, sw * sw * sa));
    return rb.take();
}

VerificationReport check_w_bt(const ComplexMatrix& a, const ComplexMatrix& w,
                              const ComplexMatrix& x, const ToleranceConfig& cfg) {
    cfg.validate();
    require_weighted_triple(a, w, x, "check_w_bt");
    detail::require_finite(a, "check_w_bt");
    detail::require_finite(w, "check_w_bt");
    detail::require_finite(x, "check_w_bt");

    CMat am = detail::to_cmat(a), wm = detail::to_cmat(w), xm = detail::to_cmat(x);
    CMat aw = am * wm, waw = wm * am * wm;
    const double sa = detail::spectral_norm(am);
    const double sw = detail::spectral_norm(wm);
    const double saw = detail::spectral_norm(aw);
    const double scale = std::max({fro(am), fro(wm), fro(xm)});

    CMat p_aw = detail::projector_h(aw, cfg, sa * sw);
    CMat g = detail::pinv_h(CMat(waw * p_aw), cfg, sw * sw * sa);

    ReportBuilder rb("w-bt", cfg);
    rb.residual("sys:AWX=AW(WAWP_AW)+", fro(CMat(aw * xm - aw * g)), scale);
    rb.contained("sys:range(X)<=range(P_AW(WAW)*)", detail::range_cols_h(xm, cfg),
                 detail::range_cols_h(CMat(p_aw * waw.adjoint()), cfg, sw * sw * sa));

    // Equivalence items (unproved source theorem; transcribed as printed,
    // item c in both plausible readings). Square inputs only.
    if (a.rows() != a.cols())
        return rb.take();

    CMat waw2 = wm * detail::power(aw, 2);
    const double h2 = sw * saw * saw;

    rb.residual("b:XWAWX=X", fro(CMat(xm * waw * xm - xm)), scale);
    rb.equal_spaces("b:range(X)=range(P_AW(WAW)*)", detail::range_cols_h(xm, cfg),
                    detail::range_cols_h(CMat(p_aw * waw.adjoint()), cfg, sw * sw * sa));
    rb.equal_spaces("b:null(X)=null((W*(AW)^2)*)", null_cols_h(xm, cfg),
                    null_cols_h(CMat((wm.adjoint() * detail::power(aw, 2)).adjoint()), cfg, h2));

    rb.residual("cA:XWAW=(WAWP_AW)+A", fro(CMat(xm * waw - g * am)), scale);
    rb.contained("cA:range(X*)<=range(W(AW)^2)", detail::range_cols_h(CMat(xm.adjoint()), cfg),
                 detail::range_cols_h(waw2, cfg, h2));
    rb.residual("cW:XWAW=(WAWP_AW)+WAW", fro(CMat(xm * waw - g * waw)), scale);
    rb.contained("cW:range(X*)<=range(W(AW)^2)", detail::range_cols_h(CMat(xm.adjoint()), cfg),
                 detail::range_cols_h(waw2, cfg, h2));

    rb.residual("d:XWAWX=X", fro(CMat(xm * waw * xm - xm)), scale);
    rb.residual("d:WAWX=WAW(WAWP_AW)+", fro(CMat(waw * xm - waw * g)), scale);
    rb.residual("d:XWAW=X(WAWP_AW)+", fro(CMat(xm * waw - xm * g)), scale);

    CMat p_waw2 = detail::projector_h(waw2, cfg, h2);
    rb.residual("e:WAWX=P_(W(AW)^2)", fro(CMat(waw * xm - p_waw2)), scale);
    rb.contained("e:range(X)<=range(P_AW(WAW)*)", detail::range_cols_h(xm, cfg),
                 detail::range_cols_h(CMat(p_aw * waw.adjoint()), cfg, sw * sw * sa));

    rb.residual("f:X=XWAWX", fro(CMat(xm - xm * waw * xm)), scale);
    rb.residual("f:WAWX=XP_(W(AW)^2)", fro(CMat(waw * xm - xm * p_waw2)), scale);
    rb.residual("f:XWAW=AW(W(AW)^2)+WAW",
                fro(CMat(xm * waw - aw * detail::pinv_h(waw2, cfg, h2) * waw)), scale);
    return rb.take();
}

VerificationReport check_a01_properties(const ComplexMatrix& a, const ComplexMatrix& b,
                                        const ToleranceConfig& cfg) {
    cfg.validate();
    if (!a.is_square() || !same_shape(a, b))
        throw DimensionMismatch("check_a01_properties: A and B must be square of the same size");
    detail::require_finite(a, "check_a01_properties");
    detail::require_finite(b, "check_a01_properties");

    CMat am = detail::to_cmat(a), bm = detail::to_cmat(b);
    const double sa = detail::spectral_norm(am);
    const double scale = std::max(fro(am), fro(bm));
    const std::size_t n = a.rows();

    ComplexMatrix g = geninv_wrt(a, b, cfg);
    ComplexMatrix ga = geninv_wrt(b, a, cfg); // B^(A)
    CMat gm = detail::map(g);
    CMat bbp = bm * detail::pinv_h(bm, cfg);
    CMat abbp = am * bbp;
    CMat gp = detail::pinv_h(gm, cfg, sa); // (A^(B))^+
    ComplexMatrix ap = detail::unmap(detail::pinv_h(am, cfg));

    ReportBuilder rb("a01", cfg);
    rb.verdict_equality("a:(A^(B)=0)<=>(AB=0)", rb.would_pass(fro(gm), scale),
                        rb.would_pass(fro(CMat(am * bm)), scale));
    rb.residual("b:(A^(B))+=ABB+", fro(CMat(gp - abbp)), scale);
    rb.residual("c:BB+A^(B)=A^(B)", fro(CMat(bbp * gm - gm)), scale);
    {
        ComplexMatrix gi = geninv_wrt(a, ComplexMatrix::identity(n), cfg);
        ComplexMatrix gd = geninv_wrt(a, ap, cfg);
        const double r = std::max(frobenius_norm(gi - ap), frobenius_norm(gd - ap));
        rb.residual("d:A^(I)=A^(A+)=A+", r, scale);
    }
    rb.residual("e:A^(A^(B))=A^(B)", frobenius_norm(geninv_wrt(a, g, cfg) - g), scale);
    {
        ComplexMatrix gpm = detail::unmap(gp);
        rb.residual("f:G^((G+))=G+", frobenius_norm(geninv_wrt(g, gpm, cfg) - gpm), scale);
    }
    {
        const bool commute = rb.would_pass(fro(CMat(am * bm - bm * am)), scale);
        CMat gap = detail::pinv_h(detail::map(ga), cfg, detail::spectral_norm(bm));
        const bool eq = rb.would_pass(fro(CMat(gp * bm - gap * am)), scale);
        rb.verdict_equality("g:(AB=BA)<=>((A^(B))+B=(B^(A))+A)", commute, eq);
    }
    rb.verdict_equality("h:(A^(B)=A+)<=>(ABB+=A)",
                        rb.would_pass(frobenius_norm(g - ap), scale),
                        rb.would_pass(fro(CMat(abbp - am)), scale));
    return rb.take();
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream os;
    os << "theorem " << report.theorem_id << "\n";
    for (const auto& c : report.conditions) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.label << "  residual=" << c.residual
           << "  threshold=" << c.threshold << "\n";
    }
    os << "overall: " << (report.overall ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string to_json_string(const VerificationReport& report) {
    nlohmann::json j;
    j["theorem_id"] = report.theorem_id;
    j["overall"] = report.overall;
    j["conditions"] = nlohmann::json::array();
    for (const auto& c : report.conditions) {
        j["conditions"].push_back({{"label", c.label},
                                   {"residual", c.residual},
                                   {"threshold", c.threshold},
                                   {"scale", c.scale},
                                   {"pass", c.pass}});
    }
    return j.dump(2);
}

} // namespace geninv
