#pragma once

#include "geninv/matcore.hpp"
#include "geninv/matrix.hpp"

namespace geninv {

/// Computation routes for the generalized inverse of A with respect to B.
/// All routes agree (within residual_tol) wherever they are defined, with
/// one documented exception: product_form equals the others iff
/// rank(AB) = rank(B); see geninv_wrt.
enum class GeninvWrtRoute {
    definition,   // pinv(A B pinv(B))
    pair_svd,     // embed pinv(Sigma_A A1) through the pair SVD frames
    core_ep_pair, // block formula on the core-EP pair form of (A, B)
    product_form, // B pinv(A B)
};

enum class CoreEpRoute {
    direct_formula, // A^k pinv((A^*)^k A^(k+1)) (A^*)^k
    via_drazin,     // A^D pinv(A A^D)
    via_geninv_wrt, // geninv_wrt(A, A^k)
};

enum class WCoreEpRoute {
    direct_formula,    // pinv(WAW (AW)^k pinv((AW)^k)), k = max(Ind(AW), Ind(WA))
    projector_formula, // pinv(WAW P_{(AW)^k}), k = Ind(AW)
    via_geninv_wrt,    // geninv_wrt(WAW, (AW)^k); square inputs only
};

/// A^(B) = pinv(A B pinv(B)) for square A, B of the same size.
///
/// Route preconditions: pair_svd needs A != 0 and B != 0; core_ep_pair needs
/// B != 0 and (AB)^k != 0. product_form evaluates B pinv(AB) as printed in
/// its source; it coincides with the definition exactly when
/// rank(AB) = rank(B) (counterexample otherwise: A = [[1,0],[0,0]],
/// B = [[1,1],[0,1]]).
ComplexMatrix geninv_wrt(const ComplexMatrix& a, const ComplexMatrix& b, const ToleranceConfig& cfg,
                         GeninvWrtRoute route = GeninvWrtRoute::definition);

/// Drazin inverse through A^k pinv(A^(2k+1)) A^k with k = Ind(A).
ComplexMatrix drazin(const ComplexMatrix& a, const ToleranceConfig& cfg);

/// Core-EP inverse; all three routes agree.
ComplexMatrix core_ep(const ComplexMatrix& a, const ToleranceConfig& cfg,
                      CoreEpRoute route = CoreEpRoute::direct_formula);

/// BT inverse pinv(A P_A) = geninv_wrt(A, A).
ComplexMatrix bt(const ComplexMatrix& a, const ToleranceConfig& cfg);

/// W-weighted BT inverse pinv(WAWAW pinv(AW)) for A (m x n), W (n x m).
ComplexMatrix w_bt(const ComplexMatrix& a, const ComplexMatrix& w, const ToleranceConfig& cfg);

/// W-weighted core-EP inverse for A (m x n), W (n x m), W != 0.
ComplexMatrix w_core_ep(const ComplexMatrix& a, const ComplexMatrix& w, const ToleranceConfig& cfg,
                        WCoreEpRoute route = WCoreEpRoute::direct_formula);

/// Same value as w_core_ep for square A, W, computed by reducing to the
/// leading pair-SVD blocks: U [ (Sigma_A A1)^{core-EP, (Sigma_W W1)} , 0; 0, 0 ] V^*.
ComplexMatrix w_core_ep_block_form(const ComplexMatrix& a, const ComplexMatrix& w,
                                   const ToleranceConfig& cfg);

/// Same value as w_bt for square A, W, through the analogous block reduction.
ComplexMatrix w_bt_block_form(const ComplexMatrix& a, const ComplexMatrix& w,
                              const ToleranceConfig& cfg);

} // namespace geninv
