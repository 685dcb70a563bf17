#pragma once

#include <doctest.h>

#include "geninv/matcore.hpp"
#include "geninv/matrix.hpp"

namespace geninv::test {

inline const ToleranceConfig kCfg{};

inline double dist(const ComplexMatrix& a, const ComplexMatrix& b) {
    return frobenius_norm(a - b);
}

inline void check_close(const ComplexMatrix& got, const ComplexMatrix& want, double tol = 1e-9) {
    REQUIRE(got.rows() == want.rows());
    REQUIRE(got.cols() == want.cols());
    CHECK(dist(got, want) <= tol * std::max(1.0, frobenius_norm(want)));
}

/// Penrose residuals computed by direct multiplication, independent of any
/// library pseudoinverse path.
inline double penrose_residual(const ComplexMatrix& a, const ComplexMatrix& x) {
    double r = frobenius_norm(a * x * a - a);
    r = std::max(r, frobenius_norm(x * a * x - x));
    ComplexMatrix ax = a * x;
    ComplexMatrix xa = x * a;
    r = std::max(r, frobenius_norm(adjoint(ax) - ax));
    r = std::max(r, frobenius_norm(adjoint(xa) - xa));
    return r;
}

} // namespace geninv::test
