#include "geninv/genrand.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "detail.hpp"

namespace geninv {

using detail::CMat;
using detail::Index;

namespace {

// mt19937_64 is fully specified by the standard; the Gaussian transform is
// done in-library so output does not depend on the implementation of
// std::normal_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform01(); // (0, 1]
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    Complex cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return Complex(re, im) / std::sqrt(2.0);
    }

    CMat cgaussian_matrix(Index rows, Index cols) {
        CMat m(rows, cols);
        for (Index i = 0; i < rows; ++i)
            for (Index j = 0; j < cols; ++j)
                m(i, j) = cgaussian();
        return m;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

CMat unitary_from(Rng& rng, Index n) {
    Eigen::HouseholderQR<CMat> qr(rng.cgaussian_matrix(n, n));
    CMat q = qr.householderQ() * CMat::Identity(n, n);
    // Phase convention: first entry of noticeable modulus in each column is
    // made real positive, for cross-run comparability of factors.
    for (Index j = 0; j < n; ++j) {
        Index lead = 0;
        while (lead < n - 1 && std::abs(q(lead, j)) <= 1e-12)
            ++lead;
        const Complex z = q(lead, j);
        if (std::abs(z) > 0.0)
            q.col(j) *= std::conj(z) / std::abs(z);
    }
    return q;
}

/// Random invertible block with every singular value equal to c in [0.5, 2]:
/// a scaled unitary. Products and powers of such blocks keep their smallest
/// singular values bounded below, which exact-index planting relies on.
CMat scaled_unitary_from(Rng& rng, Index t) {
    const double c = rng.uniform(0.5, 2.0);
    return c * unitary_from(rng, t);
}

CMat upper_shift_chain(Index rows, Index cols, std::size_t k) {
    CMat m = CMat::Zero(rows, cols);
    for (std::size_t i = 0; i + 1 < k; ++i)
        m(static_cast<Index>(i), static_cast<Index>(i + 1)) = 1.0;
    return m;
}

} // namespace

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0)
        throw DimensionMismatch("random_unitary: n must be at least 1");
    Rng rng(seed);
    return detail::unmap(unitary_from(rng, static_cast<Index>(n)));
}

ComplexMatrix random_matrix_with_rank(std::size_t m, std::size_t n, std::size_t r,
                                      std::uint64_t seed) {
    if (m == 0 || n == 0)
        throw DimensionMismatch("random_matrix_with_rank: dimensions must be at least 1");
    if (r > std::min(m, n))
        throw RankOutOfRange("random_matrix_with_rank: rank exceeds min(m, n)");
    if (r == 0)
        return ComplexMatrix::zero(m, n);
    Rng rng(seed);
    CMat u = unitary_from(rng, static_cast<Index>(m));
    CMat v = unitary_from(rng, static_cast<Index>(n));
    Eigen::VectorXd sigma(static_cast<Index>(r));
    for (Index i = 0; i < sigma.size(); ++i)
        sigma(i) = rng.uniform(0.5, 2.0);
    CMat out = u.leftCols(static_cast<Index>(r)) * sigma.asDiagonal() *
               v.leftCols(static_cast<Index>(r)).adjoint();
    return detail::unmap(out);
}

ComplexMatrix random_with_index(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n == 0)
        throw DimensionMismatch("random_with_index: n must be at least 1");
    if (k > n)
        throw IndexOutOfRange("random_with_index: index exceeds n");
    Rng rng(seed);
    const Index nn = static_cast<Index>(n);
    const Index kk = static_cast<Index>(k);
    const Index t = nn - kk;
    CMat q = unitary_from(rng, nn);
    CMat inner = CMat::Zero(nn, nn);
    if (t > 0)
        inner.topLeftCorner(t, t) = scaled_unitary_from(rng, t);
    if (t > 0 && kk > 0)
        inner.topRightCorner(t, kk) = 0.5 * rng.cgaussian_matrix(t, kk);
    if (kk > 0)
        inner.bottomRightCorner(kk, kk) = upper_shift_chain(kk, kk, k);
    return detail::unmap(CMat(q * inner * q.adjoint()));
}

std::pair<ComplexMatrix, ComplexMatrix> random_pair_with_core_ep_structure(
    std::size_t m, std::size_t n, std::size_t t, std::size_t k, std::uint64_t seed) {
    if (t < 1)
        throw ParameterMismatch("random_pair_with_core_ep_structure: t must be at least 1");
    if (k < 1)
        throw ParameterMismatch("random_pair_with_core_ep_structure: k must be at least 1");
    if (t > std::min(m, n) || m - t < k || n - t < k)
        throw ParameterMismatch(
            "random_pair_with_core_ep_structure: blocks do not fit (need m - t >= k and n - t >= k)");

    Rng rng(seed);
    const Index mm = static_cast<Index>(m);
    const Index nn = static_cast<Index>(n);
    const Index tt = static_cast<Index>(t);
    const Index p = mm - tt;
    const Index q = nn - tt;

    CMat u = unitary_from(rng, mm);
    CMat v = unitary_from(rng, nn);
    CMat a1 = scaled_unitary_from(rng, tt);
    CMat b1 = scaled_unitary_from(rng, tt);

    CMat inner_a = CMat::Zero(mm, nn);
    inner_a.topLeftCorner(tt, tt) = a1;
    inner_a.topRightCorner(tt, q) = 0.5 * rng.cgaussian_matrix(tt, q);
    // A2 B2 = the chain pattern itself (B2 is an identity rectangle), so the
    // product is nilpotent of index exactly k.
    inner_a.bottomRightCorner(p, q) = upper_shift_chain(p, q, k);

    CMat inner_b = CMat::Zero(nn, mm);
    inner_b.topLeftCorner(tt, tt) = b1;
    inner_b.topRightCorner(tt, p) = 0.5 * rng.cgaussian_matrix(tt, p);
    CMat b2 = CMat::Zero(q, p);
    for (Index i = 0; i < std::min(p, q); ++i)
        b2(i, i) = 1.0;
    inner_b.bottomRightCorner(q, p) = b2;

    ComplexMatrix a = detail::unmap(CMat(u * inner_a * v.adjoint()));
    ComplexMatrix b = detail::unmap(CMat(v * inner_b * u.adjoint()));
    return {std::move(a), std::move(b)};
}

} // namespace geninv
