#include "geninv/matrix.hpp"

#include <cmath>

#include "detail.hpp"

namespace geninv {

namespace {

void check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0)
        throw DimensionMismatch("ComplexMatrix: dimensions must be at least 1x1");
}

} // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {
    check_dims(rows, cols);
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    check_dims(rows, cols);
    if (data_.size() != rows * cols)
        throw DimensionMismatch("ComplexMatrix: entry count does not match rows*cols");
    if (!all_finite())
        throw NonFinite("ComplexMatrix: entries must be finite");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_dims(rows_, cols_);
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw DimensionMismatch("ComplexMatrix: ragged initializer rows");
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!all_finite())
        throw NonFinite("ComplexMatrix: entries must be finite");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex>& entries) {
    ComplexMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

bool same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols();
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
    if (!same_shape(a, b))
        throw DimensionMismatch(std::string(what) + ": shapes differ");
}

} // namespace

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator+");
    return detail::unmap(detail::map(a) + detail::map(b));
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "operator-");
    return detail::unmap(detail::map(a) - detail::map(b));
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("operator*: inner dimensions differ");
    return detail::unmap(detail::map(a) * detail::map(b));
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    return detail::unmap(s * detail::map(a));
}

ComplexMatrix operator*(const ComplexMatrix& a, Complex s) { return s * a; }

ComplexMatrix operator-(const ComplexMatrix& a) { return Complex(-1.0, 0.0) * a; }

ComplexMatrix adjoint(const ComplexMatrix& a) {
    return detail::unmap(detail::map(a).adjoint());
}

double frobenius_norm(const ComplexMatrix& a) { return detail::map(a).norm(); }

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const Complex& z : a.entries())
        m = std::max(m, std::abs(z));
    return m;
}

ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k) {
    if (!a.is_square())
        throw NotSquare("matrix_power: matrix must be square");
    return detail::unmap(detail::power(detail::map(a), k));
}

} // namespace geninv
