#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "geninv/errors.hpp"

namespace geninv {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major, at least 1x1. The universal carrier for
/// every operation in this library; real inputs are embedded with zero
/// imaginary parts.
class ComplexMatrix {
public:
    /// Zero matrix of the given shape. Throws DimensionMismatch if a dimension is 0.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// From row-major entries; length must equal rows*cols and all entries
    /// must be finite.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    /// Row-of-rows literal, e.g. {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Square matrix with the given main diagonal.
    static ComplexMatrix diagonal(const std::vector<Complex>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& entries() const { return data_; }
    Complex* data() { return data_.data(); }
    const Complex* data() const { return data_.data(); }

    bool all_finite() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);
ComplexMatrix operator*(const ComplexMatrix& a, Complex s);
ComplexMatrix operator-(const ComplexMatrix& a);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

double frobenius_norm(const ComplexMatrix& a);

/// Largest singular value estimate is not needed here; this is the plain
/// entrywise max modulus.
double max_abs(const ComplexMatrix& a);

/// A^k by repeated multiplication, A^0 = I. Requires square A.
ComplexMatrix matrix_power(const ComplexMatrix& a, std::size_t k);

bool same_shape(const ComplexMatrix& a, const ComplexMatrix& b);

} // namespace geninv
