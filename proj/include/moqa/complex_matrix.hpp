#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace moqa {

using Complex = std::complex<double>;

/// Tolerance used for every numeric invariant check unless a caller says otherwise.
inline constexpr double kTolerance = 1e-9;

/// Dense complex matrix stored row-major. Entries are always finite.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    /// Zero matrix of the given shape.
    ComplexMatrix(std::size_t rows, std::size_t cols);

    /// Takes row-major entries; throws DimensionError on a count mismatch and
    /// InputError on a non-finite entry.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);

    /// Outer product v^dagger v of a row vector with itself.
    static ComplexMatrix projector_onto(std::span<const Complex> row);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::span<const Complex> entries() const noexcept { return entries_; }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

    /// Largest entrywise modulus of (this - other); shapes must agree.
    double max_abs_diff(const ComplexMatrix& other) const;
    bool approx_equal(const ComplexMatrix& other, double eps = kTolerance) const;

    /// Largest entrywise modulus.
    double max_abs() const;

    bool is_hermitian(double eps = kTolerance) const;

    /// Smallest eigenvalue of a Hermitian matrix.
    double min_hermitian_eigenvalue() const;

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> entries_;
};

/// P * rho * P^dagger without forming intermediates twice.
ComplexMatrix sandwich(const ComplexMatrix& p, const ComplexMatrix& rho);

}  // namespace moqa
