#include "moqa/complex_matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "moqa/error.hpp"

namespace moqa {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError(std::string(op) + ": shape " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()));
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw DimensionError("expected " + std::to_string(rows_ * cols_) + " entries, got " +
                             std::to_string(entries_.size()));
    }
    for (const auto& z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InputError("matrix entries must be finite");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::projector_onto(std::span<const Complex> row) {
    const std::size_t n = row.size();
    ComplexMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = std::conj(row[r]) * row[c];
        }
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionError("trace of a non-square matrix");
    }
    Complex t = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "addition");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
    require_same_shape(*this, rhs, "subtraction");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= rhs.entries_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (auto& z : entries_) {
        z *= scale;
    }
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
    if (lhs.cols() != rhs.rows()) {
        throw DimensionError("product: " + std::to_string(lhs.rows()) + "x" +
                             std::to_string(lhs.cols()) + " times " + std::to_string(rhs.rows()) +
                             "x" + std::to_string(rhs.cols()));
    }
    ComplexMatrix out(lhs.rows(), rhs.cols());
    for (std::size_t r = 0; r < lhs.rows(); ++r) {
        for (std::size_t k = 0; k < lhs.cols(); ++k) {
            const Complex a = lhs(r, k);
            if (a == Complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < rhs.cols(); ++c) {
                out(r, c) += a * rhs(k, c);
            }
        }
    }
    return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    require_same_shape(*this, other, "comparison");
    double worst = 0.0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        worst = std::max(worst, std::abs(entries_[i] - other.entries_[i]));
    }
    return worst;
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& other, double eps) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && max_abs_diff(other) <= eps;
}

double ComplexMatrix::max_abs() const {
    double worst = 0.0;
    for (const auto& z : entries_) {
        worst = std::max(worst, std::abs(z));
    }
    return worst;
}

bool ComplexMatrix::is_hermitian(double eps) const {
    return is_square() && max_abs_diff(adjoint()) <= eps;
}

double ComplexMatrix::min_hermitian_eigenvalue() const {
    if (!is_square()) {
        throw DimensionError("eigenvalues of a non-square matrix");
    }
    if (rows_ == 0) {
        return 0.0;
    }
    using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    const Eigen::Map<const RowMajor> view(entries_.data(), static_cast<Eigen::Index>(rows_),
                                          static_cast<Eigen::Index>(cols_));
    const Eigen::MatrixXcd hermitian = (view + view.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ComplexMatrix sandwich(const ComplexMatrix& p, const ComplexMatrix& rho) {
    return p * rho * p.adjoint();
}

}  // namespace moqa
