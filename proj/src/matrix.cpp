#include "normcomp/matrix.hpp"

#include <cmath>
#include <utility>

namespace normcomp {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
        throw DimensionError("ComplexMatrix: entry count does not match rows*cols");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const Complex& z : data_) m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const Complex& z : data_) s += std::norm(z);
    return std::sqrt(s);
}

bool ComplexMatrix::is_finite() const {
    for (const Complex& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix ComplexMatrix::submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                                       std::size_t ncols) const {
    if (row0 + nrows > rows_ || col0 + ncols > cols_)
        throw DimensionError("submatrix: window exceeds matrix bounds");
    ComplexMatrix r(nrows, ncols);
    for (std::size_t i = 0; i < nrows; ++i)
        for (std::size_t j = 0; j < ncols; ++j) r(i, j) = (*this)(row0 + i, col0 + j);
    return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix addition: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw DimensionError("matrix subtraction: shape mismatch");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
    for (Complex& z : data_) z *= s;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimension mismatch");
    ComplexMatrix r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex(0.0, 0.0)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError("max_abs_diff: shape mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

void ensure_finite(const ComplexMatrix& m, const char* what) {
    if (!m.is_finite()) throw ValidationError(std::string(what) + ": non-finite entries");
}

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m) : mat_(m.rows(), m.cols()) {
    if (!m.is_square()) throw DimensionError("HermitianMatrix: input not square");
    ensure_finite(m, "HermitianMatrix");
    const std::size_t n = m.rows();
    double asym = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
    asymmetry_ = asym;
    if (asym > 1e-12 * m.max_abs())
        throw ValidationError("HermitianMatrix: asymmetry " + std::to_string(asym) +
                              " exceeds 1e-12 * max|entry|");
    for (std::size_t i = 0; i < n; ++i) {
        mat_(i, i) = m(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            const Complex v = 0.5 * (m(i, j) + std::conj(m(j, i)));
            mat_(i, j) = v;
            mat_(j, i) = std::conj(v);
        }
    }
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
    return {ComplexMatrix::identity(n), AlreadySymmetric{}};
}

HermitianMatrix HermitianMatrix::zero(std::size_t n) {
    return {ComplexMatrix::zero(n, n), AlreadySymmetric{}};
}

HermitianMatrix HermitianMatrix::diagonal(const std::vector<double>& d) {
    return {ComplexMatrix::diagonal(d), AlreadySymmetric{}};
}

double HermitianMatrix::trace() const { return mat_.trace().real(); }

HermitianMatrix& HermitianMatrix::operator+=(const HermitianMatrix& other) {
    mat_ += other.mat_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator-=(const HermitianMatrix& other) {
    mat_ -= other.mat_;
    return *this;
}

HermitianMatrix& HermitianMatrix::operator*=(double s) {
    mat_ *= Complex(s, 0.0);
    return *this;
}

HermitianMatrix HermitianMatrix::shifted(double s) const {
    HermitianMatrix r = *this;
    for (std::size_t i = 0; i < dim(); ++i) r.mat_(i, i) += s;
    return r;
}

double real_trace_product(const HermitianMatrix& a, const HermitianMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("real_trace_product: dimension mismatch");
    double t = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) t += (a(i, j) * b(j, i)).real();
    return t;
}

}  // namespace normcomp
