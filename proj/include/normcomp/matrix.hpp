#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "normcomp/errors.hpp"

namespace normcomp {

using Complex = std::complex<double>;

/// Dense complex matrix, row-major storage. The universal carrier for
/// general blocks and operators; dimensions are desk scale (n <~ 128).
class ComplexMatrix {
  public:
    ComplexMatrix() : rows_(0), cols_(0) {}
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    static ComplexMatrix diagonal(const std::vector<double>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    const std::vector<Complex>& data() const { return data_; }
    std::vector<Complex>& data() { return data_; }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;

    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    bool is_finite() const;

    ComplexMatrix submatrix(std::size_t row0, std::size_t nrows, std::size_t col0,
                            std::size_t ncols) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex s);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  private:
    std::size_t rows_, cols_;
    std::vector<Complex> data_;
};

/// Maximum entrywise |a - b|; matrices must have equal shape.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Throws ValidationError if any entry is NaN or infinite.
void ensure_finite(const ComplexMatrix& m, const char* what);

/// Square complex matrix with enforced conjugate symmetry. The constructor
/// symmetrizes H <- (H + H*)/2 and records the pre-symmetrization asymmetry;
/// input with asymmetry above 1e-12 * max|entry| is rejected.
class HermitianMatrix {
  public:
    explicit HermitianMatrix(const ComplexMatrix& m);

    static HermitianMatrix identity(std::size_t n);
    static HermitianMatrix zero(std::size_t n);
    static HermitianMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return mat_.rows(); }
    const Complex& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
    const ComplexMatrix& matrix() const { return mat_; }

    double trace() const;
    double frobenius_norm() const { return mat_.frobenius_norm(); }
    double max_abs() const { return mat_.max_abs(); }

    /// max |entry(i,j) - conj(entry(j,i))| of the raw input.
    double input_asymmetry() const { return asymmetry_; }

    HermitianMatrix& operator+=(const HermitianMatrix& other);
    HermitianMatrix& operator-=(const HermitianMatrix& other);
    HermitianMatrix& operator*=(double s);

    friend HermitianMatrix operator+(HermitianMatrix a, const HermitianMatrix& b) { return a += b; }
    friend HermitianMatrix operator-(HermitianMatrix a, const HermitianMatrix& b) { return a -= b; }
    friend HermitianMatrix operator*(double s, HermitianMatrix a) { return a *= s; }

    /// a + s * identity.
    HermitianMatrix shifted(double s) const;

  private:
    struct AlreadySymmetric {};
    HermitianMatrix(ComplexMatrix m, AlreadySymmetric) : mat_(std::move(m)), asymmetry_(0.0) {}

    ComplexMatrix mat_;
    double asymmetry_;
};

/// Re(Tr[A B]) for Hermitian A, B of equal dimension.
double real_trace_product(const HermitianMatrix& a, const HermitianMatrix& b);

}  // namespace normcomp
