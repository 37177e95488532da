#pragma once

#include "normcomp/eig.hpp"
#include "normcomp/matrix.hpp"

namespace normcomp {

/// Positive semidefinite matrix. Construction eigendecomposes the input:
/// eigenvalues in [-psd_tol, 0) are clamped to 0 (and the matrix rebuilt),
/// anything below -psd_tol is rejected, where
/// psd_tol = 1e-10 * (1 + spectral radius). The decomposition is kept, so
/// spectral functions of a PsdMatrix cost no further eigensolves.
class PsdMatrix {
  public:
    explicit PsdMatrix(const HermitianMatrix& h);

    static PsdMatrix identity(std::size_t n);
    static PsdMatrix diagonal(const std::vector<double>& d);

    std::size_t dim() const { return inner_.dim(); }
    const HermitianMatrix& hermitian() const { return inner_; }
    const ComplexMatrix& matrix() const { return inner_.matrix(); }
    const SpectralDecomposition& spectral() const { return eig_; }

    /// Smallest eigenvalue of the input, before clamping.
    double min_eigenvalue() const { return min_eigenvalue_; }
    /// Clamping/positivity tolerance used at construction.
    double psd_tol() const { return psd_tol_; }
    double trace() const { return inner_.trace(); }

    bool is_positive_definite() const;

  private:
    HermitianMatrix inner_;
    SpectralDecomposition eig_;
    double min_eigenvalue_;
    double psd_tol_;
};

/// Spectral power A^p = V diag(lambda_i^p) V^*. Zero eigenvalues map to 0
/// for p > 0; p < 0 requires every eigenvalue above psd_tol and throws
/// SingularityError naming the offending eigenvalue index otherwise.
HermitianMatrix matrix_power(const PsdMatrix& a, double p);

/// matrix_power wrapped back into the cone (clamps roundoff negatives).
PsdMatrix psd_power(const PsdMatrix& a, double p);

struct PolarDecomposition {
    ComplexMatrix unitary;  // U, square unitary
    PsdMatrix factor;       // P = (C^* C)^{1/2}
};

/// Polar decomposition C = U P of a square matrix. For rank-deficient C the
/// partial isometry is completed to a unitary by deterministic Gram-Schmidt
/// over the canonical basis vectors.
PolarDecomposition polar_decompose(const ComplexMatrix& c);

}  // namespace normcomp
