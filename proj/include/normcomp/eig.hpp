#pragma once

#include <vector>

#include "normcomp/matrix.hpp"

namespace normcomp {

/// Eigendecomposition of a Hermitian matrix: real eigenvalues in ascending
/// order and a unitary matrix whose columns are the matching eigenvectors.
struct SpectralDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix vectors;

    /// V * diag(eigenvalues) * V^*.
    HermitianMatrix reconstruct() const;

    /// V * diag(f(lambda_i)) * V^* for an arbitrary spectral map.
    HermitianMatrix apply(const std::vector<double>& mapped) const;

    /// max-entry error of V^* V against the identity.
    double unitarity_error() const;

    /// max-entry error of V diag(lambda) V^* against `input`.
    double reconstruction_error(const HermitianMatrix& input) const;
};

/// Cyclic complex Jacobi eigensolver. Deterministic: rotations sweep the
/// upper triangle in row-major order; converged when the off-diagonal
/// Frobenius mass falls below 1e-14 * (1 + ||H||_F). Throws ConvergenceError
/// (carrying the residual off-diagonal norm) after 64 sweeps.
SpectralDecomposition eig_hermitian(const HermitianMatrix& h);

}  // namespace normcomp
