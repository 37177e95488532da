#include "normcomp/psd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace normcomp {

PsdMatrix::PsdMatrix(const HermitianMatrix& h) : inner_(h), eig_(eig_hermitian(h)) {
    double radius = 0.0;
    for (double lam : eig_.eigenvalues) radius = std::max(radius, std::abs(lam));
    psd_tol_ = 1e-10 * (1.0 + radius);
    min_eigenvalue_ = eig_.eigenvalues.empty() ? 0.0 : eig_.eigenvalues.front();
    if (min_eigenvalue_ < -psd_tol_)
        throw ValidationError("PsdMatrix: eigenvalue " + std::to_string(min_eigenvalue_) +
                              " below -psd_tol = " + std::to_string(-psd_tol_));
    bool clamped = false;
    for (double& lam : eig_.eigenvalues)
        if (lam < 0.0) {
            lam = 0.0;
            clamped = true;
        }
    if (clamped) inner_ = eig_.reconstruct();
}

PsdMatrix PsdMatrix::identity(std::size_t n) { return PsdMatrix(HermitianMatrix::identity(n)); }

PsdMatrix PsdMatrix::diagonal(const std::vector<double>& d) {
    return PsdMatrix(HermitianMatrix::diagonal(d));
}

bool PsdMatrix::is_positive_definite() const {
    return !eig_.eigenvalues.empty() && eig_.eigenvalues.front() > psd_tol_;
}

HermitianMatrix matrix_power(const PsdMatrix& a, double p) {
    const auto& lam = a.spectral().eigenvalues;
    std::vector<double> mapped(lam.size());
    for (std::size_t i = 0; i < lam.size(); ++i) {
        if (p < 0.0 && lam[i] <= a.psd_tol())
            throw SingularityError("matrix_power: negative power of singular matrix (eigenvalue " +
                                   std::to_string(i) + " = " + std::to_string(lam[i]) + ")");
        mapped[i] = (lam[i] == 0.0 && p > 0.0) ? 0.0 : std::pow(lam[i], p);
    }
    return a.spectral().apply(mapped);
}

PsdMatrix psd_power(const PsdMatrix& a, double p) { return PsdMatrix(matrix_power(a, p)); }

PolarDecomposition polar_decompose(const ComplexMatrix& c) {
    if (!c.is_square()) throw DimensionError("polar_decompose: matrix not square");
    ensure_finite(c, "polar_decompose");
    const std::size_t n = c.rows();

    // P = (C^* C)^{1/2} through the Gram matrix spectrum.
    const PsdMatrix gram{HermitianMatrix(c.adjoint() * c)};
    const auto& lam = gram.spectral().eigenvalues;
    const ComplexMatrix& w = gram.spectral().vectors;
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) sigma[i] = std::sqrt(lam[i]);
    const PsdMatrix p{gram.spectral().apply(sigma)};

    // Left singular vectors u_i = C w_i / sigma_i where sigma_i is
    // significant; remaining columns completed below.
    const double sigma_tol = 1e-12 * (1.0 + (sigma.empty() ? 0.0 : sigma.back()));
    ComplexMatrix u_cols(n, n);
    std::vector<bool> have(n, false);
    const ComplexMatrix cw = c * w;
    for (std::size_t k = 0; k < n; ++k) {
        if (sigma[k] <= sigma_tol) continue;
        for (std::size_t i = 0; i < n; ++i) u_cols(i, k) = cw(i, k) / sigma[k];
        have[k] = true;
    }

    // Complete the kernel columns: scan canonical basis vectors in order and
    // take the first whose residual against the accepted columns is
    // non-negligible (max residual over the basis is always >= 1/sqrt(n)).
    for (std::size_t k = 0; k < n; ++k) {
        if (have[k]) continue;
        for (std::size_t e = 0; e < n; ++e) {
            std::vector<Complex> v(n, Complex(0.0, 0.0));
            v[e] = 1.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!have[j]) continue;
                Complex proj = 0.0;
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(u_cols(i, j)) * v[i];
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * u_cols(i, j);
            }
            double norm2 = 0.0;
            for (const Complex& z : v) norm2 += std::norm(z);
            const double norm = std::sqrt(norm2);
            if (norm < 0.5 / std::sqrt(static_cast<double>(n))) continue;
            for (std::size_t i = 0; i < n; ++i) u_cols(i, k) = v[i] / norm;
            have[k] = true;
            break;
        }
        if (!have[k])
            throw ConsistencyError("polar_decompose: failed to complete unitary basis");
    }

    return {u_cols * w.adjoint(), p};
}

}  // namespace normcomp
