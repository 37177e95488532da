#include "normcomp/means.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace normcomp {

namespace {

void require_pd(const PsdMatrix& m, const char* what) {
    if (!m.is_positive_definite())
        throw SingularityError(std::string(what) + ": argument not positive definite (min "
                               "eigenvalue " + std::to_string(m.min_eigenvalue()) + ")");
}

/// A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}, positive definite A.
PsdMatrix conjugated_power(const PsdMatrix& a, const PsdMatrix& b, double alpha) {
    const HermitianMatrix root = matrix_power(a, 0.5);
    const HermitianMatrix inv_root = matrix_power(a, -0.5);
    const HermitianMatrix middle(inv_root.matrix() * b.matrix() * inv_root.matrix());
    const HermitianMatrix powered = matrix_power(PsdMatrix(middle), alpha);
    return PsdMatrix(HermitianMatrix(root.matrix() * powered.matrix() * root.matrix()));
}

}  // namespace

MeanParameter::MeanParameter(double alpha) : alpha_(alpha) {
    if (!std::isfinite(alpha) || alpha < 0.0 || alpha > 1.0)
        throw ValidationError("MeanParameter: alpha must lie in [0, 1], got " +
                              std::to_string(alpha));
}

GeometricMeanResult geometric_mean_ex(const PsdMatrix& a, const PsdMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("geometric_mean: dimension mismatch");
    if (a.is_positive_definite() && b.is_positive_definite())
        return {conjugated_power(a, b, 0.5), false, 0.0};

    const double eps = 1e-6 * (1.0 + std::max(a.trace(), b.trace()));
    const PsdMatrix g1 = conjugated_power(PsdMatrix(a.hermitian().shifted(eps)),
                                          PsdMatrix(b.hermitian().shifted(eps)), 0.5);
    const PsdMatrix g2 = conjugated_power(PsdMatrix(a.hermitian().shifted(eps / 4.0)),
                                          PsdMatrix(b.hermitian().shifted(eps / 4.0)), 0.5);
    // Linear extrapolation through (eps, g1) and (eps/4, g2) to shift zero.
    HermitianMatrix extrap = g2.hermitian();
    extrap *= 4.0 / 3.0;
    HermitianMatrix third = g1.hermitian();
    third *= 1.0 / 3.0;
    extrap -= third;
    const double rel_diff =
        (g1.hermitian() - g2.hermitian()).frobenius_norm() /
        (1.0 + g2.hermitian().frobenius_norm());
    return {PsdMatrix(extrap), rel_diff > 1e-6, rel_diff};
}

PsdMatrix geometric_mean(const PsdMatrix& a, const PsdMatrix& b) {
    return geometric_mean_ex(a, b).value;
}

PsdMatrix power_mean(const PsdMatrix& a, const PsdMatrix& b, MeanParameter alpha) {
    if (a.dim() != b.dim()) throw DimensionError("power_mean: dimension mismatch");
    require_pd(a, "power_mean");
    return conjugated_power(a, b, alpha.value());
}

PsdMatrix solve_riccati(const PsdMatrix& a, const PsdMatrix& b) {
    require_pd(a, "solve_riccati");
    require_pd(b, "solve_riccati");
    const PsdMatrix x = geometric_mean(a, b);
    const HermitianMatrix a_inv = matrix_power(a, -1.0);
    const ComplexMatrix lhs = x.matrix() * a_inv.matrix() * x.matrix();
    const double residual = (lhs - b.matrix()).frobenius_norm();
    const double allowed = 1e-8 * (1.0 + b.hermitian().frobenius_norm());
    if (residual > allowed)
        throw ConditioningError("solve_riccati: residual " + std::to_string(residual) +
                                    " exceeds " + std::to_string(allowed),
                                residual);
    return x;
}

double thompson_distance(const PsdMatrix& a, const PsdMatrix& b) {
    if (a.dim() != b.dim()) throw DimensionError("thompson_distance: dimension mismatch");
    require_pd(a, "thompson_distance");
    require_pd(b, "thompson_distance");
    const HermitianMatrix b_inv_root = matrix_power(b, -0.5);
    const HermitianMatrix m(b_inv_root.matrix() * a.matrix() * b_inv_root.matrix());
    const SpectralDecomposition dec = eig_hermitian(m);
    const double lo = dec.eigenvalues.front();
    const double hi = dec.eigenvalues.back();
    if (lo <= 0.0)
        throw SingularityError("thompson_distance: nonpositive relative spectrum");
    return std::max(std::abs(std::log(hi)), std::abs(std::log(lo)));
}

bool log_majorizes(const PsdMatrix& a, const PsdMatrix& b, double tol) {
    if (a.dim() != b.dim()) throw DimensionError("log_majorizes: dimension mismatch");
    const std::size_t n = a.dim();
    const double log_slack = std::log1p(tol);
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();
    double prefix_a = 0.0, prefix_b = 0.0;
    bool a_zero = false, b_zero = false;
    for (std::size_t k = 0; k < n; ++k) {
        // Descending order: the spectral eigenvalues are ascending.
        const double la = a.spectral().eigenvalues[n - 1 - k];
        const double lb = b.spectral().eigenvalues[n - 1 - k];
        if (la <= 0.0) a_zero = true;
        if (lb <= 0.0) b_zero = true;
        prefix_a = a_zero ? kNegInf : prefix_a + std::log(la);
        prefix_b = b_zero ? kNegInf : prefix_b + std::log(lb);
        if (a_zero) continue;  // -inf <= anything
        if (b_zero) return false;
        if (prefix_a > prefix_b + log_slack) return false;
    }
    // Equality of full products, required only when both are nonzero.
    if (!a_zero && !b_zero && std::abs(prefix_a - prefix_b) > log_slack) return false;
    return true;
}

}  // namespace normcomp
