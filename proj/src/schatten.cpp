#include "normcomp/schatten.hpp"

#include <algorithm>
#include <cmath>

namespace normcomp {

SchattenExponent::SchattenExponent(double q) : q_(q) {
    if (!std::isfinite(q) || q < 1.0 || q > 64.0)
        throw ValidationError("SchattenExponent: q must lie in [1, 64], got " +
                              std::to_string(q));
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    ensure_finite(m, "singular_values");
    // Gram matrix of the smaller side.
    const ComplexMatrix gram =
        (m.rows() <= m.cols()) ? m * m.adjoint() : m.adjoint() * m;
    const SpectralDecomposition dec = eig_hermitian(HermitianMatrix(gram));
    std::vector<double> sigma(dec.eigenvalues.size());
    for (std::size_t i = 0; i < sigma.size(); ++i) {
        const double lam = dec.eigenvalues[sigma.size() - 1 - i];
        sigma[i] = lam > 0.0 ? std::sqrt(lam) : 0.0;
    }
    return sigma;
}

double schatten_norm(const ComplexMatrix& m, SchattenExponent q) {
    const double s = schatten_norm_q_power(m, q);
    return s == 0.0 ? 0.0 : std::pow(s, 1.0 / q.value());
}

double schatten_norm_q_power(const ComplexMatrix& m, SchattenExponent q) {
    double s = 0.0;
    for (double sigma : singular_values(m)) s += std::pow(sigma, q.value());
    return s;
}

double trace_power(const PsdMatrix& a, double q) {
    double s = 0.0;
    for (double lam : a.spectral().eigenvalues)
        if (lam > 0.0) s += std::pow(lam, q);
    return s;
}

double trace_power_psd(const HermitianMatrix& h, double q) {
    return trace_power(PsdMatrix(h), q);
}

}  // namespace normcomp
