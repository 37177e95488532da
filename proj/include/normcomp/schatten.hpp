#pragma once

#include "normcomp/psd.hpp"

namespace normcomp {

/// Schatten exponent q. Capped at 64: beyond that sigma^q overflows double
/// precision already for sigma ~ 2.
class SchattenExponent {
  public:
    SchattenExponent(double q);  // NOLINT: implicit by design, validates
    double value() const { return q_; }

  private:
    double q_;
};

/// Singular values of a general (possibly rectangular) matrix, descending,
/// computed from the smaller Gram matrix with negative clamping at zero.
std::vector<double> singular_values(const ComplexMatrix& m);

/// ||M||_q = (sum sigma_i^q)^{1/q}.
double schatten_norm(const ComplexMatrix& m, SchattenExponent q);

/// ||M||_q^q = sum sigma_i^q, computed directly (no root/power round trip).
double schatten_norm_q_power(const ComplexMatrix& m, SchattenExponent q);

/// Tr A^q for PSD `a` via its cached spectrum.
double trace_power(const PsdMatrix& a, double q);

/// Tr H^q for a Hermitian matrix expected PSD up to roundoff: eigenvalues in
/// [-psd_tol, 0) count as 0, below that the call throws.
double trace_power_psd(const HermitianMatrix& h, double q);

}  // namespace normcomp
