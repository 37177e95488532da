#pragma once

#include "normcomp/psd.hpp"

namespace normcomp {

/// Interpolation parameter alpha in [0, 1] of the power mean.
class MeanParameter {
  public:
    MeanParameter(double alpha);  // NOLINT: implicit by design, validates
    double value() const { return alpha_; }

  private:
    double alpha_;
};

struct GeometricMeanResult {
    PsdMatrix value;
    /// Set when singular inputs force the epsilon-regularized limit and the
    /// two regularized evaluations disagree by more than 1e-6 relative.
    bool extrapolation_flagged;
    double extrapolation_rel_diff;
};

/// A # B = A^{1/2} (A^{-1/2} B A^{-1/2})^{1/2} A^{1/2} for positive definite
/// inputs. Singular inputs are handled by evaluating at shifts eps and eps/4
/// (eps = 1e-6 * (1 + max trace)) and extrapolating linearly to zero shift.
GeometricMeanResult geometric_mean_ex(const PsdMatrix& a, const PsdMatrix& b);
PsdMatrix geometric_mean(const PsdMatrix& a, const PsdMatrix& b);

/// A #_alpha B = A^{1/2} (A^{-1/2} B A^{-1/2})^alpha A^{1/2}; alpha = 1/2 is
/// the geometric mean. A must be positive definite.
PsdMatrix power_mean(const PsdMatrix& a, const PsdMatrix& b, MeanParameter alpha);

/// Unique positive definite solution X of X A^{-1} X = B, i.e. A # B.
/// Verifies the residual ||X A^{-1} X - B||_F <= 1e-8 * (1 + ||B||_F) before
/// returning and throws ConditioningError otherwise.
PsdMatrix solve_riccati(const PsdMatrix& a, const PsdMatrix& b);

/// Thompson metric on the positive definite cone:
/// max(|log lambda_max(AB^{-1})|, |log lambda_min(AB^{-1})|), computed from
/// the spectrum of B^{-1/2} A B^{-1/2}.
double thompson_distance(const PsdMatrix& a, const PsdMatrix& b);

/// Prefix products of descending eigenvalues of A dominated by those of B
/// (compared in log space, log 0 = -inf), with equality of the full products
/// to relative tol when both are nonzero.
bool log_majorizes(const PsdMatrix& a, const PsdMatrix& b, double tol);

}  // namespace normcomp
