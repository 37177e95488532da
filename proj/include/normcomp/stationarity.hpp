#pragma once

#include <cstdint>
#include <optional>

#include "normcomp/means.hpp"
#include "normcomp/schatten.hpp"

namespace normcomp {

/// Exponent p in (-1, 1), p != 0, of the contraction map analysis
/// (p = q - 2 for the objective's q in (1, 2)).
class PowerParameter {
  public:
    PowerParameter(double p);  // NOLINT: implicit by design, validates
    double value() const { return p_; }

  private:
    double p_;
};

/// Distance scale below which per-step contraction ratios drown in roundoff.
/// One map application carries an absolute Thompson-metric error of up to
/// ~1e-11 (matrix powers at exponents down to -4 of condition ~20 inputs),
/// so ratios certified to a 1e-8 margin need the previous distance at or
/// above 1e-2.
inline constexpr double kRatioNoiseFloor = 1e-2;

/// Record of a fixed-point iteration: Thompson distances to the known fixed
/// point and per-step contraction ratios. Ratios are only recorded while the
/// previous distance exceeds kRatioNoiseFloor; below that they are noise.
struct IterationTrace {
    std::vector<double> distances;  // delta_inf(iterate_k, target), k = 0..steps
    std::vector<double> ratios;     // distances[k+1]/distances[k] where meaningful
    bool converged = false;
    std::size_t steps = 0;
    double beta_certified = 0.0;
    std::optional<PsdMatrix> final_iterate;

    double max_ratio() const;
    bool ratios_within_certificate(double margin = 1e-8) const;
};

/// G = D^{-1/2} C^2 D^{-1/2}; shares its spectrum with C D^{-1} C.
PsdMatrix gamma_of(const PsdMatrix& c, const PsdMatrix& d);

/// Objective f(D) = Tr(G + D)^q - Tr G^q - Tr D^q with G = gamma_of(C, D),
/// the norm decrease caused by pinching at the Schur-complement boundary.
double f_objective(const PsdMatrix& c, const PsdMatrix& d, double q);

/// Gradient of f at D:
/// q D^{-1/2} [ D((D+G)^{q-2} - D^{q-2})D - G((D+G)^{q-2} - G^{q-2})G ] D^{-1/2},
/// normalized so that d/dt f(D + tX)|_0 = Tr[X grad].
HermitianMatrix f_gradient(const PsdMatrix& c, const PsdMatrix& d, double q);

/// Scalar fixed-point map phi(x) = (((1+x)^p - 1)/((1+x)^p - x^p))^{1/2};
/// satisfies phi(1) = 1 and phi(1/x) = 1/phi(x).
double phi_scalar(double x, PowerParameter p);

/// h(x) = log phi(e^x): odd, increasing, with h(x)/x maximal at 0.
double h_scalar(double x, PowerParameter p);

/// Contraction factor beta_p = p / (2^{p+1} - 2), in (0, 1) on the domain.
/// Limits just outside it: 1/(2 ln 2) ~ 0.7213 as p -> 0, and 1/2 at p = 1.
double contraction_beta(PowerParameter p);

/// The map Phi_D(G):
///   p > 0: (D((D+G)^p - D^p)D) # ((D+G)^p - G^p)^{-1}
///   p < 0: (D(D^p - (D+G)^p)D) # (G^p - (D+G)^p)^{-1}
/// Fixed point G = D. Both geometric-mean arguments are positive definite in
/// exact arithmetic; roundoff-level violations are shifted, larger ones
/// abort with ConsistencyError.
PsdMatrix phi_map(const PsdMatrix& d, const PsdMatrix& g, PowerParameter p);

/// Iterate Phi_D from G0 until delta_inf(G_k, D) <= tol or max_steps.
/// The certified per-step ratio is contraction_beta(p).
IterationTrace iterate_phi(const PsdMatrix& d, const PsdMatrix& g0, PowerParameter p,
                           double tol = 1e-11, std::size_t max_steps = 200,
                           bool keep_final = true);

/// The map Psi_A(X) = A (X^q # A^{-q-2}) A for q in [0, 2); fixed point
/// X = A, certified ratio q/2.
PsdMatrix psi_map(const PsdMatrix& a, const PsdMatrix& x, double q);

/// Iterate Psi_A from X0; on convergence verifies the equation residual
/// ||A X^q A - X A^q X||_F <= 1e-7 * (1 + ||A||_F^{q+2}).
IterationTrace iterate_psi(const PsdMatrix& a, const PsdMatrix& x0, double q,
                           double tol = 1e-11, std::size_t max_steps = 200,
                           bool keep_final = true);

struct BMaximizationReport {
    std::size_t trials = 0;
    /// min over trials and t of [g(0) - g(t)], where g(t) is the pinching
    /// norm decrease at B = B0 + t Delta; nonnegative up to roundoff.
    double worst_slack = 0.0;
    std::uint64_t worst_seed = 0;
    double worst_t = 0.0;
    bool satisfied = false;
};

/// Samples the claim that the pinching norm decrease is maximal at
/// B = B0 = C D^{-1} C: draws `trials` random PSD increments Delta and
/// checks g(0) >= g(t) - 1e-9 at t in {0.1, 0.5, 1, 2}.
BMaximizationReport maximize_over_B_check(const PsdMatrix& c, const PsdMatrix& d, double q,
                                          std::size_t trials, std::uint64_t seed = 20240u);

}  // namespace normcomp
