#include "normcomp/stationarity.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "normcomp/random.hpp"

namespace normcomp {

namespace {

void require_pd(const PsdMatrix& m, const char* what) {
    if (!m.is_positive_definite())
        throw SingularityError(std::string(what) + ": argument not positive definite (min "
                               "eigenvalue " + std::to_string(m.min_eigenvalue()) + ")");
}

void require_q_interior(double q, const char* what) {
    if (!(q > 1.0 && q < 2.0))
        throw ValidationError(std::string(what) + ": q must lie in (1, 2), got " +
                              std::to_string(q));
}

/// Wraps a Hermitian matrix that is positive definite in exact arithmetic.
/// Roundoff-level indefiniteness (min eigenvalue below 1e-12 but above -1e-9)
/// is lifted to a strictly positive floor; anything worse aborts.
PsdMatrix guarded_pd(const HermitianMatrix& h, const char* what) {
    PsdMatrix first(h);
    const double lam_min = first.min_eigenvalue();
    if (lam_min <= -1e-9)
        throw ConsistencyError(std::string(what) + ": numerical breakdown, min eigenvalue " +
                               std::to_string(lam_min));
    const double floor = 1e-12 * (1.0 + std::abs(h.trace()));
    if (lam_min >= floor) return first;
    return PsdMatrix(h.shifted(floor - std::min(lam_min, 0.0)));
}

HermitianMatrix sandwich(const HermitianMatrix& outer, const HermitianMatrix& middle) {
    return HermitianMatrix(outer.matrix() * middle.matrix() * outer.matrix());
}

}  // namespace

PowerParameter::PowerParameter(double p) : p_(p) {
    if (!std::isfinite(p) || p <= -1.0 || p >= 1.0 || p == 0.0)
        throw ValidationError("PowerParameter: p must lie in (-1, 1) \\ {0}, got " +
                              std::to_string(p));
}

double IterationTrace::max_ratio() const {
    double m = 0.0;
    for (double r : ratios) m = std::max(m, r);
    return m;
}

bool IterationTrace::ratios_within_certificate(double margin) const {
    for (double r : ratios)
        if (r > beta_certified + margin) return false;
    return true;
}

PsdMatrix gamma_of(const PsdMatrix& c, const PsdMatrix& d) {
    if (c.dim() != d.dim()) throw DimensionError("gamma_of: dimension mismatch");
    require_pd(d, "gamma_of");
    const HermitianMatrix d_inv_root = matrix_power(d, -0.5);
    const HermitianMatrix c_sq(c.matrix() * c.matrix());
    return PsdMatrix(sandwich(d_inv_root, c_sq));
}

double f_objective(const PsdMatrix& c, const PsdMatrix& d, double q) {
    require_q_interior(q, "f_objective");
    const PsdMatrix g = gamma_of(c, d);
    const PsdMatrix sum(g.hermitian() + d.hermitian());
    return trace_power(sum, q) - trace_power(g, q) - trace_power(d, q);
}

HermitianMatrix f_gradient(const PsdMatrix& c, const PsdMatrix& d, double q) {
    require_q_interior(q, "f_gradient");
    require_pd(d, "f_gradient");
    const PsdMatrix g = gamma_of(c, d);
    if (!g.is_positive_definite())
        throw SingularityError("f_gradient: G = D^{-1/2} C^2 D^{-1/2} is singular; q - 2 < 0 "
                               "needs positive definite G");
    const double p = q - 2.0;
    const PsdMatrix sum(g.hermitian() + d.hermitian());
    const HermitianMatrix sum_p = matrix_power(sum, p);
    const HermitianMatrix d_term = sandwich(d.hermitian(), sum_p - matrix_power(d, p));
    const HermitianMatrix g_term = sandwich(g.hermitian(), sum_p - matrix_power(g, p));
    const HermitianMatrix d_inv_root = matrix_power(d, -0.5);
    HermitianMatrix grad = sandwich(d_inv_root, d_term - g_term);
    grad *= q;
    return grad;
}

double phi_scalar(double x, PowerParameter p) {
    if (!(x > 0.0)) throw ValidationError("phi_scalar: x must be positive");
    // Numerator and denominator flip sign together for p < 0, the ratio
    // stays positive.
    const double num = std::pow(1.0 + x, p.value()) - 1.0;
    const double den = std::pow(1.0 + x, p.value()) - std::pow(x, p.value());
    return std::sqrt(num / den);
}

double h_scalar(double x, PowerParameter p) { return std::log(phi_scalar(std::exp(x), p)); }

double contraction_beta(PowerParameter p) {
    return p.value() / (std::pow(2.0, p.value() + 1.0) - 2.0);
}

PsdMatrix phi_map(const PsdMatrix& d, const PsdMatrix& g, PowerParameter p) {
    if (d.dim() != g.dim()) throw DimensionError("phi_map: dimension mismatch");
    require_pd(d, "phi_map");
    require_pd(g, "phi_map");
    const double pv = p.value();
    const PsdMatrix sum(d.hermitian() + g.hermitian());
    const HermitianMatrix sum_p = matrix_power(sum, pv);
    const HermitianMatrix d_p = matrix_power(d, pv);
    const HermitianMatrix g_p = matrix_power(g, pv);

    HermitianMatrix left_inner = (pv > 0.0) ? sum_p - d_p : d_p - sum_p;
    HermitianMatrix right_inner = (pv > 0.0) ? sum_p - g_p : g_p - sum_p;
    const PsdMatrix left = guarded_pd(sandwich(d.hermitian(), left_inner), "phi_map");
    const PsdMatrix right_base = guarded_pd(right_inner, "phi_map");
    // Invert through the decomposition; the guard made every eigenvalue
    // strictly positive, but possibly far below the radius-relative psd_tol
    // that matrix_power(.,  -1) would insist on.
    std::vector<double> inv_lam(right_base.spectral().eigenvalues.size());
    for (std::size_t i = 0; i < inv_lam.size(); ++i) {
        const double lam = right_base.spectral().eigenvalues[i];
        if (!(lam > 0.0)) throw ConsistencyError("phi_map: guarded argument lost positivity");
        inv_lam[i] = 1.0 / lam;
    }
    const PsdMatrix right(right_base.spectral().apply(inv_lam));
    return geometric_mean(left, right);
}

namespace {

IterationTrace run_iteration(const PsdMatrix& target, PsdMatrix iterate, double beta,
                             double tol, std::size_t max_steps, bool keep_final,
                             const std::function<PsdMatrix(const PsdMatrix&)>& step) {
    if (!(tol > 0.0)) throw ValidationError("iteration: tol must be positive");
    IterationTrace trace;
    trace.beta_certified = beta;
    double dist = thompson_distance(iterate, target);
    trace.distances.push_back(dist);
    while (dist > tol && trace.steps < max_steps) {
        iterate = step(iterate);
        const double next = thompson_distance(iterate, target);
        if (dist > kRatioNoiseFloor) trace.ratios.push_back(next / dist);
        dist = next;
        trace.distances.push_back(dist);
        ++trace.steps;
    }
    trace.converged = dist <= tol;
    if (keep_final) trace.final_iterate = std::move(iterate);
    return trace;
}

}  // namespace

IterationTrace iterate_phi(const PsdMatrix& d, const PsdMatrix& g0, PowerParameter p,
                           double tol, std::size_t max_steps, bool keep_final) {
    return run_iteration(d, g0, contraction_beta(p), tol, max_steps, keep_final,
                         [&](const PsdMatrix& g) { return phi_map(d, g, p); });
}

PsdMatrix psi_map(const PsdMatrix& a, const PsdMatrix& x, double q) {
    if (a.dim() != x.dim()) throw DimensionError("psi_map: dimension mismatch");
    if (!(q >= 0.0 && q < 2.0))
        throw ValidationError("psi_map: q must lie in [0, 2), got " + std::to_string(q));
    require_pd(a, "psi_map");
    require_pd(x, "psi_map");
    const PsdMatrix x_q(matrix_power(x, q));
    const PsdMatrix a_neg(matrix_power(a, -q - 2.0));
    const PsdMatrix mean = geometric_mean(x_q, a_neg);
    return PsdMatrix(sandwich(a.hermitian(), mean.hermitian()));
}

IterationTrace iterate_psi(const PsdMatrix& a, const PsdMatrix& x0, double q, double tol,
                           std::size_t max_steps, bool keep_final) {
    IterationTrace trace =
        run_iteration(a, x0, q / 2.0, tol, max_steps, /*keep_final=*/true,
                      [&](const PsdMatrix& x) { return psi_map(a, x, q); });
    if (trace.converged) {
        // Residual of A X^q A = X A^q X at the converged iterate.
        const PsdMatrix& x = *trace.final_iterate;
        const HermitianMatrix x_q = matrix_power(x, q);
        const HermitianMatrix a_q = matrix_power(a, q);
        const ComplexMatrix lhs = a.matrix() * x_q.matrix() * a.matrix();
        const ComplexMatrix rhs = x.matrix() * a_q.matrix() * x.matrix();
        const double residual = (lhs - rhs).frobenius_norm();
        const double allowed =
            1e-7 * (1.0 + std::pow(a.hermitian().frobenius_norm(), q + 2.0));
        if (residual > allowed)
            throw ConditioningError("iterate_psi: equation residual " +
                                        std::to_string(residual) + " exceeds " +
                                        std::to_string(allowed),
                                    residual);
    }
    if (!keep_final) trace.final_iterate.reset();
    return trace;
}

BMaximizationReport maximize_over_B_check(const PsdMatrix& c, const PsdMatrix& d, double q,
                                          std::size_t trials, std::uint64_t seed) {
    require_q_interior(q, "maximize_over_B_check");
    require_pd(d, "maximize_over_B_check");
    const std::size_t n = c.dim();
    const HermitianMatrix d_inv = matrix_power(d, -1.0);
    const HermitianMatrix b0(c.matrix() * d_inv.matrix() * c.matrix());

    // g(B) = Tr M(B)^q - Tr(B \oplus D)^q with M(B) = [[B, C],[C, D]].
    const auto pinch_decrease = [&](const HermitianMatrix& b) {
        ComplexMatrix m(2 * n, 2 * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = b(i, j);
                m(i, n + j) = c.matrix()(i, j);
                m(n + i, j) = c.matrix()(i, j);
                m(n + i, n + j) = d.matrix()(i, j);
            }
        const double full = trace_power_psd(HermitianMatrix(m), q);
        return full - trace_power_psd(b, q) - trace_power(d, q);
    };

    const double base = pinch_decrease(b0);
    static constexpr double kScales[] = {0.1, 0.5, 1.0, 2.0};

    BMaximizationReport report;
    report.trials = trials;
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (std::size_t trial = 0; trial < trials; ++trial) {
        const std::uint64_t trial_seed = derive_seed(seed, 0, trial);
        const PsdMatrix delta = random_psd({n, n, 1.0, trial_seed});
        for (double t : kScales) {
            HermitianMatrix shifted_b = delta.hermitian();
            shifted_b *= t;
            shifted_b += b0;
            const double slack = base - pinch_decrease(shifted_b);
            if (slack < report.worst_slack) {
                report.worst_slack = slack;
                report.worst_seed = trial_seed;
                report.worst_t = t;
            }
        }
    }
    if (trials == 0) report.worst_slack = 0.0;
    report.satisfied = report.worst_slack >= -1e-9;
    return report;
}

}  // namespace normcomp
