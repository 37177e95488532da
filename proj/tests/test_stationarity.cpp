#include <doctest.h>

#include <cmath>

#include "normcomp/random.hpp"
#include "normcomp/stationarity.hpp"

using namespace normcomp;

namespace {

// independent oracle: f from the explicit 2d x 2d block matrix with
// B = C D^{-1} C
double f_block_oracle(const PsdMatrix& c, const PsdMatrix& d, double q) {
    const std::size_t n = c.dim();
    const HermitianMatrix d_inv = matrix_power(d, -1.0);
    const HermitianMatrix b0(c.matrix() * d_inv.matrix() * c.matrix());
    ComplexMatrix m(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = b0(i, j);
            m(i, n + j) = c.matrix()(i, j);
            m(n + i, j) = c.matrix()(i, j);
            m(n + i, n + j) = d.matrix()(i, j);
        }
    return trace_power_psd(HermitianMatrix(m), q) - trace_power_psd(b0, q) - trace_power(d, q);
}

double fd_directional(const PsdMatrix& c, const PsdMatrix& d, const HermitianMatrix& x,
                      double q, double step) {
    HermitianMatrix forward = x;
    forward *= step;
    forward += d.hermitian();
    HermitianMatrix backward = x;
    backward *= -step;
    backward += d.hermitian();
    return (f_objective(c, PsdMatrix(forward), q) - f_objective(c, PsdMatrix(backward), q)) /
           (2.0 * step);
}

}  // namespace

TEST_SUITE_BEGIN("stationarity");

TEST_CASE("power parameter validation") {
    CHECK_THROWS_AS(PowerParameter{0.0}, ValidationError);
    CHECK_THROWS_AS(PowerParameter{1.0}, ValidationError);
    CHECK_THROWS_AS(PowerParameter{-1.0}, ValidationError);
    CHECK(PowerParameter{-0.5}.value() == -0.5);
}

TEST_CASE("gamma_of: fixed points and similarity to C D^{-1} C") {
    const PsdMatrix c = random_positive_definite(3, 1);
    CHECK(max_abs_diff(gamma_of(c, c).matrix(), c.matrix()) <= 1e-9 * (1.0 + c.hermitian().max_abs()));

    const PsdMatrix id = PsdMatrix::identity(3);
    const ComplexMatrix c_sq = c.matrix() * c.matrix();
    CHECK(max_abs_diff(gamma_of(c, id).matrix(), c_sq) <= 1e-10 * (1.0 + c_sq.max_abs()));

    const PsdMatrix d = random_positive_definite(3, 2);
    const PsdMatrix g = gamma_of(c, d);
    const HermitianMatrix cdc(c.matrix() * matrix_power(d, -1.0).matrix() * c.matrix());
    const auto spec_g = g.spectral().eigenvalues;
    const auto spec_cdc = eig_hermitian(cdc).eigenvalues;
    for (std::size_t i = 0; i < spec_g.size(); ++i)
        CHECK(spec_g[i] == doctest::Approx(spec_cdc[i]).epsilon(1e-9));
}

TEST_CASE("objective: closed forms and block-matrix oracle") {
    for (double q : {1.2, 1.5, 1.8}) {
        const double expected = 3.0 * (std::pow(2.0, q) - 2.0);
        CHECK(f_objective(PsdMatrix::identity(3), PsdMatrix::identity(3), q) ==
              doctest::Approx(expected).epsilon(1e-12));
    }

    SplitMix64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + (rng.next_u64() % 3);
        const PsdMatrix c = random_positive_definite(n, rng.next_u64());
        const double q = 1.1 + 0.8 * rng.next_double();
        // f(C) = (2^q - 2) Tr C^q is the claimed maximum
        CHECK(f_objective(c, c, q) ==
              doctest::Approx((std::pow(2.0, q) - 2.0) * trace_power(c, q)).epsilon(1e-9));

        const PsdMatrix d = random_positive_definite(n, rng.next_u64());
        const double direct = f_objective(c, d, q);
        CHECK(direct >= -1e-10);
        CHECK(direct == doctest::Approx(f_block_oracle(c, d, q)).epsilon(1e-8));
    }
}

TEST_CASE("gradient: stationarity at D = C") {
    for (double q : {1.1, 1.3, 1.5, 1.7, 1.9}) {
        const PsdMatrix c = random_positive_definite(3, 17);
        const HermitianMatrix grad = f_gradient(c, c, q);
        CHECK(grad.frobenius_norm() <=
              1e-8 * (1.0 + std::pow(c.hermitian().frobenius_norm(), q)));
    }
}

TEST_CASE("gradient: singular inputs are rejected") {
    const PsdMatrix d = random_positive_definite(2, 18);
    const PsdMatrix singular_c = PsdMatrix::diagonal({1.0, 0.0});
    CHECK_THROWS_AS(f_gradient(singular_c, d, 1.5), SingularityError);  // G singular
    CHECK_THROWS_AS(f_gradient(d, singular_c, 1.5), SingularityError);  // D singular
}

TEST_CASE("gradient: finite-difference oracle, scalar and matrix") {
    // scalar case first: C = 1, D = 2, q = 1.5
    const PsdMatrix c1 = PsdMatrix::diagonal({1.0});
    const PsdMatrix d2 = PsdMatrix::diagonal({2.0});
    const HermitianMatrix g_scalar = f_gradient(c1, d2, 1.5);
    const double fd_scalar = fd_directional(c1, d2, HermitianMatrix::identity(1), 1.5, 1e-5);
    CHECK(g_scalar(0, 0).real() ==
          doctest::Approx(fd_scalar).epsilon(1e-6));

    SplitMix64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 2 + (rng.next_u64() % 3);
        const PsdMatrix c = random_positive_definite(n, rng.next_u64());
        const PsdMatrix d = random_positive_definite(n, rng.next_u64());
        const double q = 1.1 + 0.8 * rng.next_double();
        const HermitianMatrix x = random_hermitian(n, rng.next_u64());
        const double analytic = real_trace_product(x, f_gradient(c, d, q));
        const double numeric = fd_directional(c, d, x, q, 1e-5);
        CHECK(std::abs(analytic - numeric) / (1.0 + std::abs(analytic)) <= 1e-6);
    }
}

TEST_CASE("phi scalar: fixed point, inversion symmetry, closed form") {
    for (double p : {-0.9, -0.5, 0.5, 0.9}) {
        CHECK(phi_scalar(1.0, p) == doctest::Approx(1.0).epsilon(1e-14));
        for (double x : {0.1, 0.5, 2.0, 10.0})
            CHECK(phi_scalar(1.0 / x, p) * phi_scalar(x, p) ==
                  doctest::Approx(1.0).epsilon(1e-12));
    }
    const double s5 = std::sqrt(5.0);
    CHECK(phi_scalar(4.0, 0.5) ==
          doctest::Approx(std::sqrt((s5 - 1.0) / (s5 - 2.0))).epsilon(1e-13));
}

TEST_CASE("contraction beta") {
    CHECK(contraction_beta(-0.5) == doctest::Approx(0.5 / (2.0 - std::sqrt(2.0))).epsilon(1e-13));
    CHECK(contraction_beta(-0.5) == doctest::Approx(0.85355339).epsilon(1e-7));
    for (double p : {-0.9, -0.3, 0.2, 0.7}) {
        const double beta = contraction_beta(p);
        CHECK(beta > 0.0);
        CHECK(beta < 1.0);
    }
}

TEST_CASE("h is odd and maximizes h(x)/x at the origin") {
    for (double p : {-0.7, -0.3, 0.4, 0.8}) {
        const double beta = contraction_beta(p);
        for (double x : {0.05, 0.3, 1.0, 2.5}) {
            CHECK(h_scalar(-x, p) == doctest::Approx(-h_scalar(x, p)).epsilon(1e-12));
            CHECK(h_scalar(x, p) / x <= beta + 1e-10);
        }
    }
}

TEST_CASE("phi map: fixed point, scalar reduction, Lemma bound") {
    const PsdMatrix d = random_positive_definite(3, 23);
    for (double p : {-0.5, 0.5}) {
        const PsdMatrix mapped = phi_map(d, d, p);
        CHECK(max_abs_diff(mapped.matrix(), d.matrix()) <=
              1e-8 * (1.0 + d.hermitian().max_abs()));
    }

    for (double p : {-0.8, -0.5, 0.3, 0.7}) {
        for (double x : {0.2, 1.5, 6.0}) {
            const PsdMatrix mapped =
                phi_map(PsdMatrix::diagonal({1.0}), PsdMatrix::diagonal({x}), p);
            CHECK(mapped.matrix()(0, 0).real() ==
                  doctest::Approx(phi_scalar(x, p)).epsilon(1e-12));
        }
    }

    // G <= k D implies Phi_D(G) <= phi(k) D
    SplitMix64 rng(29);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + (rng.next_u64() % 2);
        const PsdMatrix d_rand = random_positive_definite(n, rng.next_u64());
        const PsdMatrix g = random_positive_definite(n, rng.next_u64());
        const double p = (trial % 2 == 0) ? 0.6 : -0.6;
        // smallest k with G <= k D
        const HermitianMatrix d_inv_root = matrix_power(d_rand, -0.5);
        const HermitianMatrix rel(d_inv_root.matrix() * g.matrix() * d_inv_root.matrix());
        const double k = eig_hermitian(rel).eigenvalues.back();
        const HermitianMatrix mapped_rel(d_inv_root.matrix() * phi_map(d_rand, g, p).matrix() *
                                         d_inv_root.matrix());
        CHECK(eig_hermitian(mapped_rel).eigenvalues.back() <= phi_scalar(k, p) + 1e-8);
    }
}

TEST_CASE("operator-ordering reversal behind the map (Lemma 5)") {
    SplitMix64 rng(37);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 2 + (rng.next_u64() % 2);
        const PsdMatrix b = random_positive_definite(n, rng.next_u64());
        const double k = 0.5 + 3.0 * rng.next_double();
        // A = k B^{1/2} S B^{1/2} with ||S|| <= 1, so A <= k B
        const PsdMatrix s_raw = random_psd({n, n, 1.0, rng.next_u64()});
        std::vector<double> lam = s_raw.spectral().eigenvalues;
        const double top = lam.back() + 1e-9;
        for (double& l : lam) l = l / top;
        const HermitianMatrix b_half = matrix_power(b, 0.5);
        const PsdMatrix a{HermitianMatrix(
            b_half.matrix() * s_raw.spectral().apply(lam).matrix() * b_half.matrix())};
        HermitianMatrix a_scaled = a.hermitian();
        a_scaled *= k;
        const PsdMatrix a_k{a_scaled};  // A := k * (something <= B) <= k B

        HermitianMatrix kb = b.hermitian();
        kb *= k;
        const PsdMatrix kb_psd{kb};
        for (double p : {0.4, 0.8}) {
            const HermitianMatrix lhs =
                matrix_power(PsdMatrix(a_k.hermitian() + b.hermitian()), p) -
                matrix_power(a_k, p);
            const HermitianMatrix rhs =
                matrix_power(PsdMatrix(kb_psd.hermitian() + b.hermitian()), p) -
                matrix_power(kb_psd, p);
            CHECK(eig_hermitian(lhs - rhs).eigenvalues.front() >= -1e-9);
        }
        for (double p : {-0.4, -0.8}) {
            const HermitianMatrix lhs =
                matrix_power(PsdMatrix(a_k.hermitian() + b.hermitian()), p) -
                matrix_power(a_k, p);
            const HermitianMatrix rhs =
                matrix_power(PsdMatrix(kb_psd.hermitian() + b.hermitian()), p) -
                matrix_power(kb_psd, p);
            CHECK(eig_hermitian(rhs - lhs).eigenvalues.front() >= -1e-9);
        }
    }
}

TEST_CASE("iterate_phi: immediate convergence, certified ratios, decay budget") {
    const PsdMatrix d = random_positive_definite(3, 41);
    const IterationTrace zero = iterate_phi(d, d, -0.5);
    CHECK(zero.converged);
    CHECK(zero.steps == 0);

    HermitianMatrix scaled = d.hermitian();
    scaled *= 4.0;
    const IterationTrace quad = iterate_phi(d, PsdMatrix(scaled), -0.5, 1e-11, 500);
    CHECK(quad.converged);
    CHECK(quad.ratios_within_certificate());
    for (std::size_t i = 1; i < quad.distances.size(); ++i)
        CHECK(quad.distances[i] <= quad.distances[i - 1] + 1e-12);

    // geometric decay bound from the certified beta, p = q - 2 at q = 1.5
    const PsdMatrix g0 = random_positive_definite(3, 42);
    const double beta = contraction_beta(-0.5);
    const IterationTrace t = iterate_phi(d, g0, -0.5, 1e-10, 2000);
    CHECK(t.converged);
    CHECK(t.distances.back() <= 1e-10);
    const double bound =
        std::ceil(std::log(1e-10 / t.distances.front()) / std::log(beta)) + 5.0;
    CHECK(static_cast<double>(t.steps) <= bound);
}

TEST_CASE("psi map: fixed point and the scalar closed form") {
    const PsdMatrix a = random_positive_definite(3, 51);
    for (double q : {0.0, 0.7, 1.0, 1.9}) {
        CHECK(max_abs_diff(psi_map(a, a, q).matrix(), a.matrix()) <=
              1e-8 * (1.0 + a.hermitian().max_abs()));
    }
    for (double q : {0.5, 1.0, 1.5}) {
        const double av = 2.0, xv = 5.0;
        const PsdMatrix mapped = psi_map(PsdMatrix::diagonal({av}), PsdMatrix::diagonal({xv}), q);
        CHECK(mapped.matrix()(0, 0).real() ==
              doctest::Approx(std::pow(av, 1.0 - q / 2.0) * std::pow(xv, q / 2.0))
                  .epsilon(1e-12));
    }
    CHECK_THROWS_AS(psi_map(a, a, 2.0), ValidationError);
}

TEST_CASE("psi map contracts with factor q/2 per step") {
    SplitMix64 rng(53);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 2 + (rng.next_u64() % 2);
        const PsdMatrix a = random_positive_definite(n, rng.next_u64());
        const PsdMatrix x = random_positive_definite(n, rng.next_u64());
        const double q = 0.3 + 1.5 * rng.next_double();
        CHECK(thompson_distance(psi_map(a, x, q), a) <=
              (q / 2.0) * thompson_distance(x, a) + 1e-8);
    }
}

TEST_CASE("iterate_psi: convergence to A with residual verified") {
    const PsdMatrix a = random_positive_definite(3, 57);
    const IterationTrace zero = iterate_psi(a, a, 1.0);
    CHECK(zero.converged);
    CHECK(zero.steps == 0);

    const PsdMatrix x0 = random_positive_definite(3, 58);
    const IterationTrace t = iterate_psi(a, x0, 1.0, 1e-11, 500);
    CHECK(t.converged);
    CHECK(t.ratios_within_certificate());
    CHECK(t.beta_certified == 0.5);
    REQUIRE(t.final_iterate.has_value());
    CHECK(max_abs_diff(t.final_iterate->matrix(), a.matrix()) <=
          1e-8 * (1.0 + a.hermitian().frobenius_norm()));
}

TEST_CASE("the B-maximization claim sampled at finite displacements") {
    // scalar case: c = 1, d = 2, q = 1.5
    const BMaximizationReport scalar = maximize_over_B_check(
        PsdMatrix::diagonal({1.0}), PsdMatrix::diagonal({2.0}), 1.5, 5);
    CHECK(scalar.satisfied);
    CHECK(scalar.worst_slack >= -1e-9);

    const BMaximizationReport rnd = maximize_over_B_check(
        random_psd({2, 2, 1.0, 61}), random_positive_definite(2, 62), 1.5, 100);
    CHECK(rnd.satisfied);
    CHECK(rnd.worst_slack >= -1e-9);
    CHECK(rnd.trials == 100);
}

TEST_SUITE_END();
