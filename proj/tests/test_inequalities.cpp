#include <doctest.h>

#include <cmath>

#include "normcomp/harness.hpp"
#include "normcomp/json_io.hpp"
#include "normcomp/random.hpp"

using namespace normcomp;

TEST_SUITE_BEGIN("inequality-suite");

TEST_CASE("theorem1: equality at the endpoints, sharp witness, validation") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const BlockMatrix a = random_block_psd(PartitionSpec({3, 3}), seed);
        CHECK(std::abs(check_theorem1(a, 1.0).slack) <= 1e-10);
        CHECK(std::abs(check_theorem1(a, 2.0).slack) <= 1e-10);
        CHECK(check_theorem1(a, 1.5).satisfied);
    }

    const BlockMatrix witness = sharpness_witness(3.0, 2.0, 5.0);
    CHECK(std::abs(check_theorem1(witness, 1.5).slack) <= 1e-9);

    // eigenvalues of the witness: {b, d, 2c, 0} = {3, 5, 4, 0}
    const auto lam = witness.matrix().spectral().eigenvalues;
    CHECK(lam[0] == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(lam[1] == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lam[2] == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(lam[3] == doctest::Approx(5.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(check_theorem1(witness, 2.5), doctest::Contains("q out of range"),
                         ValidationError);
    const BlockMatrix three = random_block_psd(PartitionSpec({1, 1, 1}), 4);
    CHECK_THROWS_AS(check_theorem1(three, 1.5), ValidationError);
}

TEST_CASE("reverse: q >= 2 direction") {
    const BlockMatrix witness = sharpness_witness(3.0, 2.0, 5.0);
    CHECK(std::abs(check_reverse(witness, 2.0).slack) <= 1e-10);
    CHECK(std::abs(check_reverse(witness, 3.0).slack) <= 1e-9);
    for (std::uint64_t seed : {5u, 6u, 7u}) {
        const BlockMatrix a = random_block_psd(PartitionSpec({2, 2}), seed);
        CHECK(check_reverse(a, 2.5).slack >= -1e-9);
    }
}

TEST_CASE("sharpness witness saturates both directions over the q grid") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
        const BlockMatrix w = sharpness_witness(10.0 * rng.next_double(),
                                                10.0 * rng.next_double(),
                                                10.0 * rng.next_double());
        for (double q : {1.1, 1.5, 1.9, 2.5, 3.0, 4.0}) {
            const InequalityReport r = (q <= 2.0) ? check_theorem1(w, q) : check_reverse(w, q);
            CHECK(std::abs(r.slack) <= 1e-9);
        }
    }
    CHECK_THROWS_AS(sharpness_witness(-1.0, 0.0, 0.0), ValidationError);
    CHECK(sharpness_witness(0.0, 0.0, 0.0).matrix().hermitian().max_abs() == 0.0);
}

TEST_CASE("general reduces to the 2-block checkers field for field") {
    for (std::uint64_t seed : {9u, 10u}) {
        const BlockMatrix a = random_block_psd(PartitionSpec({2, 2}), seed);
        for (double q : {1.0, 1.5, 2.0}) {
            const InequalityReport t = check_theorem1(a, q);
            const InequalityReport g = check_general(a, q);
            CHECK(g.lhs == t.lhs);
            CHECK(g.rhs == t.rhs);
            CHECK(g.slack == t.slack);
            CHECK(g.abs_tol == t.abs_tol);
            CHECK(g.satisfied == t.satisfied);
        }
        const InequalityReport rev = check_reverse(a, 3.0);
        const InequalityReport g3 = check_general(a, 3.0);
        CHECK(g3.slack == rev.slack);
        CHECK(g3.lhs == rev.lhs);
    }

    for (std::uint64_t seed : {11u, 12u}) {
        const BlockMatrix a = random_block_psd(PartitionSpec({2, 2, 2}), seed);
        CHECK(std::abs(check_general(a, 1.0).slack) <= 1e-10);
        CHECK(check_general(a, 1.5).slack >= -1e-9);
        CHECK(check_general(a, 2.5).slack >= -1e-9);
    }
}

TEST_CASE("pinching inequality") {
    ComplexMatrix bd(4, 4);
    bd(0, 0) = 1.0;
    bd(1, 1) = 2.0;
    bd(2, 2) = 3.0;
    bd(3, 3) = 0.5;
    const BlockMatrix blocked{PsdMatrix(HermitianMatrix(bd)), PartitionSpec({2, 2})};
    CHECK(std::abs(check_pinching(blocked, 1.7).slack) <= 1e-10);

    CHECK(check_pinching(sharpness_witness(3.0, 2.0, 5.0), 1.5).slack > 1e-3);

    for (std::uint64_t seed : {13u, 14u})
        CHECK(check_pinching(random_block_psd(PartitionSpec({2, 2, 2}), seed), 3.0).slack >=
              -1e-9);
}

TEST_CASE("diagonal-sum bound") {
    ComplexMatrix one_block(3, 3);
    one_block(0, 0) = 2.0;
    one_block(0, 1) = 1.0;
    one_block(1, 0) = 1.0;
    one_block(1, 1) = 2.0;
    const BlockMatrix blocked{PsdMatrix(HermitianMatrix(one_block)), PartitionSpec({2, 1})};
    CHECK(std::abs(check_diag_sum(blocked, 1.5).slack) <= 1e-10);

    // rank-one extremal family: A = a a^*
    SplitMix64 rng(15);
    for (int trial = 0; trial < 6; ++trial) {
        const ComplexMatrix v = random_complex_matrix(4, 1, rng.next_u64());
        const ComplexMatrix outer = v * v.adjoint();
        const BlockMatrix a{PsdMatrix(HermitianMatrix(outer)), PartitionSpec({2, 2})};
        const InequalityReport r = check_diag_sum(a, 1.7);
        CHECK(r.slack >= -1e-9);
    }

    for (std::uint64_t seed : {16u, 17u})
        CHECK(check_diag_sum(random_block_psd(PartitionSpec({2, 2, 2}), seed), 1.7).slack >=
              -1e-9);
}

TEST_CASE("king bounds: scalar equality, q = 2 equality, randomized") {
    // scalar blocks with a11 a22 >= a12^2: equality throughout
    ComplexMatrix scalar(2, 2);
    scalar(0, 0) = 2.0;
    scalar(0, 1) = 1.0;
    scalar(1, 0) = 1.0;
    scalar(1, 1) = 3.0;
    const BlockMatrix sb{PsdMatrix(HermitianMatrix(scalar)), PartitionSpec({1, 1})};
    for (double q : {1.3, 1.5, 2.0, 3.0}) CHECK(std::abs(check_king(sb, q).slack) <= 1e-10);

    for (std::uint64_t seed : {18u, 19u}) {
        const BlockMatrix a = random_block_psd(PartitionSpec({2, 2}), seed);
        CHECK(std::abs(check_king(a, 2.0).slack) <= 1e-10);
        CHECK(check_king(a, 1.5).slack >= -1e-9);
        CHECK(check_king(a, 3.0).slack >= -1e-9);
    }
}

TEST_CASE("bhatia-kittaneh chain") {
    const auto [r1, r2] =
        check_bhatia_kittaneh(ComplexMatrix::identity(2), PartitionSpec({1, 1}), 4.0);
    // sum of block norm powers equals ||I||_4^4 = 2 exactly; the d^{2-q}
    // link holds with room (0.5 <= 2)
    CHECK(std::abs(r2.slack) <= 1e-10);
    CHECK(r2.lhs == doctest::Approx(2.0));
    CHECK(r2.rhs == doctest::Approx(2.0));
    CHECK(r1.slack == doctest::Approx(1.5));
    CHECK(r1.satisfied);

    SplitMix64 rng(20);
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexMatrix t = random_complex_matrix(4, 4, rng.next_u64());
        for (double q : {1.5, 2.0, 3.0}) {
            const auto [b1, b2] = check_bhatia_kittaneh(t, PartitionSpec({2, 2}), q);
            CHECK(b1.slack >= -1e-9);
            CHECK(b2.slack >= -1e-9);
            if (q == 2.0) {
                CHECK(std::abs(b1.slack) <= 1e-9);
                CHECK(std::abs(b2.slack) <= 1e-9);
            }
        }
    }
}

TEST_CASE("horn-mathias bound") {
    const PsdMatrix d = random_positive_definite(3, 21);
    const InequalityReport same = check_horn_mathias(d.matrix(), d, 1.5);
    CHECK(std::abs(same.slack) <= 1e-9 * (1.0 + same.lhs));

    const InequalityReport scalar =
        check_horn_mathias(ComplexMatrix::diagonal({3.0}), PsdMatrix::diagonal({2.0}), 1.5);
    CHECK(scalar.lhs == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(scalar.rhs == doctest::Approx(4.5).epsilon(1e-12));

    SplitMix64 rng(22);
    for (int trial = 0; trial < 8; ++trial) {
        const PsdMatrix c = random_positive_definite(3, rng.next_u64());
        const PsdMatrix dd = random_positive_definite(3, rng.next_u64());
        CHECK(check_horn_mathias(c.matrix(), dd, 1.5).slack >= -1e-9);
    }
}

TEST_CASE("lieb-thirring bound") {
    const PsdMatrix a = PsdMatrix::diagonal({1.0, 2.0, 3.0});
    const PsdMatrix b = PsdMatrix::diagonal({0.5, 1.5, 2.5});
    CHECK(std::abs(check_lieb_thirring(a, b, 1.7).slack) <= 1e-9);

    const PsdMatrix ra = random_psd({3, 3, 1.0, 23});
    const PsdMatrix rb = random_psd({3, 3, 1.0, 24});
    CHECK(std::abs(check_lieb_thirring(ra, rb, 1.0).slack) <= 1e-10);
    for (double q : {1.5, 2.5, 4.0}) CHECK(check_lieb_thirring(ra, rb, q).slack >= -1e-9);
}

TEST_CASE("clarkson-mccarthy bound") {
    const ComplexMatrix a = random_complex_matrix(3, 3, 25);
    CHECK(std::abs(check_clarkson_mccarthy(a, ComplexMatrix::zero(3, 3), 1.5).slack) <= 1e-9);
    CHECK(std::abs(check_clarkson_mccarthy(a, a, 1.5).slack) <=
          1e-9 * (1.0 + std::abs(check_clarkson_mccarthy(a, a, 1.5).rhs)));

    SplitMix64 rng(26);
    for (int trial = 0; trial < 8; ++trial) {
        const ComplexMatrix x = random_complex_matrix(3, 3, rng.next_u64());
        const ComplexMatrix y = random_complex_matrix(3, 3, rng.next_u64());
        CHECK(check_clarkson_mccarthy(x, y, 1.5).slack >= -1e-9);
    }
    CHECK_THROWS_AS(check_clarkson_mccarthy(a, a, 1.0), ValidationError);
}

TEST_CASE("king counterexample: reference values and violated direction") {
    const auto [matrix, report] = king_counterexample();
    CHECK(report.lhs == doctest::Approx(7.7617).epsilon(7e-5));
    CHECK(report.rhs == doctest::Approx(7.9761).epsilon(7e-5));
    CHECK_FALSE(report.satisfied);
    CHECK(report.rhs - report.lhs >= 0.2);  // the gap is about 0.214

    // Hermitian but indefinite; frozen spectrum reference
    const auto lam = eig_hermitian(HermitianMatrix(matrix)).eigenvalues;
    CHECK(lam.front() == doctest::Approx(-0.67728518).epsilon(1e-7));
    CHECK(lam.back() == doctest::Approx(5.46957063).epsilon(1e-7));
}

TEST_CASE("nonsharpness of the multi-block bound") {
    const NonsharpnessReport demo = nonsharpness_demo(3, 1.5, {1.0});
    CHECK(demo.exact == doctest::Approx(std::pow(3.0, 1.5)).epsilon(1e-12));
    CHECK(demo.bound ==
          doctest::Approx((std::pow(2.0, 1.5) - 2.0) * 3.0 + 3.0).epsilon(1e-12));
    CHECK(demo.gap > 0.25);
    CHECK(demo.exact_numeric == doctest::Approx(demo.exact).epsilon(1e-9));

    // every block of the construction has the same q-norm a
    const double a_norm = std::pow(demo.block_norm_q, 1.0 / demo.q);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(schatten_norm(demo.matrix.block(i, j), demo.q) ==
                  doctest::Approx(a_norm).epsilon(1e-10));

    for (std::size_t d : {3u, 4u, 5u})
        for (double q : {1.1, 1.5, 1.9}) CHECK(nonsharpness_demo(d, q, {1.0, 0.7}).gap > 0.0);

    // the gap closes toward q = 2
    CHECK(nonsharpness_demo(3, 1.999, {1.0}).gap <=
          1e-2 * nonsharpness_demo(3, 1.999, {1.0}).exact);
    // d = 2 is the sharp case
    CHECK(nonsharpness_demo(2, 1.5, {1.0}).gap == doctest::Approx(0.0).epsilon(1e-12));
    CHECK_THROWS_AS(nonsharpness_demo(1, 1.5, {1.0}), ValidationError);
    CHECK_THROWS_AS(nonsharpness_demo(3, 2.5, {1.0}), ValidationError);
}

TEST_CASE("boundary sweep decays in both limits and respects the small-eps bound") {
    // scalar R = 1: term = (1/e + e)^q - e^{-q} - e^q
    const PsdMatrix r1 = PsdMatrix::diagonal({1.0});
    std::vector<double> toward_zero, toward_inf;
    for (int k = 0; k <= 16; ++k) {
        toward_zero.push_back(std::pow(10.0, -k));
        toward_inf.push_back(std::pow(10.0, k));
    }
    const BoundarySweepReport down = boundary_sweep(r1, 1.5, toward_zero);
    CHECK(down.decayed);
    const double direct_at_01 = std::pow(10.1, 1.5) - std::pow(10.0, 1.5) - std::pow(0.1, 1.5);
    CHECK(down.terms[1] == doctest::Approx(direct_at_01).epsilon(1e-10));
    for (std::size_t i = 0; i < down.terms.size(); ++i) {
        CHECK(down.terms[i] >= 0.0);
        CHECK(down.terms[i] <= down.bounds[i] + 1e-9);
    }

    const BoundarySweepReport up = boundary_sweep(r1, 1.5, toward_inf);
    CHECK(up.decayed);

    // random positive definite R through the projector overload
    SplitMix64 rng(27);
    for (int trial = 0; trial < 4; ++trial) {
        const PsdMatrix c = random_positive_definite(3, rng.next_u64());
        const BoundarySweepReport swept = boundary_sweep(c, 2, 1.5, toward_zero);
        CHECK(swept.decayed);
    }
}

TEST_CASE("harness: determinism, counts, replay, validation") {
    HarnessConfig config;
    config.inequalities = {"theorem1", "king", "lieb-thirring"};
    config.dims = {2, 3};
    config.q_grid = {1.5, 3.0};
    config.trials = 5;
    config.base_seed = 123;

    const HarnessSummary s1 = run_harness(config);
    const HarnessSummary s2 = run_harness(config);
    CHECK(to_json(s1) == to_json(s2));
    CHECK(s1.total_failures() == 0);

    // theorem1 runs only at q = 1.5; king and lieb-thirring at both q values
    std::size_t theorem_cells = 0;
    for (const HarnessCell& cell : s1.cells) {
        CHECK(cell.trials == 5);
        if (cell.inequality == "theorem1") {
            ++theorem_cells;
            CHECK(cell.q == 1.5);
        }
        // replaying the worst seed reproduces the recorded slack
        const InequalityReport replay =
            harness_trial(cell.inequality, cell.dim, cell.q, cell.worst_seed);
        CHECK(replay.slack == cell.worst_slack);
    }
    CHECK(theorem_cells == 2);

    HarnessConfig bad;
    bad.inequalities = {"no-such-inequality"};
    CHECK_THROWS_WITH_AS(run_harness(bad), doctest::Contains("no-such-inequality"),
                         ValidationError);

    HarnessConfig single;
    single.inequalities = {"pinching"};
    single.dims = {2};
    single.q_grid = {1.5};
    single.trials = 1;
    const HarnessSummary tiny = run_harness(single);
    CHECK(tiny.cells.size() == 1);
    CHECK(tiny.cells[0].trials == 1);
    CHECK(tiny.cells[0].failures + (tiny.cells[0].worst_slack >= 0 ? 1 : 0) >= 1);
}

TEST_CASE("king3 search cells are findings, not failures") {
    HarnessConfig config;
    config.inequalities = {"king3"};
    config.dims = {2};
    config.q_grid = {1.5};
    config.trials = 10;
    const HarnessSummary s = run_harness(config);
    CHECK(s.total_failures() == 0);  // search mode never counts as failure
    for (const HarnessCell& cell : s.cells) CHECK(cell.search_mode);
}

TEST_SUITE_END();
