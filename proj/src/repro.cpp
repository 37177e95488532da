#include "normcomp/repro.hpp"

#include <algorithm>
#include <cmath>

#include "normcomp/eig.hpp"
#include "normcomp/json_io.hpp"
#include "normcomp/random.hpp"

namespace normcomp {

void ReproReport::add(std::string label, double expected, double computed, double tolerance) {
    ReproCheck c;
    c.label = std::move(label);
    c.expected = expected;
    c.computed = computed;
    c.tolerance = tolerance;
    c.ok = std::abs(computed - expected) <= tolerance;
    add_check(std::move(c));
}

void ReproReport::add_check(ReproCheck check) {
    ok = ok && check.ok;
    checks.push_back(std::move(check));
}

std::string to_json(const ReproReport& r) {
    JsonWriter w;
    w.begin_object().field("target", r.target).field("ok", r.ok);
    w.key("checks").begin_array();
    for (const ReproCheck& c : r.checks) {
        w.begin_object()
            .field("label", c.label)
            .field("expected", c.expected)
            .field("computed", c.computed)
            .field("tolerance", c.tolerance)
            .field("ok", c.ok)
            .end_object();
    }
    w.end_array().end_object();
    return w.str();
}

ReproReport repro_counterexample() {
    ReproReport report;
    report.target = "counterexample";
    auto [matrix, king_report] = king_counterexample();
    report.add("schatten_1.5_norm", 7.7617, king_report.lhs, 5e-4);
    report.add("schatten_1.5_norm_of_compression", 7.9761, king_report.rhs, 5e-4);

    // The matrix is Hermitian but not PSD; its smallest eigenvalue is a
    // frozen reference value (independently cross-checked).
    const auto spectrum = eig_hermitian(HermitianMatrix(matrix)).eigenvalues;
    report.add("min_eigenvalue", -0.67728518, spectrum.front(), 1e-6);

    ReproCheck violated;
    violated.label = "scalar_king_direction_violated";
    violated.expected = 0.0;
    violated.computed = king_report.slack;
    violated.tolerance = 0.0;
    violated.ok = !king_report.satisfied;
    report.add_check(violated);
    return report;
}

ReproReport repro_sharpness(std::size_t triples, const std::vector<double>& qs,
                            std::uint64_t seed) {
    ReproReport report;
    report.target = "sharpness";
    for (double q : qs) {
        double worst = 0.0;
        for (std::size_t trial = 0; trial < triples; ++trial) {
            SplitMix64 rng(derive_seed(seed, 1, trial));
            const double b = 10.0 * rng.next_double();
            const double c = 10.0 * rng.next_double();
            const double d = 10.0 * rng.next_double();
            const BlockMatrix witness = sharpness_witness(b, c, d);
            const InequalityReport r =
                (q <= 2.0) ? check_theorem1(witness, q) : check_reverse(witness, q);
            worst = std::max(worst, std::abs(r.slack));
        }
        report.add("max_abs_slack_q=" + format_real(q), 0.0, worst, 1e-9);
    }
    return report;
}

ReproReport repro_nonsharpness() {
    ReproReport report;
    report.target = "nonsharpness";
    const NonsharpnessReport demo = nonsharpness_demo(3, 1.5, {1.0});
    const double exact_expected = std::pow(3.0, 1.5);
    const double bound_expected = (std::pow(2.0, 1.5) - 2.0) * 3.0 + 3.0;
    report.add("exact_norm_power", exact_expected, demo.exact, 1e-12);
    report.add("bound_value", bound_expected, demo.bound, 1e-12);
    report.add("exact_recomputed_from_matrix", demo.exact, demo.exact_numeric,
               1e-9 * (1.0 + demo.exact));

    ReproCheck gap;
    gap.label = "gap_exceeds_0.25";
    gap.expected = 0.25;
    gap.computed = demo.gap;
    gap.tolerance = 0.0;
    gap.ok = demo.gap > 0.25;
    report.add_check(gap);
    return report;
}

ReproReport repro_equality_endpoints(std::size_t instances, std::uint64_t seed) {
    ReproReport report;
    report.target = "equality-endpoints";
    static constexpr std::size_t kDims[] = {2, 3, 4};
    double worst_q1 = 0.0, worst_q2 = 0.0;
    for (std::size_t trial = 0; trial < instances; ++trial) {
        const std::size_t dim = kDims[trial % 3];
        const BlockMatrix a =
            random_block_psd(PartitionSpec({dim, dim}), derive_seed(seed, 2, trial));
        worst_q1 = std::max(worst_q1, std::abs(check_theorem1(a, 1.0).slack));
        worst_q2 = std::max(worst_q2, std::abs(check_theorem1(a, 2.0).slack));
    }
    report.add("max_abs_slack_q=1", 0.0, worst_q1, 1e-10);
    report.add("max_abs_slack_q=2", 0.0, worst_q2, 1e-10);
    return report;
}

std::vector<ReproReport> repro_all() {
    return {repro_counterexample(), repro_sharpness(), repro_nonsharpness(),
            repro_equality_endpoints()};
}

}  // namespace normcomp
