#pragma once

#include "normcomp/inequalities.hpp"

namespace normcomp {

/// Inequalities the harness can exercise. `king3` is the open 3x3-block
/// generalization of King's bounds and runs in search mode: violations are
/// recorded as findings, never counted as failures.
std::vector<std::string> harness_inequality_names();

bool harness_knows(const std::string& inequality);
bool harness_search_mode(const std::string& inequality);

/// Validity range of q for a named inequality (inclusive bounds; the
/// clarkson-mccarthy lower bound is exclusive and enforced by the checker).
std::pair<double, double> harness_q_range(const std::string& inequality);

/// Default q grid: both endpoint-equality points, the q < 2 and q > 2
/// regimes, and the reference value 1.5.
inline const std::vector<double> kDefaultQGrid = {1.0, 1.1, 1.25, 1.5, 1.75,
                                                  1.9, 2.0, 2.5,  3.0, 4.0};

struct HarnessConfig {
    std::vector<std::string> inequalities;      // empty = all known
    std::vector<std::size_t> dims = {2, 3, 4};  // per-block / matrix dims
    std::vector<double> q_grid = kDefaultQGrid;
    std::size_t trials = 25;
    std::uint64_t base_seed = 20240;
    double tol_scale = 1e-9;

    void validate() const;
};

struct HarnessCell {
    std::string inequality;
    std::size_t dim = 0;                 // per-block dimension
    std::vector<std::size_t> partition;  // empty for plain-matrix inequalities
    double q = 0.0;
    std::size_t trials = 0;
    std::size_t failures = 0;  // slack violations (search-mode findings for king3)
    double worst_slack = 0.0;
    std::uint64_t worst_seed = 0;
    bool search_mode = false;
};

struct HarnessSummary {
    std::vector<HarnessCell> cells;
    std::int64_t runtime_ms = 0;

    std::size_t total_trials() const;
    /// Failures outside search-mode cells.
    std::size_t total_failures() const;
};

/// Runs every (inequality, dim, q) cell of the config with seeded random
/// instances; per-trial seeds derive from (base_seed, cell index, trial
/// index), so the summary is independent of evaluation order.
HarnessSummary run_harness(const HarnessConfig& config);

/// Re-evaluates a single trial of a cell; replaying the recorded worst seed
/// reproduces the identical report.
InequalityReport harness_trial(const std::string& inequality, std::size_t dim, double q,
                               std::uint64_t seed);

}  // namespace normcomp
