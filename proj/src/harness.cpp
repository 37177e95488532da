#include "normcomp/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "normcomp/random.hpp"

namespace normcomp {

namespace {

struct InequalityInfo {
    const char* name;
    double q_lo;
    double q_hi;
    std::size_t blocks;  // 0 = plain-matrix (pair) inequality
    bool search;
};

constexpr InequalityInfo kInequalities[] = {
    {"theorem1", 1.0, 2.0, 2, false},
    {"reverse", 2.0, 64.0, 2, false},
    {"general", 1.0, 64.0, 3, false},
    {"pinching", 1.0, 64.0, 3, false},
    {"diag-sum", 1.0, 64.0, 3, false},
    {"king", 1.0, 64.0, 2, false},
    {"king3", 1.0, 64.0, 3, true},
    {"bhatia-kittaneh", 1.0, 64.0, 2, false},
    {"horn-mathias", 1.0, 64.0, 0, false},
    {"lieb-thirring", 1.0, 64.0, 0, false},
    {"clarkson-mccarthy", 1.0, 2.0, 0, false},
};

const InequalityInfo* find_info(const std::string& name) {
    for (const auto& info : kInequalities)
        if (name == info.name) return &info;
    return nullptr;
}

const InequalityInfo& info_or_throw(const std::string& name) {
    const InequalityInfo* info = find_info(name);
    if (!info) throw ValidationError("unknown inequality: " + name);
    return *info;
}

}  // namespace

std::vector<std::string> harness_inequality_names() {
    std::vector<std::string> names;
    for (const auto& info : kInequalities) names.emplace_back(info.name);
    return names;
}

bool harness_knows(const std::string& inequality) { return find_info(inequality) != nullptr; }

bool harness_search_mode(const std::string& inequality) {
    return info_or_throw(inequality).search;
}

std::pair<double, double> harness_q_range(const std::string& inequality) {
    const InequalityInfo& info = info_or_throw(inequality);
    return {info.q_lo, info.q_hi};
}

void HarnessConfig::validate() const {
    for (const std::string& name : inequalities) info_or_throw(name);
    if (trials < 1) throw ValidationError("harness config: trials must be >= 1");
    if (dims.empty()) throw ValidationError("harness config: no dims");
    for (std::size_t d : dims)
        if (d == 0 || d > 64) throw ValidationError("harness config: dim out of range");
    if (q_grid.empty()) throw ValidationError("harness config: empty q grid");
    for (double q : q_grid)
        if (!(q >= 1.0 && q <= 64.0))
            throw ValidationError("harness config: q " + std::to_string(q) +
                                  " outside [1, 64]");
    if (!(tol_scale > 0.0)) throw ValidationError("harness config: tol_scale must be positive");
}

InequalityReport harness_trial(const std::string& inequality, std::size_t dim, double q,
                               std::uint64_t seed) {
    const InequalityInfo& info = info_or_throw(inequality);
    InequalityReport report;
    if (info.blocks > 0) {
        const BlockMatrix a =
            random_block_psd(PartitionSpec(std::vector<std::size_t>(info.blocks, dim)), seed);
        if (inequality == "theorem1") report = check_theorem1(a, q);
        else if (inequality == "reverse") report = check_reverse(a, q);
        else if (inequality == "general") report = check_general(a, q);
        else if (inequality == "pinching") report = check_pinching(a, q);
        else if (inequality == "diag-sum") report = check_diag_sum(a, q);
        else if (inequality == "king") report = check_king(a, q);
        else if (inequality == "king3") report = check_king_general(a, q);
        else {  // bhatia-kittaneh: general (non-Hermitian) operator
            const ComplexMatrix t = random_complex_matrix(2 * dim, 2 * dim, seed);
            auto [r1, r2] = check_bhatia_kittaneh(t, PartitionSpec({dim, dim}), q);
            // Keep the link of the chain with the smaller margin; it fails
            // whenever either link fails.
            report = (r1.slack + r1.abs_tol <= r2.slack + r2.abs_tol) ? r1 : r2;
            report.name = "bhatia-kittaneh";
        }
    } else {
        const std::uint64_t seed_b = derive_seed(seed, 1, 0);
        if (inequality == "horn-mathias") {
            const PsdMatrix c = random_positive_definite(dim, seed);
            const PsdMatrix d = random_positive_definite(dim, seed_b);
            report = check_horn_mathias(c.matrix(), d, q);
        } else if (inequality == "lieb-thirring") {
            report = check_lieb_thirring(random_psd({dim, dim, 1.0, seed}),
                                         random_psd({dim, dim, 1.0, seed_b}), q);
        } else {  // clarkson-mccarthy
            report = check_clarkson_mccarthy(random_complex_matrix(dim, dim, seed),
                                             random_complex_matrix(dim, dim, seed_b), q);
        }
    }
    report.seed = seed;
    return report;
}

HarnessSummary run_harness(const HarnessConfig& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();

    std::vector<std::string> names = config.inequalities;
    if (names.empty()) names = harness_inequality_names();

    HarnessSummary summary;
    std::size_t cell_index = 0;
    for (const std::string& name : names) {
        const InequalityInfo& info = info_or_throw(name);
        for (std::size_t dim : config.dims) {
            for (double q : config.q_grid) {
                if (q < info.q_lo || q > info.q_hi) continue;
                if (name == "clarkson-mccarthy" && q <= 1.0) continue;
                HarnessCell cell;
                cell.inequality = name;
                cell.dim = dim;
                if (info.blocks > 0)
                    cell.partition.assign(info.blocks, dim);
                cell.q = q;
                cell.trials = config.trials;
                cell.search_mode = info.search;
                bool first = true;
                for (std::size_t trial = 0; trial < config.trials; ++trial) {
                    const std::uint64_t seed =
                        derive_seed(config.base_seed, cell_index, trial);
                    InequalityReport report = harness_trial(name, dim, q, seed);
                    const double tol = slack_tolerance(report.lhs, report.rhs,
                                                       config.tol_scale);
                    if (report.slack < -tol) ++cell.failures;
                    if (first || report.slack < cell.worst_slack) {
                        cell.worst_slack = report.slack;
                        cell.worst_seed = seed;
                        first = false;
                    }
                }
                summary.cells.push_back(std::move(cell));
                ++cell_index;
            }
        }
    }

    summary.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return summary;
}

std::size_t HarnessSummary::total_trials() const {
    std::size_t n = 0;
    for (const auto& cell : cells) n += cell.trials;
    return n;
}

std::size_t HarnessSummary::total_failures() const {
    std::size_t n = 0;
    for (const auto& cell : cells)
        if (!cell.search_mode) n += cell.failures;
    return n;
}

}  // namespace normcomp
