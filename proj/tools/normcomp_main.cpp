// normcomp: verify norm-compression inequalities for block PSD matrices,
// solve the associated matrix fixed-point equations, reproduce the reference
// numbers, and run the randomized harness.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "normcomp/harness.hpp"
#include "normcomp/json_io.hpp"
#include "normcomp/random.hpp"
#include "normcomp/repro.hpp"
#include "normcomp/stationarity.hpp"

namespace {

using namespace normcomp;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

std::uint64_t effective_seed(std::uint64_t flag_seed) {
    if (const char* env = std::getenv("NORMCOMP_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ValidationError("NORMCOMP_SEED is not a valid 64-bit integer");
        }
    }
    return flag_seed;
}

std::vector<std::size_t> parse_partition(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            const long v = std::stol(item);
            if (v <= 0) throw std::invalid_argument("nonpositive");
            sizes.push_back(static_cast<std::size_t>(v));
        } catch (const std::exception&) {
            throw ValidationError("bad --partition entry '" + item + "'");
        }
    }
    if (sizes.empty()) throw ValidationError("empty --partition");
    return sizes;
}

void print_report(const InequalityReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(r) << "\n";
        return;
    }
    std::cout << "name=" << r.name << " q=" << format_real(r.q) << " lhs=" << format_real(r.lhs)
              << " rhs=" << format_real(r.rhs) << " slack=" << format_real(r.slack)
              << " satisfied=" << (r.satisfied ? "yes" : "no")
              << " tolerance=" << format_real(r.abs_tol);
    if (r.seed) std::cout << " seed=" << *r.seed;
    std::cout << "\n";
}

struct VerifyOptions {
    std::string inequality;
    std::string input;
    std::string input_a;
    std::string input_b;
    bool random = false;
    std::size_t dim = 3;
    std::string partition;
    std::uint64_t seed = 1;
    double q = 1.5;
    std::string format = "text";
};

int run_verify(const VerifyOptions& opt) {
    const std::string& name = opt.inequality;
    if (!harness_knows(name) && name != "king-general")
        throw ValidationError("unknown inequality: " + name);
    const std::uint64_t seed = effective_seed(opt.seed);
    const bool randomized = opt.random;

    std::vector<InequalityReport> reports;
    const bool pair_style =
        (name == "horn-mathias" || name == "lieb-thirring" || name == "clarkson-mccarthy");
    if (pair_style) {
        ComplexMatrix a(0, 0), b(0, 0);
        if (randomized) {
            if (name == "horn-mathias") {
                a = random_positive_definite(opt.dim, seed).matrix();
                b = random_positive_definite(opt.dim, derive_seed(seed, 1, 0)).matrix();
            } else if (name == "lieb-thirring") {
                a = random_psd({opt.dim, opt.dim, 1.0, seed}).matrix();
                b = random_psd({opt.dim, opt.dim, 1.0, derive_seed(seed, 1, 0)}).matrix();
            } else {
                a = random_complex_matrix(opt.dim, opt.dim, seed);
                b = random_complex_matrix(opt.dim, opt.dim, derive_seed(seed, 1, 0));
            }
        } else {
            if (opt.input_a.empty() || opt.input_b.empty())
                throw ValidationError(name + " needs --a and --b matrix files (or --random)");
            a = load_matrix(opt.input_a);
            b = load_matrix(opt.input_b);
        }
        if (name == "horn-mathias")
            reports.push_back(check_horn_mathias(a, PsdMatrix(HermitianMatrix(b)), opt.q));
        else if (name == "lieb-thirring")
            reports.push_back(check_lieb_thirring(PsdMatrix(HermitianMatrix(a)),
                                                  PsdMatrix(HermitianMatrix(b)), opt.q));
        else
            reports.push_back(check_clarkson_mccarthy(a, b, opt.q));
    } else if (name == "bhatia-kittaneh") {
        std::vector<std::size_t> partition =
            opt.partition.empty() ? std::vector<std::size_t>{} : parse_partition(opt.partition);
        ComplexMatrix t(0, 0);
        if (randomized) {
            if (partition.empty()) partition = {opt.dim, opt.dim};
            std::size_t total = 0;
            for (std::size_t s : partition) total += s;
            t = random_complex_matrix(total, total, seed);
        } else {
            if (opt.input.empty())
                throw ValidationError("bhatia-kittaneh needs --input (or --random)");
            if (partition.empty())
                throw ValidationError("bhatia-kittaneh needs --partition");
            t = load_matrix(opt.input);
        }
        auto [r1, r2] = check_bhatia_kittaneh(t, PartitionSpec(partition), opt.q);
        reports.push_back(r1);
        reports.push_back(r2);
    } else if (name == "king" || name == "king3" || name == "king-general") {
        // The d > 2 probe accepts indefinite Hermitian input (the scalar
        // counterexample is not PSD), so load without the PSD wrap.
        std::vector<std::size_t> partition =
            opt.partition.empty() ? std::vector<std::size_t>{} : parse_partition(opt.partition);
        HermitianMatrix m = HermitianMatrix::zero(0);
        if (randomized) {
            if (partition.empty())
                partition.assign(name == "king" ? 2 : 3, opt.dim);
            m = random_block_psd(PartitionSpec(partition), seed).matrix().hermitian();
        } else {
            if (opt.input.empty())
                throw ValidationError("verify " + name + " needs --input FILE or --random");
            auto [matrix, loaded] = load_partitioned_matrix(opt.input, partition);
            partition = loaded.sizes();
            m = HermitianMatrix(matrix);
        }
        const PartitionSpec spec(partition);
        if (spec.count() == 2) {
            // King's theorem itself presumes a PSD matrix.
            reports.push_back(check_king(BlockMatrix{PsdMatrix(m), spec}, opt.q));
        } else {
            reports.push_back(check_king_compression(m, spec, opt.q));
        }
    } else {
        std::vector<std::size_t> partition =
            opt.partition.empty() ? std::vector<std::size_t>{} : parse_partition(opt.partition);
        std::optional<BlockMatrix> blocked;
        if (randomized) {
            if (partition.empty()) {
                const std::size_t blocks =
                    (name == "general" || name == "pinching" || name == "diag-sum") ? 3 : 2;
                partition.assign(blocks, opt.dim);
            }
            blocked = random_block_psd(PartitionSpec(partition), seed);
        } else {
            if (opt.input.empty())
                throw ValidationError("verify " + name + " needs --input FILE or --random");
            blocked = load_block_matrix(opt.input, partition);
        }
        if (name == "theorem1") reports.push_back(check_theorem1(*blocked, opt.q));
        else if (name == "reverse") reports.push_back(check_reverse(*blocked, opt.q));
        else if (name == "general") reports.push_back(check_general(*blocked, opt.q));
        else if (name == "pinching") reports.push_back(check_pinching(*blocked, opt.q));
        else reports.push_back(check_diag_sum(*blocked, opt.q));
    }

    bool all_ok = true;
    for (InequalityReport& r : reports) {
        if (randomized) r.seed = seed;
        print_report(r, opt.format);
        all_ok = all_ok && r.satisfied;
    }
    return all_ok ? kExitOk : kExitViolation;
}

struct SolveOptions {
    std::string equation;
    std::string input_a;
    std::string input_b;
    bool random = false;
    std::size_t dim = 3;
    std::uint64_t seed = 1;
    double p = -0.5;
    double q = 1.0;
    double tol = 1e-11;
    std::size_t max_steps = 200;
    std::string format = "text";
};

void print_trace(const IterationTrace& t, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(t) << "\n";
        return;
    }
    std::cout << "converged=" << (t.converged ? "yes" : "no") << " steps=" << t.steps
              << " beta_certified=" << format_real(t.beta_certified)
              << " max_ratio=" << format_real(t.max_ratio())
              << " final_distance=" << format_real(t.distances.back()) << "\n";
}

int run_solve(const SolveOptions& opt) {
    const std::uint64_t seed = effective_seed(opt.seed);
    const auto load_pd = [](const std::string& path, const char* which) {
        const PsdMatrix m{HermitianMatrix(load_matrix(path))};
        if (!m.is_positive_definite())
            throw SingularityError(std::string(which) + " (" + path +
                                   ") must be positive definite");
        return m;
    };

    if (opt.equation == "riccati") {
        PsdMatrix a = opt.random ? random_positive_definite(opt.dim, seed)
                                 : load_pd(opt.input_a, "--a");
        PsdMatrix b = opt.random ? random_positive_definite(opt.dim, derive_seed(seed, 1, 0))
                                 : load_pd(opt.input_b, "--b");
        const PsdMatrix x = solve_riccati(a, b);
        const HermitianMatrix a_inv = matrix_power(a, -1.0);
        const double residual =
            (x.matrix() * a_inv.matrix() * x.matrix() - b.matrix()).frobenius_norm();
        if (opt.format == "json") {
            std::cout << "{\"solution\":" << to_json(x.matrix())
                      << ",\"residual\":" << format_real(residual) << "}\n";
        } else {
            std::cout << "solution=" << to_json(x.matrix()) << "\n"
                      << "residual=" << format_real(residual) << "\n";
        }
        return kExitOk;
    }

    if (opt.equation == "phi") {
        const PsdMatrix d = opt.random ? random_positive_definite(opt.dim, seed)
                                       : load_pd(opt.input_a, "--a");
        const PsdMatrix g0 = opt.random
                                 ? random_positive_definite(opt.dim, derive_seed(seed, 1, 0))
                                 : load_pd(opt.input_b, "--b");
        const IterationTrace trace = iterate_phi(d, g0, opt.p, opt.tol, opt.max_steps, false);
        print_trace(trace, opt.format);
        return (trace.converged && trace.ratios_within_certificate()) ? kExitOk
                                                                      : kExitViolation;
    }

    if (opt.equation == "psi") {
        const PsdMatrix a = opt.random ? random_positive_definite(opt.dim, seed)
                                       : load_pd(opt.input_a, "--a");
        const PsdMatrix x0 = opt.random
                                 ? random_positive_definite(opt.dim, derive_seed(seed, 1, 0))
                                 : load_pd(opt.input_b, "--b");
        if (!(opt.q >= 0.0 && opt.q < 2.0))
            throw ValidationError("solve psi: q must lie in [0, 2)");
        const IterationTrace trace = iterate_psi(a, x0, opt.q, opt.tol, opt.max_steps, false);
        print_trace(trace, opt.format);
        return (trace.converged && trace.ratios_within_certificate()) ? kExitOk
                                                                      : kExitViolation;
    }

    throw ValidationError("unknown equation: " + opt.equation);
}

void print_repro(const ReproReport& r, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(r) << "\n";
        return;
    }
    std::cout << "target " << r.target << ": " << (r.ok ? "ok" : "FAILED") << "\n";
    for (const ReproCheck& c : r.checks)
        std::cout << "  " << c.label << ": expected=" << format_real(c.expected)
                  << " computed=" << format_real(c.computed)
                  << " tolerance=" << format_real(c.tolerance) << " -> "
                  << (c.ok ? "ok" : "FAILED") << "\n";
}

int run_repro(const std::string& target, const std::string& format) {
    std::vector<ReproReport> reports;
    if (target == "counterexample") reports.push_back(repro_counterexample());
    else if (target == "sharpness") reports.push_back(repro_sharpness());
    else if (target == "nonsharpness") reports.push_back(repro_nonsharpness());
    else if (target == "equality-endpoints") reports.push_back(repro_equality_endpoints());
    else if (target == "all") reports = repro_all();
    else throw ValidationError("unknown repro target: " + target);
    bool ok = true;
    for (const ReproReport& r : reports) {
        print_repro(r, format);
        ok = ok && r.ok;
    }
    return ok ? kExitOk : kExitViolation;
}

struct HarnessOptions {
    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> base_seed;
    std::optional<std::size_t> trials;
    std::string format = "text";
};

int run_harness_cmd(const HarnessOptions& opt) {
    HarnessConfig config;
    if (!opt.config_path.empty()) config = load_harness_config(opt.config_path);
    if (opt.base_seed) config.base_seed = *opt.base_seed;
    if (opt.trials) config.trials = *opt.trials;
    config.validate();

    const HarnessSummary summary = run_harness(config);
    if (!opt.out_path.empty()) write_file(opt.out_path, to_json(summary));

    if (opt.format == "json") {
        std::cout << to_json(summary) << "\n";
    } else {
        for (const HarnessCell& c : summary.cells) {
            std::cout << c.inequality << " dim=" << c.dim << " q=" << format_real(c.q)
                      << " trials=" << c.trials << " failures=" << c.failures
                      << " worst_slack=" << format_real(c.worst_slack)
                      << " worst_seed=" << c.worst_seed
                      << (c.search_mode ? " (search mode)" : "") << "\n";
        }
        std::cout << "cells=" << summary.cells.size() << " trials=" << summary.total_trials()
                  << " failures=" << summary.total_failures()
                  << " runtime_ms=" << summary.runtime_ms << "\n";
    }
    return summary.total_failures() == 0 ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schatten norm compression inequalities for block PSD matrices"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    CLI::App* verify = app.add_subcommand("verify", "check one inequality on one instance");
    verify->add_option("inequality", vopt.inequality, "inequality name")->required();
    verify->add_option("--input", vopt.input, "block-matrix (or matrix) JSON file");
    verify->add_option("--a", vopt.input_a, "first matrix JSON file (pair inequalities)");
    verify->add_option("--b", vopt.input_b, "second matrix JSON file (pair inequalities)");
    verify->add_flag("--random", vopt.random, "generate a seeded random instance");
    verify->add_option("--dim", vopt.dim, "per-block dimension for --random");
    verify->add_option("--partition", vopt.partition, "comma-separated block sizes");
    verify->add_option("--seed", vopt.seed, "random seed (NORMCOMP_SEED overrides)");
    verify->add_option("--q", vopt.q, "Schatten exponent")->required();
    verify->add_option("--format", vopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    SolveOptions sopt;
    CLI::App* solve = app.add_subcommand("solve", "run a fixed-point solver");
    solve->add_option("equation", sopt.equation, "riccati|phi|psi")->required();
    solve->add_option("--a", sopt.input_a, "first input matrix JSON (D for phi, A for psi)");
    solve->add_option("--b", sopt.input_b, "second input matrix JSON (G0 for phi, X0 for psi)");
    solve->add_flag("--random", sopt.random, "generate seeded random positive definite inputs");
    solve->add_option("--dim", sopt.dim, "dimension for --random");
    solve->add_option("--seed", sopt.seed, "random seed (NORMCOMP_SEED overrides)");
    solve->add_option("--p", sopt.p, "power parameter for phi, in (-1,1) minus 0");
    solve->add_option("--q", sopt.q, "exponent for psi, in [0,2)");
    solve->add_option("--tol", sopt.tol, "convergence tolerance on the Thompson distance");
    solve->add_option("--max-steps", sopt.max_steps, "iteration budget");
    solve->add_option("--format", sopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string repro_target = "all";
    std::string repro_format = "text";
    CLI::App* repro = app.add_subcommand("repro", "reproduce the reference numbers");
    repro->add_option("target", repro_target,
                      "counterexample|sharpness|nonsharpness|equality-endpoints|all")
        ->required();
    repro->add_option("--format", repro_format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    HarnessOptions hopt;
    std::uint64_t harness_seed = 0;
    std::size_t harness_trials = 0;
    CLI::App* harness = app.add_subcommand("harness", "run the randomized inequality harness");
    harness->add_option("--config", hopt.config_path, "harness config JSON file");
    harness->add_option("--out", hopt.out_path, "write the summary JSON here");
    CLI::Option* seed_opt =
        harness->add_option("--base-seed", harness_seed, "base seed for all cells");
    CLI::Option* trials_opt =
        harness->add_option("--trials", harness_trials, "trials per cell");
    harness->add_option("--format", hopt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
        if (*seed_opt) hopt.base_seed = harness_seed;
        if (*trials_opt) hopt.trials = harness_trials;
        if (verify->parsed()) return run_verify(vopt);
        if (solve->parsed()) return run_solve(sopt);
        if (repro->parsed()) return run_repro(repro_target, repro_format);
        if (harness->parsed()) return run_harness_cmd(hopt);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    } catch (const ConditioningError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const ConvergenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const ConsistencyError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        // validation / IO / dimension / singular-input problems
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
