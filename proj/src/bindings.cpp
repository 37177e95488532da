#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "normcomp/harness.hpp"
#include "normcomp/json_io.hpp"
#include "normcomp/random.hpp"
#include "normcomp/repro.hpp"
#include "normcomp/stationarity.hpp"

namespace py = pybind11;
using namespace normcomp;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix to_matrix(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw ValidationError("expected a 2-d array");
    const auto rows = static_cast<std::size_t>(arr.shape(0));
    const auto cols = static_cast<std::size_t>(arr.shape(1));
    ComplexMatrix m(rows, cols);
    auto view = arr.unchecked<2>();
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = view(i, j);
    return m;
}

py::array_t<std::complex<double>> from_matrix(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) view(i, j) = m(i, j);
    return arr;
}

PsdMatrix to_psd(const ComplexArray& arr) { return PsdMatrix(HermitianMatrix(to_matrix(arr))); }

BlockMatrix to_block(const ComplexArray& arr, const std::vector<std::size_t>& partition) {
    return {to_psd(arr), PartitionSpec(partition)};
}

py::dict report_to_dict(const InequalityReport& r) {
    py::dict d;
    d["name"] = r.name;
    d["q"] = r.q;
    d["lhs"] = r.lhs;
    d["rhs"] = r.rhs;
    d["slack"] = r.slack;
    d["satisfied"] = r.satisfied;
    d["tolerance"] = r.abs_tol;
    if (r.seed) d["seed"] = *r.seed;
    return d;
}

py::dict trace_to_dict(const IterationTrace& t) {
    py::dict d;
    d["converged"] = t.converged;
    d["steps"] = t.steps;
    d["distances"] = t.distances;
    d["ratios"] = t.ratios;
    d["beta_certified"] = t.beta_certified;
    if (t.final_iterate) d["final"] = from_matrix(t.final_iterate->matrix());
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Schatten norm compression inequalities for block PSD matrices";

    py::register_exception<Error>(m, "NormcompError");

    // core linear algebra
    m.def(
        "eig_hermitian",
        [](const ComplexArray& h) {
            const SpectralDecomposition dec = eig_hermitian(HermitianMatrix(to_matrix(h)));
            py::array_t<double> lam(
                std::vector<py::ssize_t>{static_cast<py::ssize_t>(dec.eigenvalues.size())},
                dec.eigenvalues.data());
            return py::make_tuple(lam, from_matrix(dec.vectors));
        },
        py::arg("h"), "Eigenvalues (ascending) and unitary eigenvector matrix");
    m.def(
        "matrix_power",
        [](const ComplexArray& a, double p) { return from_matrix(matrix_power(to_psd(a), p).matrix()); },
        py::arg("a"), py::arg("p"));
    m.def(
        "polar_decompose",
        [](const ComplexArray& c) {
            const PolarDecomposition pd = polar_decompose(to_matrix(c));
            return py::make_tuple(from_matrix(pd.unitary), from_matrix(pd.factor.matrix()));
        },
        py::arg("c"));
    m.def(
        "random_psd",
        [](std::size_t dim, std::size_t rank, double scale, std::uint64_t seed) {
            return from_matrix(random_psd({dim, rank, scale, seed}).matrix());
        },
        py::arg("dim"), py::arg("rank"), py::arg("scale") = 1.0, py::arg("seed") = 0);
    m.def(
        "random_positive_definite",
        [](std::size_t dim, std::uint64_t seed, double ridge) {
            return from_matrix(random_positive_definite(dim, seed, ridge).matrix());
        },
        py::arg("dim"), py::arg("seed") = 0, py::arg("ridge") = 1.0);

    // Schatten norms and blocks
    m.def(
        "schatten_norm",
        [](const ComplexArray& a, double q) { return schatten_norm(to_matrix(a), q); },
        py::arg("a"), py::arg("q"));
    m.def(
        "schatten_norm_q_power",
        [](const ComplexArray& a, double q) { return schatten_norm_q_power(to_matrix(a), q); },
        py::arg("a"), py::arg("q"));
    m.def(
        "norm_compression",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return from_matrix(norm_compression(to_block(a, partition), q).as_complex());
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "pinch_diagonal",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition) {
            return from_matrix(pinch_diagonal(to_block(a, partition)).matrix());
        },
        py::arg("a"), py::arg("partition"));
    m.def(
        "extract_block",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, std::size_t i,
           std::size_t j) { return from_matrix(to_block(a, partition).block(i, j)); },
        py::arg("a"), py::arg("partition"), py::arg("i"), py::arg("j"));

    // means and metric
    m.def(
        "geometric_mean",
        [](const ComplexArray& a, const ComplexArray& b) {
            return from_matrix(geometric_mean(to_psd(a), to_psd(b)).matrix());
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "power_mean",
        [](const ComplexArray& a, const ComplexArray& b, double alpha) {
            return from_matrix(power_mean(to_psd(a), to_psd(b), alpha).matrix());
        },
        py::arg("a"), py::arg("b"), py::arg("alpha"));
    m.def(
        "solve_riccati",
        [](const ComplexArray& a, const ComplexArray& b) {
            return from_matrix(solve_riccati(to_psd(a), to_psd(b)).matrix());
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "thompson_distance",
        [](const ComplexArray& a, const ComplexArray& b) {
            return thompson_distance(to_psd(a), to_psd(b));
        },
        py::arg("a"), py::arg("b"));
    m.def(
        "log_majorizes",
        [](const ComplexArray& a, const ComplexArray& b, double tol) {
            return log_majorizes(to_psd(a), to_psd(b), tol);
        },
        py::arg("a"), py::arg("b"), py::arg("tol") = 1e-10);

    // stationarity machinery
    m.def(
        "gamma_of",
        [](const ComplexArray& c, const ComplexArray& d) {
            return from_matrix(gamma_of(to_psd(c), to_psd(d)).matrix());
        },
        py::arg("c"), py::arg("d"));
    m.def(
        "f_objective",
        [](const ComplexArray& c, const ComplexArray& d, double q) {
            return f_objective(to_psd(c), to_psd(d), q);
        },
        py::arg("c"), py::arg("d"), py::arg("q"));
    m.def(
        "f_gradient",
        [](const ComplexArray& c, const ComplexArray& d, double q) {
            return from_matrix(f_gradient(to_psd(c), to_psd(d), q).matrix());
        },
        py::arg("c"), py::arg("d"), py::arg("q"));
    m.def(
        "phi_scalar", [](double x, double p) { return phi_scalar(x, p); }, py::arg("x"),
        py::arg("p"));
    m.def(
        "contraction_beta", [](double p) { return contraction_beta(p); }, py::arg("p"));
    m.def(
        "phi_map",
        [](const ComplexArray& d, const ComplexArray& g, double p) {
            return from_matrix(phi_map(to_psd(d), to_psd(g), p).matrix());
        },
        py::arg("d"), py::arg("g"), py::arg("p"));
    m.def(
        "iterate_phi",
        [](const ComplexArray& d, const ComplexArray& g0, double p, double tol,
           std::size_t max_steps) {
            return trace_to_dict(iterate_phi(to_psd(d), to_psd(g0), p, tol, max_steps));
        },
        py::arg("d"), py::arg("g0"), py::arg("p"), py::arg("tol") = 1e-11,
        py::arg("max_steps") = 200);
    m.def(
        "psi_map",
        [](const ComplexArray& a, const ComplexArray& x, double q) {
            return from_matrix(psi_map(to_psd(a), to_psd(x), q).matrix());
        },
        py::arg("a"), py::arg("x"), py::arg("q"));
    m.def(
        "iterate_psi",
        [](const ComplexArray& a, const ComplexArray& x0, double q, double tol,
           std::size_t max_steps) {
            return trace_to_dict(iterate_psi(to_psd(a), to_psd(x0), q, tol, max_steps));
        },
        py::arg("a"), py::arg("x0"), py::arg("q"), py::arg("tol") = 1e-11,
        py::arg("max_steps") = 200);

    // inequality checkers
    m.def(
        "check_theorem1",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return report_to_dict(check_theorem1(to_block(a, partition), q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_reverse",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return report_to_dict(check_reverse(to_block(a, partition), q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_general",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return report_to_dict(check_general(to_block(a, partition), q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_pinching",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return report_to_dict(check_pinching(to_block(a, partition), q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_diag_sum",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            return report_to_dict(check_diag_sum(to_block(a, partition), q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_king",
        [](const ComplexArray& a, const std::vector<std::size_t>& partition, double q) {
            const BlockMatrix blocked = to_block(a, partition);
            return report_to_dict(partition.size() == 2 ? check_king(blocked, q)
                                                        : check_king_general(blocked, q));
        },
        py::arg("a"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_bhatia_kittaneh",
        [](const ComplexArray& t, const std::vector<std::size_t>& partition, double q) {
            auto [r1, r2] = check_bhatia_kittaneh(to_matrix(t), PartitionSpec(partition), q);
            return py::make_tuple(report_to_dict(r1), report_to_dict(r2));
        },
        py::arg("t"), py::arg("partition"), py::arg("q"));
    m.def(
        "check_horn_mathias",
        [](const ComplexArray& c, const ComplexArray& d, double q) {
            return report_to_dict(check_horn_mathias(to_matrix(c), to_psd(d), q));
        },
        py::arg("c"), py::arg("d"), py::arg("q"));
    m.def(
        "check_lieb_thirring",
        [](const ComplexArray& a, const ComplexArray& b, double q) {
            return report_to_dict(check_lieb_thirring(to_psd(a), to_psd(b), q));
        },
        py::arg("a"), py::arg("b"), py::arg("q"));
    m.def(
        "check_clarkson_mccarthy",
        [](const ComplexArray& a, const ComplexArray& b, double q) {
            return report_to_dict(check_clarkson_mccarthy(to_matrix(a), to_matrix(b), q));
        },
        py::arg("a"), py::arg("b"), py::arg("q"));

    // witnesses, counterexample, demos
    m.def(
        "sharpness_witness",
        [](double b, double c, double d) {
            return from_matrix(sharpness_witness(b, c, d).matrix().matrix());
        },
        py::arg("b"), py::arg("c"), py::arg("d"));
    m.def("king_counterexample", []() {
        auto [matrix, report] = king_counterexample();
        return py::make_tuple(from_matrix(matrix), report_to_dict(report));
    });
    m.def(
        "nonsharpness_demo",
        [](std::size_t d, double q, const std::vector<double>& weights) {
            const NonsharpnessReport r = nonsharpness_demo(d, q, weights);
            py::dict out;
            out["d"] = r.d;
            out["q"] = r.q;
            out["block_norm_q"] = r.block_norm_q;
            out["exact"] = r.exact;
            out["bound"] = r.bound;
            out["gap"] = r.gap;
            out["exact_numeric"] = r.exact_numeric;
            out["matrix"] = from_matrix(r.matrix.matrix().matrix());
            return out;
        },
        py::arg("d"), py::arg("q"), py::arg("weights") = std::vector<double>{1.0});
    m.def(
        "boundary_sweep",
        [](const ComplexArray& r, double q, const std::vector<double>& epsilons) {
            const BoundarySweepReport rep = boundary_sweep(to_psd(r), q, epsilons);
            py::dict out;
            out["q"] = rep.q;
            out["epsilons"] = rep.epsilons;
            out["terms"] = rep.terms;
            out["bounds"] = rep.bounds;
            out["decayed"] = rep.decayed;
            return out;
        },
        py::arg("r"), py::arg("q"), py::arg("epsilons"));
    m.def(
        "maximize_over_b_check",
        [](const ComplexArray& c, const ComplexArray& d, double q, std::size_t trials,
           std::uint64_t seed) {
            const BMaximizationReport r = maximize_over_B_check(to_psd(c), to_psd(d), q, trials, seed);
            py::dict out;
            out["trials"] = r.trials;
            out["worst_slack"] = r.worst_slack;
            out["worst_seed"] = r.worst_seed;
            out["worst_t"] = r.worst_t;
            out["satisfied"] = r.satisfied;
            return out;
        },
        py::arg("c"), py::arg("d"), py::arg("q"), py::arg("trials") = 20,
        py::arg("seed") = 20240);

    // harness and reproduction targets
    m.def(
        "run_harness",
        [](const std::vector<std::string>& inequalities, const std::vector<std::size_t>& dims,
           const std::vector<double>& q_grid, std::size_t trials, std::uint64_t base_seed) {
            HarnessConfig config;
            config.inequalities = inequalities;
            if (!dims.empty()) config.dims = dims;
            if (!q_grid.empty()) config.q_grid = q_grid;
            config.trials = trials;
            config.base_seed = base_seed;
            const HarnessSummary summary = run_harness(config);
            py::list cells;
            for (const HarnessCell& c : summary.cells) {
                py::dict cell;
                cell["inequality"] = c.inequality;
                cell["dim"] = c.dim;
                cell["partition"] = c.partition;
                cell["q"] = c.q;
                cell["trials"] = c.trials;
                cell["failures"] = c.failures;
                cell["worst_slack"] = c.worst_slack;
                cell["worst_seed"] = c.worst_seed;
                cell["search_mode"] = c.search_mode;
                cells.append(cell);
            }
            py::dict out;
            out["cells"] = cells;
            out["runtime_ms"] = summary.runtime_ms;
            out["total_failures"] = summary.total_failures();
            return out;
        },
        py::arg("inequalities") = std::vector<std::string>{},
        py::arg("dims") = std::vector<std::size_t>{}, py::arg("q_grid") = std::vector<double>{},
        py::arg("trials") = 25, py::arg("base_seed") = 20240);
    m.def("repro_all", []() {
        py::list out;
        for (const ReproReport& r : repro_all()) {
            py::dict d;
            d["target"] = r.target;
            d["ok"] = r.ok;
            py::list checks;
            for (const ReproCheck& c : r.checks) {
                py::dict cd;
                cd["label"] = c.label;
                cd["expected"] = c.expected;
                cd["computed"] = c.computed;
                cd["tolerance"] = c.tolerance;
                cd["ok"] = c.ok;
                checks.append(cd);
            }
            d["checks"] = checks;
            out.append(d);
        }
        return out;
    });
}
