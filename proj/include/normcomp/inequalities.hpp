#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "normcomp/blocks.hpp"

namespace normcomp {

/// Outcome of one inequality evaluation. `slack` is oriented so that the
/// claim holds iff slack >= -abs_tol: rhs - lhs for <= claims, lhs - rhs for
/// >= claims.
struct InequalityReport {
    std::string name;
    double q = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double abs_tol = 0.0;
    bool satisfied = false;
    std::optional<std::uint64_t> seed;
};

/// Magnitude-scaled tolerance: scale * (1 + |lhs| + |rhs|).
double slack_tolerance(double lhs, double rhs, double scale = 1e-9);

/// ||A||_q^q <= (2^q - 2)||C||_q^q + ||B||_q^q + ||D||_q^q for a 2x2-block
/// PSD matrix, 1 <= q <= 2. Sharp for blocks of size >= 2; equality at
/// q = 1 and q = 2.
InequalityReport check_theorem1(const BlockMatrix& a, double q);

/// The reversed bound for q >= 2.
InequalityReport check_reverse(const BlockMatrix& a, double q);

/// d x d-block version: sum_i ||A_ii||_q^q + (2^q - 2) sum_{i<j} ||A_ij||_q^q
/// bounds ||A||_q^q from above for q <= 2 and from below for q >= 2.
InequalityReport check_general(const BlockMatrix& a, double q);

/// Pinching: ||A||_q >= (sum_i ||A_ii||_q^q)^{1/q}.
InequalityReport check_pinching(const BlockMatrix& a, double q);

/// Diagonal-sum bound for PSD matrices: ||A||_q <= sum_i ||A_ii||_q.
InequalityReport check_diag_sum(const BlockMatrix& a, double q);

/// King's 2x2-block bounds: ||A||_q vs the Schatten norm of the 2x2
/// compression matrix, >= for q <= 2 and <= for q >= 2.
InequalityReport check_king(const BlockMatrix& a, double q);

/// King's comparison applied verbatim to d >= 2 blocks. For d > 2 this is
/// the open generalization probed in search mode; it is known to fail for
/// scalar 4x4 partitionings.
InequalityReport check_king_general(const BlockMatrix& a, double q);

/// The same comparison for a Hermitian matrix that need not be PSD (the
/// scalar counterexample is indefinite); norms taken of singular values.
InequalityReport check_king_compression(const HermitianMatrix& m,
                                        const PartitionSpec& partition, double q);

/// Bhatia-Kittaneh chain for a general block operator T (not necessarily
/// PSD): d^{2-q}||T||_q^q vs sum_ij ||T_ij||_q^q vs ||T||_q^q, with both
/// comparisons reversing direction at q = 2. Returns the two reports in
/// chain order.
std::pair<InequalityReport, InequalityReport> check_bhatia_kittaneh(
    const ComplexMatrix& t, const PartitionSpec& partition, double q);

/// Horn-Mathias: ||C D^{-1} C^*||_q >= ||C||_q^2 / ||D||_q.
InequalityReport check_horn_mathias(const ComplexMatrix& c, const PsdMatrix& d, double q);

/// Lieb-Thirring: Tr(B^{1/2} A B^{1/2})^q <= Tr(B^{q/2} A^q B^{q/2}), q >= 1.
InequalityReport check_lieb_thirring(const PsdMatrix& a, const PsdMatrix& b, double q);

/// Clarkson-McCarthy (the "hard" one), 1 < q <= 2, 1/p + 1/q = 1:
/// ||A+B||_q^p + ||A-B||_q^p <= 2 (||A||_q^q + ||B||_q^q)^{p/q}.
InequalityReport check_clarkson_mccarthy(const ComplexMatrix& a, const ComplexMatrix& b,
                                         double q);

/// The 4x4 witness with blocks B = diag(b, c), C = diag(0, c), D = diag(d, c)
/// saturating the 2x2-block bounds at every q (eigenvalues {b, d, 2c, 0}).
BlockMatrix sharpness_witness(double b, double c, double d);

/// The fixed PSD 4x4 matrix whose scalar-partition compression (elementwise
/// absolute value) has strictly larger 1.5-norm: ||A||_1.5 = 7.7617 <
/// || |A| ||_1.5 = 7.9761. Returns the matrix and the violated >= report.
std::pair<ComplexMatrix, InequalityReport> king_counterexample();

struct NonsharpnessReport {
    std::size_t d = 0;           // number of blocks
    double q = 0.0;
    double block_norm_q = 0.0;   // a^q, common q-th norm power of every block
    double exact = 0.0;          // ||A||_q^q = a^q d^q
    double bound = 0.0;          // (2^q - 2) d(d-1)/2 a^q + d a^q
    double gap = 0.0;            // bound - exact, strictly positive for d >= 3
    double exact_numeric = 0.0;  // ||A||_q^q recomputed from the built matrix
    BlockMatrix matrix;
};

/// Builds A = J_d (x) diag(x) (every block equal to diag(x), rank-one block
/// pattern of ones) and contrasts the exact norm power a^q d^q with the
/// d-block bound, whose gap shows the bound is not sharp for d >= 3.
NonsharpnessReport nonsharpness_demo(std::size_t d, double q, const std::vector<double>& weights);

struct BoundarySweepReport {
    double q = 0.0;
    std::vector<double> epsilons;
    std::vector<double> terms;   // Tr(R/e + eP)^q - Tr(R/e)^q - Tr(eP)^q
    std::vector<double> bounds;  // 2 e^{2-q} Tr R^{q-1} + e^{4-q} Tr R^{q-2}
    bool decayed = false;        // last term <= 1e-6 * first term
};

/// Evaluates the boundary remainder term of the objective over an epsilon
/// grid (toward 0 or toward infinity); R is the singular-part Gram block,
/// positive definite on its subspace.
BoundarySweepReport boundary_sweep(const PsdMatrix& r, double q,
                                   const std::vector<double>& epsilons);

/// Convenience overload: R = P C^2 P with P the projector onto the first
/// `singular_dim` coordinates.
BoundarySweepReport boundary_sweep(const PsdMatrix& c, std::size_t singular_dim, double q,
                                   const std::vector<double>& epsilons);

}  // namespace normcomp
