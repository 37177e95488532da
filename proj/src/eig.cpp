#include "normcomp/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace normcomp {

namespace {

constexpr int kMaxSweeps = 64;

double offdiag_norm(const ComplexMatrix& a) {
    const std::size_t n = a.rows();
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace

HermitianMatrix SpectralDecomposition::reconstruct() const { return apply(eigenvalues); }

HermitianMatrix SpectralDecomposition::apply(const std::vector<double>& mapped) const {
    const std::size_t n = vectors.rows();
    if (mapped.size() != n) throw DimensionError("SpectralDecomposition::apply: size mismatch");
    // V diag(m) V^*, accumulated as sum of rank-one terms.
    ComplexMatrix r(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double m = mapped[k];
        if (m == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = vectors(i, k);
            for (std::size_t j = 0; j < n; ++j) r(i, j) += m * vik * std::conj(vectors(j, k));
        }
    }
    return HermitianMatrix(r);
}

double SpectralDecomposition::unitarity_error() const {
    const ComplexMatrix g = vectors.adjoint() * vectors;
    return max_abs_diff(g, ComplexMatrix::identity(vectors.rows()));
}

double SpectralDecomposition::reconstruction_error(const HermitianMatrix& input) const {
    return max_abs_diff(reconstruct().matrix(), input.matrix());
}

SpectralDecomposition eig_hermitian(const HermitianMatrix& h) {
    const std::size_t n = h.dim();
    ComplexMatrix a = h.matrix();
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-14 * (1.0 + h.frobenius_norm());

    double off = offdiag_norm(a);
    int sweep = 0;
    while (off > threshold) {
        if (sweep++ >= kMaxSweeps)
            throw ConvergenceError("eig_hermitian: Jacobi sweeps exhausted, off-diagonal norm " +
                                       std::to_string(off),
                                   off);
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double r = std::abs(apq);
                if (r == 0.0) continue;
                // Unitary 2x2 rotation zeroing a(p,q). With apq = r e^{i t},
                // tau = (a_qq - a_pp)/(2r), pick the smaller-magnitude root of
                // x^2 - 2 tau x - 1 = 0 for stability.
                const Complex phase = apq / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const Complex sp = s * phase;        // s e^{i t}
                const Complex spc = std::conj(sp);   // s e^{-i t}

                // Column update: A <- A U with U = [[c, -sp],[spc, c]] at (p,q).
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * c + akq * spc;
                    a(k, q) = -akp * sp + akq * c;
                }
                // Row update: A <- U^* A.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk + sp * aqk;
                    a(q, k) = -spc * apk + c * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                // Accumulate eigenvectors: V <- V U.
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * spc;
                    v(k, q) = -vkp * sp + vkq * c;
                }
            }
        }
        off = offdiag_norm(a);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return a(i, i).real() < a(j, j).real();
    });

    SpectralDecomposition dec;
    dec.eigenvalues.resize(n);
    dec.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        dec.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) dec.vectors(i, k) = v(i, order[k]);
    }
    return dec;
}

}  // namespace normcomp
