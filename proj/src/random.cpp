#include "normcomp/random.hpp"

#include <cmath>

namespace normcomp {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t SplitMix64::next_u64() {
    state_ += kGamma;
    return mix(state_);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller; u1 shifted away from 0 so log stays finite.
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(angle);
    have_spare_ = true;
    return r * std::cos(angle);
}

Complex SplitMix64::next_complex_normal() {
    const double re = next_normal();
    const double im = next_normal();
    return {re * 0.7071067811865476, im * 0.7071067811865476};
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t trial) {
    std::uint64_t x = mix(base + kGamma * (cell + 1));
    return mix(x + kGamma * (trial + 1));
}

ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    SplitMix64 rng(seed);
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.next_complex_normal();
    return m;
}

PsdMatrix random_psd(const RandomSpec& spec) {
    if (spec.rank > spec.dim) throw ValidationError("random_psd: rank exceeds dim");
    if (!(spec.scale > 0.0)) throw ValidationError("random_psd: scale must be positive");
    const ComplexMatrix m = random_complex_matrix(spec.dim, spec.rank, spec.seed);
    ComplexMatrix g = m * m.adjoint();
    g *= Complex(spec.scale, 0.0);
    return PsdMatrix(HermitianMatrix(g));
}

PsdMatrix random_positive_definite(std::size_t dim, std::uint64_t seed, double ridge) {
    const PsdMatrix base = random_psd({dim, dim, 1.0, seed});
    return PsdMatrix(base.hermitian().shifted(ridge));
}

HermitianMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
    const ComplexMatrix m = random_complex_matrix(dim, dim, seed);
    ComplexMatrix h = m + m.adjoint();
    h *= Complex(0.5, 0.0);
    return HermitianMatrix(h);
}

ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed) {
    return polar_decompose(random_complex_matrix(dim, dim, seed)).unitary;
}

}  // namespace normcomp
