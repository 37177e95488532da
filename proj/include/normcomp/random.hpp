#pragma once

#include <cstdint>

#include "normcomp/psd.hpp"

namespace normcomp {

/// Minimal 64-bit counter generator (splitmix64). The exact constants are
/// fixed so that seeded runs reproduce bit-identically everywhere:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
///   z = (z ^ z>>27) * 0x94D049BB133111EB; return z ^ z>>31
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Standard normal via Box-Muller; values are delivered in pairs.
    double next_normal();

    /// Complex standard normal: E|z|^2 = 1.
    Complex next_complex_normal();

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// One-shot mixing of (base seed, cell, trial) into an independent stream
/// seed; used by the randomized harness so results do not depend on
/// scheduling order.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t cell, std::uint64_t trial);

/// Recipe for a reproducible random PSD matrix: scale * M M^* with M a
/// dim x rank matrix of seeded complex standard-normal entries.
struct RandomSpec {
    std::size_t dim;
    std::size_t rank;
    double scale = 1.0;
    std::uint64_t seed = 0;
};

/// Random complex matrix with standard-normal entries.
ComplexMatrix random_complex_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);

/// scale * M M^* for a seeded dim x rank standard-normal M. The result has
/// exactly `rank` eigenvalues above psd_tol.
PsdMatrix random_psd(const RandomSpec& spec);

/// Well-conditioned positive definite sample: random_psd(dim, dim) shifted
/// by ridge * identity.
PsdMatrix random_positive_definite(std::size_t dim, std::uint64_t seed, double ridge = 1.0);

/// Random Hermitian (indefinite) matrix with standard-normal entries,
/// built as (M + M^*)/2.
HermitianMatrix random_hermitian(std::size_t dim, std::uint64_t seed);

/// Haar-ish random unitary: the polar factor of a random complex matrix.
ComplexMatrix random_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace normcomp
