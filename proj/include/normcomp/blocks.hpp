#pragma once

#include <cstdint>

#include "normcomp/schatten.hpp"

namespace normcomp {

/// Symmetric block partitioning: identical row and column boundaries, so
/// diagonal blocks are square.
class PartitionSpec {
  public:
    explicit PartitionSpec(std::vector<std::size_t> block_sizes);

    std::size_t count() const { return sizes_.size(); }
    std::size_t total() const { return total_; }
    std::size_t size(std::size_t i) const { return sizes_.at(i); }
    std::size_t offset(std::size_t i) const { return offsets_.at(i); }
    const std::vector<std::size_t>& sizes() const { return sizes_; }

    bool operator==(const PartitionSpec& other) const { return sizes_ == other.sizes_; }

  private:
    std::vector<std::size_t> sizes_;
    std::vector<std::size_t> offsets_;
    std::size_t total_;
};

/// A PSD matrix together with a symmetric partition of its index set.
class BlockMatrix {
  public:
    BlockMatrix(PsdMatrix matrix, PartitionSpec partition);

    const PsdMatrix& matrix() const { return matrix_; }
    const PartitionSpec& partition() const { return partition_; }
    std::size_t block_count() const { return partition_.count(); }

    /// Submatrix at block coordinates (i, j); Hermitian when i == j.
    ComplexMatrix block(std::size_t i, std::size_t j) const;

  private:
    PsdMatrix matrix_;
    PartitionSpec partition_;
};

/// Matrix of blockwise Schatten norms: entry(i,j) = ||A_ij||_q. Symmetric
/// with nonnegative entries.
class CompressionMatrix {
  public:
    CompressionMatrix(std::size_t dim, std::vector<double> entries);

    std::size_t dim() const { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
    const std::vector<double>& entries() const { return entries_; }

    ComplexMatrix as_complex() const;

  private:
    std::size_t dim_;
    std::vector<double> entries_;
};

ComplexMatrix extract_block(const BlockMatrix& a, std::size_t i, std::size_t j);

CompressionMatrix norm_compression(const BlockMatrix& a, SchattenExponent q);

/// Compression of a Hermitian (not necessarily PSD) matrix under a
/// partition; needed for the scalar counterexample, which is indefinite.
CompressionMatrix norm_compression(const HermitianMatrix& m, const PartitionSpec& partition,
                                   SchattenExponent q);

/// Zero all off-diagonal blocks; the result stays PSD.
PsdMatrix pinch_diagonal(const BlockMatrix& a);

/// Full-rank PSD matrix of the partition's total dimension, wrapped with the
/// partition. Deterministic in the seed.
BlockMatrix random_block_psd(const PartitionSpec& partition, std::uint64_t seed);

}  // namespace normcomp
