#include "normcomp/blocks.hpp"

#include <cmath>

#include "normcomp/random.hpp"

namespace normcomp {

PartitionSpec::PartitionSpec(std::vector<std::size_t> block_sizes)
    : sizes_(std::move(block_sizes)) {
    if (sizes_.empty()) throw ValidationError("PartitionSpec: no blocks");
    total_ = 0;
    offsets_.reserve(sizes_.size());
    for (std::size_t s : sizes_) {
        if (s == 0) throw ValidationError("PartitionSpec: zero-size block");
        offsets_.push_back(total_);
        total_ += s;
    }
}

BlockMatrix::BlockMatrix(PsdMatrix matrix, PartitionSpec partition)
    : matrix_(std::move(matrix)), partition_(std::move(partition)) {
    if (partition_.total() != matrix_.dim())
        throw DimensionError("BlockMatrix: partition total " +
                             std::to_string(partition_.total()) + " != matrix dim " +
                             std::to_string(matrix_.dim()));
}

ComplexMatrix BlockMatrix::block(std::size_t i, std::size_t j) const {
    if (i >= block_count() || j >= block_count())
        throw DimensionError("BlockMatrix::block: index out of range");
    return matrix_.matrix().submatrix(partition_.offset(i), partition_.size(i),
                                      partition_.offset(j), partition_.size(j));
}

CompressionMatrix::CompressionMatrix(std::size_t dim, std::vector<double> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_)
        throw DimensionError("CompressionMatrix: entry count mismatch");
    for (double e : entries_)
        if (!(e >= 0.0)) throw ValidationError("CompressionMatrix: negative or NaN entry");
}

ComplexMatrix CompressionMatrix::as_complex() const {
    ComplexMatrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < dim_; ++j) m(i, j) = (*this)(i, j);
    return m;
}

ComplexMatrix extract_block(const BlockMatrix& a, std::size_t i, std::size_t j) {
    return a.block(i, j);
}

CompressionMatrix norm_compression(const BlockMatrix& a, SchattenExponent q) {
    return norm_compression(a.matrix().hermitian(), a.partition(), q);
}

CompressionMatrix norm_compression(const HermitianMatrix& m, const PartitionSpec& partition,
                                   SchattenExponent q) {
    if (partition.total() != m.dim())
        throw DimensionError("norm_compression: partition does not match matrix");
    const std::size_t d = partition.count();
    std::vector<double> entries(d * d, 0.0);
    // Upper triangle computed, lower mirrored: ||A_ij||_q = ||A_ji||_q.
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j) {
            const double norm = schatten_norm(
                m.matrix().submatrix(partition.offset(i), partition.size(i),
                                     partition.offset(j), partition.size(j)),
                q);
            entries[i * d + j] = norm;
            entries[j * d + i] = norm;
        }
    return {d, std::move(entries)};
}

PsdMatrix pinch_diagonal(const BlockMatrix& a) {
    const std::size_t n = a.matrix().dim();
    ComplexMatrix pinched(n, n);
    for (std::size_t b = 0; b < a.block_count(); ++b) {
        const std::size_t off = a.partition().offset(b);
        const std::size_t sz = a.partition().size(b);
        for (std::size_t i = 0; i < sz; ++i)
            for (std::size_t j = 0; j < sz; ++j)
                pinched(off + i, off + j) = a.matrix().matrix()(off + i, off + j);
    }
    return PsdMatrix(HermitianMatrix(pinched));
}

BlockMatrix random_block_psd(const PartitionSpec& partition, std::uint64_t seed) {
    return {random_psd({partition.total(), partition.total(), 1.0, seed}), partition};
}

}  // namespace normcomp
