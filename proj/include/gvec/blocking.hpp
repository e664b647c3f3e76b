#pragma once

#include <vector>

#include "gvec/tensor.hpp"

namespace gvec {

/// A T_1 x ... x T_k grid of equally shaped blocks.
///
/// Blocks are stored first-index-fastest over the outer grid. The
/// constructor enforces the grid invariants (block count, uniform block
/// shape, matching ranks) and throws BlockError when they fail.
class BlockTensor {
public:
    BlockTensor(Shape outer_shape, Shape block_shape, std::vector<DenseTensor> blocks);

    const Shape& outer_shape() const noexcept { return outer_; }
    const Shape& block_shape() const noexcept { return block_; }
    const std::vector<DenseTensor>& blocks() const noexcept { return blocks_; }

    /// Block at outer index (q_1, ..., q_k).
    const DenseTensor& block_at(std::span<const std::size_t> outer_idx) const;
    const DenseTensor& block_at(std::initializer_list<std::size_t> outer_idx) const {
        return block_at(std::span<const std::size_t>(outer_idx.begin(), outer_idx.size()));
    }

private:
    Shape outer_;
    Shape block_;
    std::vector<DenseTensor> blocks_;
};

/// Partitions t into contiguous axis-aligned blocks; `outer` gives the
/// number of blocks along each dimension and must divide every extent.
BlockTensor block(const DenseTensor& t, const Shape& outer);

/// Concatenates the grid back into a single tensor of rank k. Extents equal
/// to 1 are kept.
DenseTensor unblock(const BlockTensor& bt);

/// Swaps outer grid dimensions m and n (1-based). Block contents are not
/// touched.
BlockTensor transpose_outer(const BlockTensor& bt, std::size_t m, std::size_t n);

}  // namespace gvec
