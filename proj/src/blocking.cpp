#include "gvec/blocking.hpp"

#include <string>
#include <utility>

#include "gvec/errors.hpp"

namespace gvec {

namespace {

// First-index-fastest position of idx in the outer grid.
std::size_t grid_position(const Shape& grid, std::span<const std::size_t> idx) {
    std::size_t pos = 0;
    for (std::size_t i = grid.rank(); i-- > 0;) pos = pos * grid[i] + idx[i];
    return pos;
}

}  // namespace

BlockTensor::BlockTensor(Shape outer_shape, Shape block_shape, std::vector<DenseTensor> blocks)
    : outer_(std::move(outer_shape)), block_(std::move(block_shape)), blocks_(std::move(blocks)) {
    if (outer_.rank() != block_.rank())
        throw BlockError("outer rank " + std::to_string(outer_.rank()) + " differs from block rank " +
                         std::to_string(block_.rank()));
    if (blocks_.size() != outer_.size())
        throw BlockError("grid " + outer_.to_string() + " needs " + std::to_string(outer_.size()) +
                         " blocks, got " + std::to_string(blocks_.size()));
    for (const auto& b : blocks_) {
        if (b.shape() != block_)
            throw BlockError("block of shape " + b.shape().to_string() + " in a grid of " +
                             block_.to_string() + " blocks");
    }
}

const DenseTensor& BlockTensor::block_at(std::span<const std::size_t> outer_idx) const {
    if (!outer_.contains(outer_idx)) throw IndexError("outer index out of range for grid " + outer_.to_string());
    return blocks_[grid_position(outer_, outer_idx)];
}

BlockTensor block(const DenseTensor& t, const Shape& outer) {
    const std::size_t k = t.rank();
    if (outer.rank() != k)
        throw DimError("block grid rank " + std::to_string(outer.rank()) + " differs from tensor rank " +
                       std::to_string(k));
    std::vector<std::size_t> inner(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (t.shape()[i] % outer[i] != 0)
            throw BlockError("grid " + outer.to_string() + " does not divide shape " + t.shape().to_string());
        inner[i] = t.shape()[i] / outer[i];
    }
    const Shape block_shape(inner);

    std::vector<DenseTensor> blocks;
    blocks.reserve(outer.size());
    IndexTuple src(k);
    for_each_index(outer, [&](const IndexTuple& q) {
        blocks.push_back(DenseTensor::generate(block_shape, [&](const IndexTuple& r) {
            for (std::size_t i = 0; i < k; ++i) src[i] = q[i] * inner[i] + r[i];
            return t.get_unchecked(src);
        }));
    });
    return BlockTensor(outer, block_shape, std::move(blocks));
}

DenseTensor unblock(const BlockTensor& bt) {
    const Shape& outer = bt.outer_shape();
    const Shape& inner = bt.block_shape();
    const std::size_t k = outer.rank();
    std::vector<std::size_t> dims(k);
    for (std::size_t i = 0; i < k; ++i) dims[i] = outer[i] * inner[i];

    IndexTuple q(k), r(k);
    return DenseTensor::generate(Shape(std::move(dims)), [&](const IndexTuple& p) {
        for (std::size_t i = 0; i < k; ++i) {
            q[i] = p[i] / inner[i];
            r[i] = p[i] % inner[i];
        }
        return bt.blocks()[grid_position(outer, q)].get_unchecked(r);
    });
}

BlockTensor transpose_outer(const BlockTensor& bt, std::size_t m, std::size_t n) {
    const Shape& outer = bt.outer_shape();
    const std::size_t k = outer.rank();
    if (m < 1 || m > k || n < 1 || n > k)
        throw DimError("outer transpose dimensions out of range for grid rank " + std::to_string(k));
    std::vector<std::size_t> dims(outer.dims().begin(), outer.dims().end());
    std::swap(dims[m - 1], dims[n - 1]);
    const Shape swapped(std::move(dims));

    std::vector<DenseTensor> blocks;
    blocks.reserve(bt.blocks().size());
    IndexTuple src;
    for_each_index(swapped, [&](const IndexTuple& q) {
        src = q;
        std::swap(src[m - 1], src[n - 1]);
        blocks.push_back(bt.blocks()[grid_position(outer, src)]);
    });
    return BlockTensor(swapped, bt.block_shape(), std::move(blocks));
}

}  // namespace gvec
