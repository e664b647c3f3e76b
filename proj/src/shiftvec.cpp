#include "gvec/shiftvec.hpp"

#include <string>
#include <vector>

#include "gvec/blocking.hpp"
#include "gvec/errors.hpp"

namespace gvec {

namespace {

std::vector<std::size_t> dims_of(const DenseTensor& t) {
    return {t.shape().dims().begin(), t.shape().dims().end()};
}

// [1, ..., 1, extent] of the given rank.
Shape unit_grid_with_last(std::size_t rank, std::size_t extent) {
    std::vector<std::size_t> grid(rank, 1);
    grid.back() = extent;
    return Shape(std::move(grid));
}

void require_vector(const DenseTensor& a, const Shape& target) {
    if (a.rank() != 1)
        throw ShapeError("expected a rank-1 vector, got shape " + a.shape().to_string());
    if (a.size() != target.size())
        throw ShapeError("vector of length " + std::to_string(a.size()) + " cannot fill shape " +
                         target.to_string());
}

}  // namespace

DenseTensor shift(const DenseTensor& t) {
    const std::size_t k = t.rank();
    if (k < 2) throw DimError("shift needs rank >= 2, got rank " + std::to_string(k));

    const BlockTensor slabs = block(t, unit_grid_with_last(k, t.shape().back()));
    const DenseTensor merged = unblock(transpose_outer(slabs, k - 1, k));

    // merged is [M_1, ..., M_{k-1} M_k, 1]; only the emptied last dimension
    // is dropped so the rank falls by exactly one.
    auto dims = dims_of(merged);
    dims.pop_back();
    return merged.with_unit_extents(Shape(std::move(dims)));
}

DenseTensor shift_inverse(const DenseTensor& t, std::size_t restored_last_extent) {
    const std::size_t last = t.shape().back();
    if (restored_last_extent == 0 || last % restored_last_extent != 0)
        throw ShapeError("restored extent " + std::to_string(restored_last_extent) +
                         " does not divide last extent " + std::to_string(last));

    // Run the merge pipeline backwards: view as [.., L, 1], cut the merged
    // dimension into slabs, move the slabs back onto the last dimension.
    auto dims = dims_of(t);
    dims.push_back(1);
    const DenseTensor lifted = t.with_unit_extents(Shape(dims));
    const std::size_t k = dims.size();

    std::vector<std::size_t> grid(k, 1);
    grid[k - 2] = restored_last_extent;
    const BlockTensor slabs = block(lifted, Shape(std::move(grid)));
    return unblock(transpose_outer(slabs, k - 1, k));
}

DenseTensor vec_k(const DenseTensor& t) {
    DenseTensor current = t;
    while (current.rank() > 1) current = shift(current);
    return current;
}

DenseTensor vec_inverse(const DenseTensor& a, const Shape& target) {
    require_vector(a, target);
    // Undo the shifts last-first: the final shift merged M_1 with
    // M_2 ... M_k, so the first split restores M_2 ... M_k, and so on.
    DenseTensor current = a;
    for (std::size_t j = 1; j < target.rank(); ++j) {
        current = shift_inverse(current, target.size() / target.leading_product(j));
    }
    return current;
}

DenseTensor reverse_dims(const DenseTensor& t) {
    const std::size_t k = t.rank();
    DenseTensor current = t;
    for (std::size_t i = 1; i <= k / 2; ++i) current = transpose(current, i, k + 1 - i);
    return current;
}

DenseTensor rvec_k(const DenseTensor& t) { return vec_k(reverse_dims(t)); }

DenseTensor rvec_inverse(const DenseTensor& a, const Shape& target) {
    require_vector(a, target);
    std::vector<std::size_t> reversed(target.dims().rbegin(), target.dims().rend());
    return reverse_dims(vec_inverse(a, Shape(std::move(reversed))));
}

}  // namespace gvec
