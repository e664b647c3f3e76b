#pragma once

#include "gvec/tensor.hpp"

namespace gvec {

/// Merges the last two dimensions of a rank >= 2 tensor by blocking along
/// the last dimension, transposing the block grid over its last two
/// dimensions and concatenating. The result has shape
/// [M_1, ..., M_{k-2}, M_{k-1} * M_k] and element (.., p_{k-1} + M_{k-1} p_k)
/// equals the source element (.., p_{k-1}, p_k).
///
/// Throws DimError for rank < 2.
DenseTensor shift(const DenseTensor& t);

/// Undoes shift: splits the last extent L into (L / restored_last_extent,
/// restored_last_extent). Throws ShapeError when the extent does not divide L.
DenseTensor shift_inverse(const DenseTensor& t, std::size_t restored_last_extent);

/// Generalized vectorization: shift applied at rank k, then k-1, ... down
/// to 2. Rank-1 input is returned unchanged. Always yields rank 1.
DenseTensor vec_k(const DenseTensor& t);

/// The unique tensor of shape `target` whose vec_k is `a`.
/// Throws ShapeError on size mismatch or if `a` is not rank 1.
DenseTensor vec_inverse(const DenseTensor& a, const Shape& target);

/// Transposes opposite dimensions (1,k), (2,k-1), ... k/2 times.
DenseTensor reverse_dims(const DenseTensor& t);

/// Row-wise vectorization, vec_k(reverse_dims(t)).
DenseTensor rvec_k(const DenseTensor& t);

DenseTensor rvec_inverse(const DenseTensor& a, const Shape& target);

}  // namespace gvec
