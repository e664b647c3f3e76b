#pragma once

#include <cstdint>

#include "gvec/tensor.hpp"

namespace gvec {

/// Position m in the vectorized tensor.
struct LinearIndex {
    std::uint64_t value = 0;

    friend bool operator==(LinearIndex, LinearIndex) = default;
};

// Column-major mixed-radix index arithmetic. The radix of digit l is the
// extent M_l and its place value is M_0 * M_1 * ... * M_{l-1}, M_0 = 1.

/// m = sum_l p_l * (M_0 ... M_{l-1}). Throws IndexError for an invalid tuple.
LinearIndex linear_index(std::span<const std::size_t> idx, const Shape& shape);

/// p_l = (m / (M_0 ... M_{l-1})) % M_l. Throws IndexError when m >= size.
IndexTuple tuple_index(LinearIndex m, const Shape& shape);

/// Whether m equals the sum of its place values times its recovered digits.
bool decompose_check(LinearIndex m, const Shape& shape);

/// Vectorization built directly from linear_index: output[linear_index(p)]
/// = t(p) for every p.
DenseTensor vec_by_index(const DenseTensor& t);

/// Inverse of vec_by_index; result(tuple_index(m)) = a[m].
DenseTensor unvec_by_index(const DenseTensor& a, const Shape& target);

}  // namespace gvec
