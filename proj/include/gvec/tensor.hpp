#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gvec {

using Scalar = double;

/// 0-indexed multi-index (p_1, ..., p_k).
using IndexTuple = std::vector<std::size_t>;

/// Ordered list of positive extents M_1..M_k, rank >= 1.
///
/// The total element count is checked against 64-bit overflow at
/// construction, so every product of leading extents fits as well.
class Shape {
public:
    Shape(std::vector<std::size_t> dims);
    Shape(std::initializer_list<std::size_t> dims);

    std::size_t rank() const noexcept { return dims_.size(); }
    std::size_t size() const noexcept { return size_; }
    std::span<const std::size_t> dims() const noexcept { return dims_; }

    /// Extent of the 0-based axis `axis`.
    std::size_t operator[](std::size_t axis) const { return dims_.at(axis); }
    std::size_t front() const noexcept { return dims_.front(); }
    std::size_t back() const noexcept { return dims_.back(); }

    /// Product of the first `count` extents; 1 for count == 0 (the M_0 = 1
    /// convention used by column-major linearization).
    std::size_t leading_product(std::size_t count) const;

    bool contains(std::span<const std::size_t> idx) const noexcept;

    /// "2x2x3"
    std::string to_string() const;

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::size_t> dims_;
    std::size_t size_ = 1;
};

Shape parse_shape(const std::string& text);

enum class StorageOrder {
    FirstIndexFastest,  // column-major
    LastIndexFastest,   // row-major
};

/// Immutable dense k-dimensional tensor.
///
/// The storage order only affects how the flat buffer passed at
/// construction is interpreted; every operation is defined on
/// (shape, IndexTuple).
class DenseTensor {
public:
    DenseTensor(Shape shape, std::vector<Scalar> data, StorageOrder order);

    /// Tensor whose element at p is fn(p), stored first-index-fastest.
    static DenseTensor generate(const Shape& shape,
                                const std::function<Scalar(const IndexTuple&)>& fn);

    const Shape& shape() const noexcept { return shape_; }
    std::size_t rank() const noexcept { return shape_.rank(); }
    std::size_t size() const noexcept { return shape_.size(); }
    StorageOrder order() const noexcept { return order_; }
    std::span<const Scalar> storage() const noexcept { return data_; }

    /// Throws IndexError when idx is not valid for shape().
    Scalar get(std::span<const std::size_t> idx) const;
    Scalar get(std::initializer_list<std::size_t> idx) const {
        return get(std::span<const std::size_t>(idx.begin(), idx.size()));
    }

    /// No bounds checking.
    Scalar get_unchecked(std::span<const std::size_t> idx) const noexcept {
        return data_[offset(idx)];
    }

    /// Elements enumerated in the requested order.
    std::vector<Scalar> elements(StorageOrder order) const;

    /// Same elements under a shape that differs only by inserted or removed
    /// extents equal to 1. Throws ShapeError otherwise.
    DenseTensor with_unit_extents(Shape shape) const;

private:
    std::size_t offset(std::span<const std::size_t> idx) const noexcept;

    Shape shape_;
    std::vector<Scalar> data_;
    StorageOrder order_;
};

DenseTensor make_tensor(Shape shape, std::vector<Scalar> data, StorageOrder order);

/// Visits every index of `shape` with the first index varying fastest.
void for_each_index(const Shape& shape, const std::function<void(const IndexTuple&)>& fn);

/// Swaps dimensions m and n. Dimension numbers are 1-based.
DenseTensor transpose(const DenseTensor& t, std::size_t m, std::size_t n);

/// Drops every trailing extent equal to 1, keeping rank >= 1.
DenseTensor squeeze_trailing(const DenseTensor& t);

/// Exact rank, extents and element comparison.
bool tensors_equal(const DenseTensor& a, const DenseTensor& b);

std::string to_string(const DenseTensor& t);

}  // namespace gvec
