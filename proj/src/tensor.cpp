#include "gvec/tensor.hpp"

#include <algorithm>
#include <limits>
#include <iomanip>
#include <sstream>
#include <utility>

#include "gvec/errors.hpp"

namespace gvec {

namespace {

std::vector<std::size_t> non_unit(std::span<const std::size_t> dims) {
    std::vector<std::size_t> out;
    for (auto d : dims) {
        if (d != 1) out.push_back(d);
    }
    return out;
}

}  // namespace

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw ShapeError("shape must have rank >= 1");
    for (auto d : dims_) {
        if (d == 0) throw ShapeError("shape extents must be positive");
        if (size_ > std::numeric_limits<std::size_t>::max() / d)
            throw ShapeError("shape element count overflows 64-bit index arithmetic");
        size_ *= d;
    }
}

Shape::Shape(std::initializer_list<std::size_t> dims)
    : Shape(std::vector<std::size_t>(dims)) {}

std::size_t Shape::leading_product(std::size_t count) const {
    if (count > rank()) throw DimError("leading_product count exceeds rank");
    std::size_t p = 1;
    for (std::size_t i = 0; i < count; ++i) p *= dims_[i];
    return p;
}

bool Shape::contains(std::span<const std::size_t> idx) const noexcept {
    if (idx.size() != dims_.size()) return false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] >= dims_[i]) return false;
    }
    return true;
}

std::string Shape::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < dims_.size(); ++i) {
        if (i) s += 'x';
        s += std::to_string(dims_[i]);
    }
    return s;
}

Shape parse_shape(const std::string& text) {
    std::vector<std::size_t> dims;
    std::string token;
    auto flush = [&] {
        if (token.empty()) throw ShapeError("malformed shape '" + text + "'");
        if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw ShapeError("malformed shape '" + text + "'");
        try {
            dims.push_back(std::stoull(token));
        } catch (const std::out_of_range&) {
            throw ShapeError("shape extent out of range in '" + text + "'");
        }
        token.clear();
    };
    for (char c : text) {
        if (c == 'x' || c == ',') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    return Shape(std::move(dims));
}

DenseTensor::DenseTensor(Shape shape, std::vector<Scalar> data, StorageOrder order)
    : shape_(std::move(shape)), data_(std::move(data)), order_(order) {
    if (data_.size() != shape_.size()) {
        throw ShapeError("data length " + std::to_string(data_.size()) +
                         " does not match shape " + shape_.to_string() + " (" +
                         std::to_string(shape_.size()) + " elements)");
    }
}

DenseTensor make_tensor(Shape shape, std::vector<Scalar> data, StorageOrder order) {
    return DenseTensor(std::move(shape), std::move(data), order);
}

DenseTensor DenseTensor::generate(const Shape& shape,
                                  const std::function<Scalar(const IndexTuple&)>& fn) {
    std::vector<Scalar> data;
    data.reserve(shape.size());
    for_each_index(shape, [&](const IndexTuple& p) { data.push_back(fn(p)); });
    return DenseTensor(shape, std::move(data), StorageOrder::FirstIndexFastest);
}

std::size_t DenseTensor::offset(std::span<const std::size_t> idx) const noexcept {
    const auto dims = shape_.dims();
    const std::size_t k = dims.size();
    std::size_t off = 0;
    if (order_ == StorageOrder::LastIndexFastest) {
        for (std::size_t i = 0; i < k; ++i) off = off * dims[i] + idx[i];
    } else {
        for (std::size_t i = k; i-- > 0;) off = off * dims[i] + idx[i];
    }
    return off;
}

Scalar DenseTensor::get(std::span<const std::size_t> idx) const {
    if (!shape_.contains(idx)) {
        std::ostringstream os;
        os << "index (";
        for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
        os << ") out of range for shape " << shape_.to_string();
        throw IndexError(os.str());
    }
    return data_[offset(idx)];
}

std::vector<Scalar> DenseTensor::elements(StorageOrder order) const {
    if (order == order_) return data_;
    std::vector<Scalar> out(data_.size());
    // Walk the storage of the other order and scatter.
    DenseTensor target(shape_, std::vector<Scalar>(data_.size()), order);
    for_each_index(shape_, [&](const IndexTuple& p) { out[target.offset(p)] = data_[offset(p)]; });
    return out;
}

DenseTensor DenseTensor::with_unit_extents(Shape shape) const {
    if (non_unit(shape.dims()) != non_unit(shape_.dims()))
        throw ShapeError("cannot view " + shape_.to_string() + " as " + shape.to_string());
    return DenseTensor(std::move(shape), data_, order_);
}

void for_each_index(const Shape& shape, const std::function<void(const IndexTuple&)>& fn) {
    const auto dims = shape.dims();
    IndexTuple p(dims.size(), 0);
    for (std::size_t n = 0; n < shape.size(); ++n) {
        fn(p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (++p[i] < dims[i]) break;
            p[i] = 0;
        }
    }
}

DenseTensor transpose(const DenseTensor& t, std::size_t m, std::size_t n) {
    const std::size_t k = t.rank();
    if (m < 1 || m > k || n < 1 || n > k) {
        throw DimError("transpose dimensions (" + std::to_string(m) + "," + std::to_string(n) +
                       ") out of range for rank " + std::to_string(k));
    }
    std::vector<std::size_t> dims(t.shape().dims().begin(), t.shape().dims().end());
    std::swap(dims[m - 1], dims[n - 1]);
    IndexTuple src;
    return DenseTensor::generate(Shape(std::move(dims)), [&](const IndexTuple& p) {
        src = p;
        std::swap(src[m - 1], src[n - 1]);
        return t.get_unchecked(src);
    });
}

DenseTensor squeeze_trailing(const DenseTensor& t) {
    std::vector<std::size_t> dims(t.shape().dims().begin(), t.shape().dims().end());
    while (dims.size() > 1 && dims.back() == 1) dims.pop_back();
    return t.with_unit_extents(Shape(std::move(dims)));
}

bool tensors_equal(const DenseTensor& a, const DenseTensor& b) {
    if (a.shape() != b.shape()) return false;
    if (a.order() == b.order()) {
        return std::ranges::equal(a.storage(), b.storage());
    }
    return a.elements(StorageOrder::FirstIndexFastest) == b.elements(StorageOrder::FirstIndexFastest);
}

std::string to_string(const DenseTensor& t) {
    std::ostringstream os;
    os << std::setprecision(17) << "shape " << t.shape().to_string() << " column-major [";
    const auto v = t.elements(StorageOrder::FirstIndexFastest);
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace gvec
