#include "gvec/indexmap.hpp"

#include <string>
#include <vector>

#include "gvec/errors.hpp"

namespace gvec {

namespace {

std::vector<std::uint64_t> place_values(const Shape& shape) {
    std::vector<std::uint64_t> place(shape.rank());
    for (std::size_t l = 0; l < shape.rank(); ++l) place[l] = shape.leading_product(l);
    return place;
}

std::uint64_t combine(std::span<const std::uint64_t> place, std::span<const std::size_t> idx) {
    std::uint64_t m = 0;
    for (std::size_t l = 0; l < idx.size(); ++l) m += place[l] * idx[l];
    return m;
}

void split(std::uint64_t m, std::span<const std::uint64_t> place, const Shape& shape, IndexTuple& p) {
    for (std::size_t l = 0; l < p.size(); ++l) p[l] = (m / place[l]) % shape[l];
}

}  // namespace

LinearIndex linear_index(std::span<const std::size_t> idx, const Shape& shape) {
    if (!shape.contains(idx)) throw IndexError("index tuple invalid for shape " + shape.to_string());
    return {combine(place_values(shape), idx)};
}

IndexTuple tuple_index(LinearIndex m, const Shape& shape) {
    if (m.value >= shape.size())
        throw IndexError("linear index " + std::to_string(m.value) + " out of range for shape " +
                         shape.to_string());
    IndexTuple p(shape.rank());
    split(m.value, place_values(shape), shape, p);
    return p;
}

bool decompose_check(LinearIndex m, const Shape& shape) {
    const auto place = place_values(shape);
    std::uint64_t sum = 0;
    for (std::size_t l = 0; l < place.size(); ++l) sum += place[l] * ((m.value / place[l]) % shape[l]);
    return sum == m.value;
}

DenseTensor vec_by_index(const DenseTensor& t) {
    const auto place = place_values(t.shape());
    std::vector<Scalar> out(t.size());
    for_each_index(t.shape(), [&](const IndexTuple& p) { out[combine(place, p)] = t.get_unchecked(p); });
    return DenseTensor(Shape{t.size()}, std::move(out), StorageOrder::FirstIndexFastest);
}

DenseTensor unvec_by_index(const DenseTensor& a, const Shape& target) {
    if (a.rank() != 1)
        throw ShapeError("expected a rank-1 vector, got shape " + a.shape().to_string());
    if (a.size() != target.size())
        throw ShapeError("vector of length " + std::to_string(a.size()) + " cannot fill shape " +
                         target.to_string());
    // Scatter into row-major storage so the result is not a copy of `a`.
    const auto place = place_values(target);
    const auto source = a.storage();
    std::vector<Scalar> out(target.size());
    IndexTuple p(target.rank());
    for (std::size_t m = 0; m < source.size(); ++m) {
        split(m, place, target, p);
        std::size_t off = 0;
        for (std::size_t i = 0; i < p.size(); ++i) off = off * target[i] + p[i];
        out[off] = source[m];
    }
    return DenseTensor(target, std::move(out), StorageOrder::LastIndexFastest);
}

}  // namespace gvec
