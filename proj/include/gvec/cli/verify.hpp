#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "gvec/tensor.hpp"

namespace gvec::cli {

struct VerifyOptions {
    std::uint64_t seed = 1;
    std::size_t max_rank = 4;
    std::size_t max_extent = 3;
    std::size_t cases = 200;
};

/// The operations under test. Defaults are the library functions; tests
/// substitute faulty versions to exercise counterexample reporting.
struct Operations {
    std::function<DenseTensor(const DenseTensor&)> vec_block;
    std::function<DenseTensor(const DenseTensor&)> vec_index;
    std::function<DenseTensor(const DenseTensor&)> rvec_block;
    std::function<DenseTensor(const DenseTensor&)> shift;
    std::function<DenseTensor(const DenseTensor&, std::size_t)> shift_inverse;
    std::function<DenseTensor(const DenseTensor&, const Shape&)> vec_inverse;
    std::function<DenseTensor(const DenseTensor&, const Shape&)> rvec_inverse;
    std::function<DenseTensor(const DenseTensor&, const Shape&)> unvec_index;
};

Operations default_operations();

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    /// Seed, case number, input, expected and actual values of the first
    /// failing case. Empty when the check passed.
    std::string counterexample;
};

struct RunReport {
    std::uint64_t seed = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
};

RunReport run_verify(const VerifyOptions& options, const Operations& ops = default_operations());

void print_report(const RunReport& report, std::ostream& out);

/// Every shape of rank 1..max_rank with extents 1..max_extent.
std::vector<Shape> exhaustive_shapes(std::size_t max_rank, std::size_t max_extent);

/// Deterministic pseudo-random tensor for (seed, case_number). Ranks are
/// drawn from [min_rank, max_rank], extents from [1, max_extent], elements
/// are integers.
DenseTensor random_tensor(std::uint64_t seed, std::uint64_t case_number, std::size_t min_rank,
                          std::size_t max_rank, std::size_t max_extent);

/// Tensor of the given shape holding 1, 2, ..., size in row-major order.
DenseTensor iota_tensor(const Shape& shape);

}  // namespace gvec::cli
