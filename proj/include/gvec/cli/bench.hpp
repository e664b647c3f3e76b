#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gvec/errors.hpp"
#include "gvec/tensor.hpp"

namespace gvec::cli {

/// The block path and the index path disagreed on a bench input.
class PathMismatch : public Error {
public:
    using Error::Error;
};

struct BenchRow {
    Shape shape;
    std::string path;  // "block" or "index"
    std::uint64_t median_ns = 0;
    double elements_per_sec = 0;
};

/// Times vec_k against vec_by_index on an integer tensor of each shape.
/// Outputs are compared before anything is timed; a mismatch throws
/// PathMismatch. Throws ShapeError when `shapes` is empty or reps is 0.
std::vector<BenchRow> run_bench(const std::vector<Shape>& shapes, std::size_t reps);

inline constexpr const char* kBenchCsvHeader = "shape,path,median_ns,elements_per_sec";

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out);

}  // namespace gvec::cli
