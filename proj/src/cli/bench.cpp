#include "gvec/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <ostream>

#include "gvec/indexmap.hpp"
#include "gvec/shiftvec.hpp"

namespace gvec::cli {

namespace {

std::uint64_t median_ns(const std::function<DenseTensor()>& op, std::size_t reps) {
    std::vector<std::uint64_t> samples;
    samples.reserve(reps);
    for (std::size_t i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        const DenseTensor out = op();
        const auto stop = std::chrono::steady_clock::now();
        // Keep the result observable so the call is not elided.
        if (out.size() == 0) return 0;
        samples.push_back(static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()));
    }
    std::sort(samples.begin(), samples.end());
    return samples[samples.size() / 2];
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<Shape>& shapes, std::size_t reps) {
    if (shapes.empty()) throw ShapeError("bench needs at least one shape");
    if (reps == 0) throw ShapeError("bench needs reps >= 1");

    std::vector<BenchRow> rows;
    for (const auto& shape : shapes) {
        std::vector<Scalar> data(shape.size());
        for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<Scalar>(i % 1000003);
        const DenseTensor t(shape, std::move(data), StorageOrder::LastIndexFastest);

        if (!tensors_equal(vec_k(t), vec_by_index(t)))
            throw PathMismatch("block and index paths disagree on shape " + shape.to_string());

        const std::pair<const char*, std::function<DenseTensor()>> paths[] = {
            {"block", [&] { return vec_k(t); }},
            {"index", [&] { return vec_by_index(t); }},
        };
        for (const auto& [name, op] : paths) {
            const std::uint64_t ns = median_ns(op, reps);
            const double eps = static_cast<double>(shape.size()) * 1e9 / static_cast<double>(std::max<std::uint64_t>(ns, 1));
            rows.push_back({shape, name, ns, eps});
        }
    }
    return rows;
}

void write_bench_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
    out << kBenchCsvHeader << "\n";
    const auto flags = out.flags();
    for (const auto& r : rows) {
        out << r.shape.to_string() << "," << r.path << "," << r.median_ns << "," << std::fixed
            << std::setprecision(0) << r.elements_per_sec << "\n";
    }
    out.flags(flags);
}

}  // namespace gvec::cli
