#include "gvec/cli/verify.hpp"

#include <algorithm>
#include <ostream>
#include <random>
#include <sstream>

#include "gvec/blocking.hpp"
#include "gvec/errors.hpp"
#include "gvec/indexmap.hpp"
#include "gvec/kron2d.hpp"
#include "gvec/shiftvec.hpp"

namespace gvec::cli {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t stream, std::uint64_t case_number) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ (stream << 56)) + case_number));
}

Scalar random_integer(std::mt19937_64& rng) {
    return static_cast<Scalar>(std::uniform_int_distribution<int>(-999, 999)(rng));
}

Matrix2D random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    std::vector<Scalar> data(rows * cols);
    for (auto& v : data) v = static_cast<Scalar>(std::uniform_int_distribution<int>(-9, 9)(rng));
    return Matrix2D(rows, cols, std::move(data));
}

struct Case {
    std::string label;
    DenseTensor tensor;
};

class Check {
public:
    Check(std::string name, std::uint64_t seed) : seed_(seed) { result_.name = std::move(name); }

    /// Records one case; `describe` is only evaluated for the first failure.
    template <typename Describe>
    void expect(bool ok, const std::string& label, Describe&& describe) {
        ++result_.cases;
        if (ok || !result_.passed) return;
        result_.passed = false;
        std::ostringstream os;
        os << "seed=" << seed_ << " " << label << "\n" << describe();
        result_.counterexample = os.str();
    }

    // Exceptions escaping a case count as a failure of that case.
    template <typename Body>
    void run_case(const std::string& label, Body&& body) {
        try {
            body();
        } catch (const std::exception& e) {
            expect(false, label, [&] { return std::string("    threw: ") + e.what(); });
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    std::uint64_t seed_;
    CheckResult result_;
};

std::string mismatch(const DenseTensor& input, const DenseTensor& expected, const DenseTensor& got) {
    return "    input:    " + to_string(input) + "\n    expected: " + to_string(expected) +
           "\n    got:      " + to_string(got);
}

std::vector<Case> build_corpus(const VerifyOptions& opt) {
    std::vector<Case> corpus;
    for (const auto& s : exhaustive_shapes(opt.max_rank, opt.max_extent))
        corpus.push_back({"exhaustive shape " + s.to_string(), iota_tensor(s)});
    for (std::uint64_t i = 0; i < opt.cases; ++i)
        corpus.push_back({"random case " + std::to_string(i),
                          random_tensor(opt.seed, i, 1, opt.max_rank, opt.max_extent + 2)});
    return corpus;
}

std::vector<Scalar> sorted_elements(const DenseTensor& t) {
    auto v = t.elements(StorageOrder::FirstIndexFastest);
    std::sort(v.begin(), v.end());
    return v;
}

CheckResult check_golden_shift(const VerifyOptions& opt, const Operations& ops) {
    Check check("golden 2x2x3 shift and slab partition", opt.seed);
    const DenseTensor source = iota_tensor(Shape{2, 2, 3});
    const DenseTensor expected(Shape{2, 6}, {1, 4, 2, 5, 3, 6, 7, 10, 8, 11, 9, 12}, StorageOrder::LastIndexFastest);
    check.run_case("2x2x3 slice tensor", [&] {
        const DenseTensor got = ops.shift(source);
        check.expect(tensors_equal(got, expected), "2x2x3 slice tensor", [&] { return mismatch(source, expected, got); });
    });
    check.run_case("slab grid", [&] {
        const BlockTensor grid = block(source, Shape{1, 1, 3});
        for (std::size_t q = 0; q < 3; ++q) {
            const Scalar base = static_cast<Scalar>(q + 1);
            const DenseTensor want(Shape{2, 2, 1}, {base, base + 3, base + 6, base + 9}, StorageOrder::LastIndexFastest);
            const DenseTensor& got = grid.block_at({0, 0, q});
            check.expect(tensors_equal(got, want), "slab " + std::to_string(q),
                         [&] { return mismatch(source, want, got); });
        }
    });
    return check.take();
}

CheckResult check_shift_involution(const VerifyOptions& opt, const Operations& ops, const std::vector<Case>& corpus) {
    Check check("shift involution", opt.seed);
    for (const auto& c : corpus) {
        if (c.tensor.rank() < 2) continue;
        check.run_case(c.label, [&] {
            const DenseTensor got = ops.shift_inverse(ops.shift(c.tensor), c.tensor.shape().back());
            check.expect(tensors_equal(got, c.tensor), c.label, [&] { return mismatch(c.tensor, c.tensor, got); });
        });
    }
    return check.take();
}

// Re-blocking the merged tensor with the transposed grid and transposing
// the grid back restores the source at full rank.
CheckResult check_reblock_involution(const VerifyOptions& opt, const std::vector<Case>& corpus) {
    Check check("slab grid transpose is an involution", opt.seed);
    for (const auto& c : corpus) {
        const std::size_t k = c.tensor.rank();
        if (k < 2) continue;
        check.run_case(c.label, [&] {
            std::vector<std::size_t> grid(k, 1);
            grid[k - 1] = c.tensor.shape().back();
            const BlockTensor swapped = transpose_outer(block(c.tensor, Shape(grid)), k - 1, k);
            const DenseTensor merged = unblock(swapped);
            const DenseTensor got =
                unblock(transpose_outer(block(merged, swapped.outer_shape()), k - 1, k));
            check.expect(tensors_equal(got, c.tensor), c.label, [&] { return mismatch(c.tensor, c.tensor, got); });
        });
    }
    return check.take();
}

CheckResult check_two_paths(const VerifyOptions& opt, const Operations& ops, const std::vector<Case>& corpus) {
    Check check("block path vec equals index path vec", opt.seed);
    for (const auto& c : corpus) {
        check.run_case(c.label, [&] {
            const DenseTensor expected = ops.vec_index(c.tensor);
            const DenseTensor got = ops.vec_block(c.tensor);
            check.expect(tensors_equal(got, expected), c.label, [&] { return mismatch(c.tensor, expected, got); });
        });
    }
    return check.take();
}

CheckResult check_round_trips(const VerifyOptions& opt, const Operations& ops, const std::vector<Case>& corpus) {
    Check check("vec, rvec and index-map round trips", opt.seed);
    for (const auto& c : corpus) {
        check.run_case(c.label, [&] {
            const Shape& s = c.tensor.shape();
            const DenseTensor a = ops.vec_block(c.tensor);
            const DenseTensor back = ops.vec_inverse(a, s);
            check.expect(tensors_equal(back, c.tensor), c.label + " (vec_inverse)",
                         [&] { return mismatch(c.tensor, c.tensor, back); });
            const DenseTensor r = ops.rvec_block(c.tensor);
            const DenseTensor rback = ops.rvec_inverse(r, s);
            check.expect(tensors_equal(rback, c.tensor), c.label + " (rvec_inverse)",
                         [&] { return mismatch(c.tensor, c.tensor, rback); });
            const DenseTensor iback = ops.unvec_index(ops.vec_index(c.tensor), s);
            check.expect(tensors_equal(iback, c.tensor), c.label + " (unvec_by_index)",
                         [&] { return mismatch(c.tensor, c.tensor, iback); });
            // Any vector of the right length is the vec of exactly one tensor.
            const DenseTensor flat(Shape{s.size()}, c.tensor.elements(StorageOrder::LastIndexFastest),
                                   StorageOrder::FirstIndexFastest);
            const DenseTensor again = ops.vec_block(ops.vec_inverse(flat, s));
            check.expect(tensors_equal(again, flat), c.label + " (vec of vec_inverse)",
                         [&] { return mismatch(flat, flat, again); });
            const DenseTensor unique = ops.unvec_index(flat, s);
            const DenseTensor via_block = ops.vec_inverse(flat, s);
            check.expect(tensors_equal(via_block, unique), c.label + " (vec_inverse equals unvec_by_index)",
                         [&] { return mismatch(flat, unique, via_block); });
        });
    }
    return check.take();
}

CheckResult check_conservation(const VerifyOptions& opt, const Operations& ops, const std::vector<Case>& corpus) {
    Check check("vec and rvec permute elements", opt.seed);
    for (const auto& c : corpus) {
        check.run_case(c.label, [&] {
            const auto want = sorted_elements(c.tensor);
            const DenseTensor v = ops.vec_block(c.tensor);
            const DenseTensor r = ops.rvec_block(c.tensor);
            const bool ok = v.rank() == 1 && r.rank() == 1 && sorted_elements(v) == want && sorted_elements(r) == want;
            check.expect(ok, c.label, [&] { return "    input: " + to_string(c.tensor) + "\n    vec: " + to_string(v) +
                                                   "\n    rvec: " + to_string(r); });
        });
    }
    return check.take();
}

CheckResult check_index_map(const VerifyOptions& opt) {
    Check check("index map bijection and place-value decomposition", opt.seed);
    for (const auto& s : exhaustive_shapes(opt.max_rank, opt.max_extent)) {
        const std::string label = "shape " + s.to_string();
        check.run_case(label, [&] {
            std::vector<bool> seen(s.size(), false);
            for_each_index(s, [&](const IndexTuple& p) {
                const LinearIndex m = linear_index(p, s);
                const bool in_range = m.value < s.size();
                const bool fresh = in_range && !seen[m.value];
                if (in_range) seen[m.value] = true;
                const IndexTuple back = in_range ? tuple_index(m, s) : IndexTuple{};
                check.expect(fresh && back == p, label, [&] {
                    std::ostringstream os;
                    os << "    tuple maps to " << m.value << (fresh ? "" : " (collision or out of range)");
                    return os.str();
                });
            });
            for (std::uint64_t m = 0; m < s.size(); ++m) {
                check.expect(decompose_check({m}, s) && linear_index(tuple_index({m}, s), s).value == m,
                             label + " m=" + std::to_string(m), [] { return std::string("    decomposition failed"); });
            }
        });
    }
    return check.take();
}

CheckResult check_non_injective(const VerifyOptions& opt, const Operations& ops) {
    Check check("2x2 and 1x4 sources share a vec", opt.seed);
    for (std::uint64_t i = 0; i < std::max<std::size_t>(opt.cases / 2, 1); ++i) {
        auto rng = case_engine(opt.seed, 1, i);
        const Scalar a = random_integer(rng), b = random_integer(rng), c = random_integer(rng), d = random_integer(rng);
        const DenseTensor square(Shape{2, 2}, {a, b, c, d}, StorageOrder::LastIndexFastest);
        const DenseTensor row(Shape{1, 4}, {a, c, b, d}, StorageOrder::LastIndexFastest);
        const std::string label = "quadruple " + std::to_string(i);
        check.run_case(label, [&] {
            const DenseTensor vs = ops.vec_block(square);
            const DenseTensor vr = ops.vec_block(row);
            check.expect(tensors_equal(vs, vr) && square.shape() != row.shape(), label,
                         [&] { return mismatch(square, vr, vs); });
        });
    }
    return check.take();
}

CheckResult check_rvec_transpose(const VerifyOptions& opt, const Operations& ops) {
    Check check("rvec_2 equals vec_2 of the transpose", opt.seed);
    for (std::uint64_t i = 0; i < opt.cases; ++i) {
        auto rng = case_engine(opt.seed, 2, i);
        const std::size_t m = std::uniform_int_distribution<std::size_t>(1, opt.max_extent + 3)(rng);
        const std::size_t n = std::uniform_int_distribution<std::size_t>(1, opt.max_extent + 3)(rng);
        const DenseTensor x = random_matrix(rng, m, n).tensor();
        const std::string label = "matrix " + std::to_string(i);
        check.run_case(label, [&] {
            const DenseTensor want = ops.vec_block(transpose(x, 1, 2));
            const DenseTensor got = ops.rvec_block(x);
            check.expect(tensors_equal(got, want), label, [&] { return mismatch(x, want, got); });
            const DenseTensor classic = vec2(Matrix2D(x));
            check.expect(tensors_equal(ops.vec_block(x), classic), label + " (vec_2 is column stacking)",
                         [&] { return mismatch(x, classic, ops.vec_block(x)); });
        });
    }
    return check.take();
}

CheckResult check_vec_product_identity(const VerifyOptions& opt) {
    Check check("vec(OPQ) = (Q^T kron O) vec(P)", opt.seed);
    for (std::uint64_t i = 0; i < opt.cases; ++i) {
        auto rng = case_engine(opt.seed, 3, i);
        auto extent = [&] { return std::uniform_int_distribution<std::size_t>(1, 6)(rng); };
        const std::size_t r = extent(), s = extent(), t = extent(), u = extent();
        const Matrix2D o = random_matrix(rng, r, s);
        const Matrix2D p = random_matrix(rng, s, t);
        const Matrix2D q = random_matrix(rng, t, u);
        const std::string label = "triple " + std::to_string(i);
        check.run_case(label, [&] {
            const Scalar residual = vec_product_identity_residual(o, p, q);
            check.expect(residual == 0, label, [&] {
                return "    O: " + to_string(o.tensor()) + "\n    P: " + to_string(p.tensor()) +
                       "\n    Q: " + to_string(q.tensor()) + "\n    residual: " + std::to_string(residual);
            });
        });
    }
    for (std::size_t m = 1; m <= 6; ++m)
        for (std::size_t n = 1; n <= 6; ++n) {
            auto rng = case_engine(opt.seed, 4, m * 16 + n);
            const Matrix2D a = random_matrix(rng, m, n);
            const std::string label = "column identity " + std::to_string(m) + "x" + std::to_string(n);
            check.run_case(label, [&] {
                const Scalar residual = kron_column_identity_residual(a);
                check.expect(residual == 0, label, [&] { return "    A: " + to_string(a.tensor()); });
            });
        }
    return check.take();
}

CheckResult check_kron_inverse(const VerifyOptions& opt, const Operations& ops) {
    Check check("Kronecker closed-form inverse", opt.seed);
    const std::size_t per_shape = std::max<std::size_t>(opt.cases / 100, 1);
    for (std::size_t m = 1; m <= 8; ++m)
        for (std::size_t n = 1; n <= 8; ++n)
            for (std::size_t i = 0; i < per_shape; ++i) {
                auto rng = case_engine(opt.seed, 5, (m * 16 + n) * 1024 + i);
                const Matrix2D x = random_matrix(rng, m, n);
                const std::string label = std::to_string(m) + "x" + std::to_string(n) + " instance " + std::to_string(i);
                check.run_case(label, [&] {
                    const DenseTensor a = vec2(x);
                    const Matrix2D got = kron_inverse_2d(a, m, n);
                    check.expect(got == x, label, [&] { return mismatch(a, x.tensor(), got.tensor()); });
                    const DenseTensor oracle = ops.unvec_index(a, Shape{m, n});
                    check.expect(tensors_equal(got.tensor(), oracle), label + " (against index map)",
                                 [&] { return mismatch(a, oracle, got.tensor()); });
                });
            }
    return check.take();
}

}  // namespace

Operations default_operations() {
    return Operations{
        .vec_block = [](const DenseTensor& t) { return vec_k(t); },
        .vec_index = [](const DenseTensor& t) { return vec_by_index(t); },
        .rvec_block = [](const DenseTensor& t) { return rvec_k(t); },
        .shift = [](const DenseTensor& t) { return gvec::shift(t); },
        .shift_inverse = [](const DenseTensor& t, std::size_t e) { return gvec::shift_inverse(t, e); },
        .vec_inverse = [](const DenseTensor& a, const Shape& s) { return gvec::vec_inverse(a, s); },
        .rvec_inverse = [](const DenseTensor& a, const Shape& s) { return gvec::rvec_inverse(a, s); },
        .unvec_index = [](const DenseTensor& a, const Shape& s) { return unvec_by_index(a, s); },
    };
}

bool RunReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<Shape> exhaustive_shapes(std::size_t max_rank, std::size_t max_extent) {
    std::vector<Shape> shapes;
    for (std::size_t rank = 1; rank <= max_rank; ++rank) {
        const Shape choices(std::vector<std::size_t>(rank, max_extent));
        for_each_index(choices, [&](const IndexTuple& p) {
            std::vector<std::size_t> dims(p);
            for (auto& d : dims) ++d;
            shapes.emplace_back(std::move(dims));
        });
    }
    return shapes;
}

DenseTensor random_tensor(std::uint64_t seed, std::uint64_t case_number, std::size_t min_rank,
                          std::size_t max_rank, std::size_t max_extent) {
    auto rng = case_engine(seed, 0, case_number);
    const std::size_t rank = std::uniform_int_distribution<std::size_t>(min_rank, max_rank)(rng);
    std::vector<std::size_t> dims(rank);
    for (auto& d : dims) d = std::uniform_int_distribution<std::size_t>(1, max_extent)(rng);
    Shape shape(std::move(dims));
    std::vector<Scalar> data(shape.size());
    for (auto& v : data) v = random_integer(rng);
    const auto order = std::bernoulli_distribution(0.5)(rng) ? StorageOrder::LastIndexFastest
                                                              : StorageOrder::FirstIndexFastest;
    return DenseTensor(std::move(shape), std::move(data), order);
}

DenseTensor iota_tensor(const Shape& shape) {
    std::vector<Scalar> data(shape.size());
    for (std::size_t i = 0; i < data.size(); ++i) data[i] = static_cast<Scalar>(i + 1);
    return DenseTensor(shape, std::move(data), StorageOrder::LastIndexFastest);
}

RunReport run_verify(const VerifyOptions& options, const Operations& ops) {
    if (options.max_rank < 1 || options.max_extent < 1)
        throw ShapeError("verify needs max-rank >= 1 and max-extent >= 1");
    const auto corpus = build_corpus(options);
    RunReport report;
    report.seed = options.seed;
    report.checks.push_back(check_golden_shift(options, ops));
    report.checks.push_back(check_shift_involution(options, ops, corpus));
    report.checks.push_back(check_reblock_involution(options, corpus));
    report.checks.push_back(check_two_paths(options, ops, corpus));
    report.checks.push_back(check_round_trips(options, ops, corpus));
    report.checks.push_back(check_conservation(options, ops, corpus));
    report.checks.push_back(check_index_map(options));
    report.checks.push_back(check_non_injective(options, ops));
    report.checks.push_back(check_rvec_transpose(options, ops));
    report.checks.push_back(check_vec_product_identity(options));
    report.checks.push_back(check_kron_inverse(options, ops));
    return report;
}

void print_report(const RunReport& report, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& c : report.checks) {
        out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)\n";
        if (!c.passed) {
            ++failed;
            out << "  counterexample: " << c.counterexample << "\n";
        }
    }
    out << (failed == 0 ? "all " + std::to_string(report.checks.size()) + " checks passed"
                        : std::to_string(failed) + " of " + std::to_string(report.checks.size()) + " checks failed")
        << " (seed " << report.seed << ")\n";
}

}  // namespace gvec::cli
