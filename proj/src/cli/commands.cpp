#include "gvec/cli/commands.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gvec/cli/bench.hpp"
#include "gvec/cli/tensor_file.hpp"
#include "gvec/cli/verify.hpp"
#include "gvec/errors.hpp"
#include "gvec/indexmap.hpp"
#include "gvec/kron2d.hpp"
#include "gvec/shiftvec.hpp"

namespace gvec::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

enum class Path { Block, Index };

struct VecArgs {
    std::string input;
    std::string output;
    bool row = false;
    Path path = Path::Block;
};

struct UnvecArgs {
    std::string input;
    std::string output;
    std::string shape;
    bool row = false;
    bool kron = false;
    Path path = Path::Block;
};

struct ShiftArgs {
    std::string input;
    std::string output;
    bool inverse = false;
    std::optional<std::size_t> last_extent;
};

struct BenchArgs {
    std::vector<std::string> shapes;
    std::size_t reps = 5;
};

void emit(const DenseTensor& t, const std::string& output, std::ostream& out) {
    if (output == "-") {
        out << serialize_tensor(t);
    } else {
        write_tensor(t, output);
    }
}

Shape reversed(const Shape& s) { return Shape(std::vector<std::size_t>(s.dims().rbegin(), s.dims().rend())); }

int cmd_vec(const VecArgs& args, std::ostream& out) {
    const DenseTensor t = read_tensor(args.input);
    DenseTensor v = t;
    if (args.path == Path::Block) {
        v = args.row ? rvec_k(t) : vec_k(t);
    } else {
        v = vec_by_index(args.row ? reverse_dims(t) : t);
    }
    emit(v, args.output, out);
    return kExitOk;
}

int cmd_unvec(const UnvecArgs& args, std::ostream& out) {
    const Shape target = parse_shape(args.shape);
    if (args.kron && target.rank() != 2)
        throw UsageError("--kron needs exactly two shape entries, got " + target.to_string());
    const DenseTensor a = read_tensor(args.input);
    if (a.rank() != 1) throw ShapeError("unvec input must be rank 1, got shape " + a.shape().to_string());
    if (a.size() != target.size())
        throw ShapeError("input of length " + std::to_string(a.size()) + " cannot fill shape " + target.to_string());

    std::optional<DenseTensor> result;
    if (args.kron) {
        result = args.row ? transpose(kron_inverse_2d(a, target[1], target[0]).tensor(), 1, 2)
                          : kron_inverse_2d(a, target[0], target[1]).tensor();
    } else if (args.path == Path::Block) {
        result = args.row ? rvec_inverse(a, target) : vec_inverse(a, target);
    } else {
        result = args.row ? reverse_dims(unvec_by_index(a, reversed(target))) : unvec_by_index(a, target);
    }
    emit(*result, args.output, out);
    return kExitOk;
}

int cmd_shift(const ShiftArgs& args, std::ostream& out) {
    if (args.inverse && !args.last_extent) throw UsageError("--inverse needs --last-extent");
    const DenseTensor t = read_tensor(args.input);
    emit(args.inverse ? shift_inverse(t, *args.last_extent) : shift(t), args.output, out);
    return kExitOk;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out) {
    const RunReport report = run_verify(options);
    print_report(report, out);
    return report.passed() ? kExitOk : kExitInvariant;
}

int cmd_bench(const BenchArgs& args, std::ostream& out) {
    if (args.shapes.empty()) throw UsageError("--shapes needs at least one shape");
    std::vector<Shape> shapes;
    for (const auto& s : args.shapes) {
        if (s.find(',') != std::string::npos) throw UsageError("malformed shape '" + s + "'");
        shapes.push_back(parse_shape(s));
    }
    write_bench_csv(run_bench(shapes, args.reps), out);
    return kExitOk;
}

void add_path_option(CLI::App* sub, Path& path) {
    const std::map<std::string, Path> names{{"block", Path::Block}, {"index", Path::Index}};
    sub->add_option("--path", path, "Computation path: block (shift composition) or index (index arithmetic)")
        ->transform(CLI::CheckedTransformer(names, CLI::ignore_case));
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized tensor vectorization and its inverses"};
    app.name("gvec");
    app.require_subcommand(1);

    VecArgs vec_args;
    auto* vec = app.add_subcommand("vec", "Vectorize a tensor file (column stacking, or row-wise with --row)");
    vec->add_option("input", vec_args.input, "Input tensor file")->required();
    vec->add_option("output", vec_args.output, "Output tensor file, - for stdout")->required();
    vec->add_flag("--row", vec_args.row, "Row-wise vectorization");
    add_path_option(vec, vec_args.path);

    UnvecArgs unvec_args;
    auto* unvec = app.add_subcommand("unvec", "Rebuild a tensor of a given shape from its vectorization");
    unvec->add_option("input", unvec_args.input, "Input rank-1 tensor file")->required();
    unvec->add_option("output", unvec_args.output, "Output tensor file, - for stdout")->required();
    unvec->add_option("--shape", unvec_args.shape, "Target shape, e.g. 2x2x3 or 2,2,3")->required();
    unvec->add_flag("--row", unvec_args.row, "Invert the row-wise vectorization");
    auto* kron = unvec->add_flag("--kron", unvec_args.kron, "Use the Kronecker closed form (2-D shapes only)");
    add_path_option(unvec, unvec_args.path);
    kron->excludes(unvec->get_option("--path"));

    ShiftArgs shift_args;
    auto* shift_cmd = app.add_subcommand("shift", "Merge the last two dimensions of a tensor");
    shift_cmd->add_option("input", shift_args.input, "Input tensor file")->required();
    shift_cmd->add_option("output", shift_args.output, "Output tensor file, - for stdout")->required();
    auto* inverse = shift_cmd->add_flag("--inverse", shift_args.inverse, "Split the last dimension instead");
    shift_cmd->add_option("--last-extent", shift_args.last_extent, "Extent of the restored last dimension")
        ->check(CLI::PositiveNumber)
        ->needs(inverse);

    VerifyOptions verify_args;
    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    verify->add_option("--seed", verify_args.seed, "Random seed")->capture_default_str();
    verify->add_option("--max-rank", verify_args.max_rank, "Largest rank of the exhaustive corpus")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--max-extent", verify_args.max_extent, "Largest extent of the exhaustive corpus")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--cases", verify_args.cases, "Random cases per check")->capture_default_str();

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "Time the block path against the index path");
    bench->add_option("--shapes", bench_args.shapes, "Comma-separated shapes, e.g. 2x2x3,32x32x32")
        ->required()
        ->delimiter(',');
    bench->add_option("--reps", bench_args.reps, "Repetitions per path")->check(CLI::PositiveNumber)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*vec) return cmd_vec(vec_args, out);
        if (*unvec) return cmd_unvec(unvec_args, out);
        if (*shift_cmd) return cmd_shift(shift_args, out);
        if (*verify) return cmd_verify(verify_args, out);
        if (*bench) return cmd_bench(bench_args, out);
    } catch (const PathMismatch& e) {
        err << "gvec: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const Error& e) {
        err << "gvec: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace gvec::cli
