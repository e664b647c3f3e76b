#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gvec/cli/commands.hpp"
#include "gvec/cli/tensor_file.hpp"
#include "support/oracles.hpp"

using namespace gvec;
using namespace gvec::cli;

namespace {

namespace fs = std::filesystem;

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run_tool(std::vector<std::string> args) {
    args.insert(args.begin(), "gvec");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("gvec_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path file(const std::string& name, const std::string& content) const {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }
    fs::path path(const std::string& name) const { return dir_ / name; }

    fs::path slices() const {
        return file("slices.json", R"({"shape":[2,2,3],"data":[1,2,3,4,5,6,7,8,9,10,11,12]})");
    }

    fs::path dir_;
};

}  // namespace

TEST_F(CliTest, VecDefaultAndRow) {
    auto r = run_tool({"vec", slices().string(), "-"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "{\"shape\":[12],\"order\":\"row-major\",\"data\":[1,7,4,10,2,8,5,11,3,9,6,12]}\n");
    r = run_tool({"vec", slices().string(), "-", "--row"});
    EXPECT_EQ(r.out, "{\"shape\":[12],\"order\":\"row-major\",\"data\":[1,2,3,4,5,6,7,8,9,10,11,12]}\n");
}

TEST_F(CliTest, VecPathsAreByteIdentical) {
    for (bool row : {false, true}) {
        std::vector<std::string> common{"vec", slices().string()};
        auto block_args = common, index_args = common;
        block_args.push_back(path("b.json").string());
        index_args.push_back(path("i.json").string());
        block_args.insert(block_args.end(), {"--path", "block"});
        index_args.insert(index_args.end(), {"--path", "index"});
        if (row) {
            block_args.push_back("--row");
            index_args.push_back("--row");
        }
        ASSERT_EQ(run_tool(block_args).status, 0);
        ASSERT_EQ(run_tool(index_args).status, 0);
        EXPECT_EQ(slurp(path("b.json")), slurp(path("i.json")));
    }
    EXPECT_EQ(run_tool({"vec", slices().string(), "-", "--path", "diagonal"}).status, 1);
}

TEST_F(CliTest, UnvecVariants) {
    const auto v = file("v.json", R"({"shape":[4],"data":[1,3,2,4]})");
    const std::string want = "{\"shape\":[2,2],\"order\":\"row-major\",\"data\":[1,2,3,4]}\n";
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2,2"}).out, want);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2x2"}).out, want);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2x2", "--kron"}).out, want);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2x2", "--path", "index"}).out, want);

    const auto rv = file("rv.json", R"({"shape":[6],"data":[1,2,3,4,5,6]})");
    const std::string rwant = "{\"shape\":[2,3],\"order\":\"row-major\",\"data\":[1,2,3,4,5,6]}\n";
    EXPECT_EQ(run_tool({"unvec", rv.string(), "-", "--shape", "2x3", "--row"}).out, rwant);
    EXPECT_EQ(run_tool({"unvec", rv.string(), "-", "--shape", "2x3", "--row", "--kron"}).out, rwant);
    EXPECT_EQ(run_tool({"unvec", rv.string(), "-", "--shape", "2x3", "--row", "--path", "index"}).out, rwant);
}

TEST_F(CliTest, UnvecErrors) {
    const auto v = file("v.json", R"({"shape":[4],"data":[1,3,2,4]})");
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "3x2"}).status, 1);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2x2x1", "--kron"}).status, 1);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-"}).status, 1);
    EXPECT_EQ(run_tool({"unvec", slices().string(), "-", "--shape", "12"}).status, 1);
    EXPECT_EQ(run_tool({"unvec", v.string(), "-", "--shape", "2x2", "--kron", "--path", "index"}).status, 1);
}

TEST_F(CliTest, VecThenUnvecRestoresFile) {
    const auto src = slices();
    ASSERT_EQ(run_tool({"vec", src.string(), path("v.json").string()}).status, 0);
    ASSERT_EQ(run_tool({"unvec", path("v.json").string(), path("back.json").string(), "--shape", "2x2x3"}).status, 0);
    EXPECT_EQ(slurp(path("back.json")),
              "{\"shape\":[2,2,3],\"order\":\"row-major\",\"data\":[1,2,3,4,5,6,7,8,9,10,11,12]}\n");
}

TEST_F(CliTest, ShiftAndInverse) {
    ASSERT_EQ(run_tool({"shift", slices().string(), path("s.json").string()}).status, 0);
    EXPECT_EQ(slurp(path("s.json")), "{\"shape\":[2,6],\"order\":\"row-major\",\"data\":[1,4,2,5,3,6,7,10,8,11,9,12]}\n");
    auto r = run_tool({"shift", path("s.json").string(), "-", "--inverse", "--last-extent", "3"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "{\"shape\":[2,2,3],\"order\":\"row-major\",\"data\":[1,2,3,4,5,6,7,8,9,10,11,12]}\n");
}

TEST_F(CliTest, ShiftTwiceOnSquareLastPairViaInverse) {
    const auto sq = file("sq.json", R"({"shape":[2,3,3],"data":[1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16,17,18]})");
    ASSERT_EQ(run_tool({"shift", sq.string(), path("m.json").string()}).status, 0);
    ASSERT_EQ(run_tool({"shift", path("m.json").string(), path("b.json").string(), "--inverse", "--last-extent", "3"})
                  .status,
              0);
    EXPECT_TRUE(tensors_equal(read_tensor(path("b.json")), read_tensor(sq)));
}

TEST_F(CliTest, ShiftErrors) {
    const auto v = file("v.json", R"({"shape":[4],"data":[1,3,2,4]})");
    EXPECT_EQ(run_tool({"shift", v.string(), "-"}).status, 1);
    EXPECT_EQ(run_tool({"shift", slices().string(), "-", "--inverse", "--last-extent", "5"}).status, 1);
    EXPECT_EQ(run_tool({"shift", slices().string(), "-", "--inverse"}).status, 1);
    EXPECT_EQ(run_tool({"shift", slices().string(), "-", "--last-extent", "3"}).status, 1);
}

TEST_F(CliTest, BadFilesExitOne) {
    const auto broken = file("broken.json", "{\"shape\":[2],\n\"data\":[1,2");
    const auto r = run_tool({"vec", broken.string(), "-"});
    EXPECT_EQ(r.status, 1);
    EXPECT_NE(r.err.find("line 2"), std::string::npos) << r.err;
    EXPECT_EQ(run_tool({"vec", path("missing.json").string(), "-"}).status, 1);
    EXPECT_EQ(run_tool({"vec", file("short.json", R"({"shape":[3],"data":[1]})").string(), "-"}).status, 1);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run_tool({}).status, 1);
    EXPECT_EQ(run_tool({"frobnicate"}).status, 1);
    EXPECT_EQ(run_tool({"vec"}).status, 1);
    EXPECT_EQ(run_tool({"--help"}).status, 0);
}

TEST_F(CliTest, VerifyPassesAndReportsSeed) {
    auto r = run_tool({"verify", "--seed", "77", "--cases", "50"});
    EXPECT_EQ(r.status, 0) << r.out;
    EXPECT_NE(r.out.find("(seed 77)"), std::string::npos);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_EQ(run_tool({"verify", "--max-rank", "2"}).status, 0);
    EXPECT_EQ(run_tool({"verify", "--max-rank", "0"}).status, 1);
}

TEST_F(CliTest, BenchCsv) {
    auto r = run_tool({"bench", "--shapes", "2x2x3", "--reps", "3"});
    ASSERT_EQ(r.status, 0) << r.err;
    std::istringstream lines(r.out);
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(lines, line)) rows.push_back(line);
    ASSERT_EQ(rows.size(), 3u);
    EXPECT_EQ(rows[0], "shape,path,median_ns,elements_per_sec");
    EXPECT_EQ(rows[1].rfind("2x2x3,block,", 0), 0u);
    EXPECT_EQ(rows[2].rfind("2x2x3,index,", 0), 0u);

    EXPECT_EQ(run_tool({"bench", "--shapes", "2x2x3,3x4", "--reps", "1"}).status, 0);
    EXPECT_EQ(run_tool({"bench"}).status, 1);
    EXPECT_EQ(run_tool({"bench", "--shapes", ""}).status, 1);
    EXPECT_EQ(run_tool({"bench", "--shapes", "2x0"}).status, 1);
    EXPECT_EQ(run_tool({"bench", "--shapes", "2x2", "--reps", "0"}).status, 1);
}

// Exit statuses as seen by a shell.
TEST(CliProcessTest, ExitStatuses) {
    const std::string tool = GVEC_TOOL_PATH;
    auto status_of = [&](const std::string& args) {
        const int raw = std::system((tool + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status_of("verify --cases 20"), 0);
    EXPECT_EQ(status_of("shift /nonexistent.json -"), 1);
    EXPECT_EQ(status_of("bench"), 1);
    EXPECT_EQ(status_of(""), 1);
}
