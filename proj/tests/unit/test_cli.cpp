#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int status = 0;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = sesqui::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct GoldenCase {
    std::string name;
    std::vector<std::string> args;
    int status = 0;
};

std::ostream& operator<<(std::ostream& os, const GoldenCase& c) { return os << c.name; }

const std::vector<GoldenCase>& golden_cases() {
    static const std::vector<GoldenCase> cases{
        {"scatter_pentagon.txt", {"scatter", "--m", "1,0", "--m", "0,1", "--k", "1", "--k", "1", "--order", "8"}},
        {"scatter_pentagon.json",
         {"--format", "json", "scatter", "--m", "1,0", "--m", "0,1", "--k", "1", "--k", "1", "--order", "8"}},
        {"scatter_pentagon.svg",
         {"--format", "svg", "scatter", "--m", "1,0", "--m", "0,1", "--order", "4"}},
        {"scatter_d22.json",
         {"--format", "json", "scatter", "--m", "1,0", "--m", "0,1", "--k", "2", "--k", "2", "--order", "9"}},
        {"scatter_t0.txt", {"scatter", "--m", "-1,-3", "--m", "1,0", "--k", "1", "--k", "1", "--order", "9"}},
        {"staircase_5.txt", {"staircase", "--a", "5/1"}},
        {"staircase_8.txt", {"staircase", "--a", "8/1"}},
        {"staircase_9.txt", {"staircase", "--a", "9/1"}},
        {"staircase_13_2.json", {"--format", "json", "staircase", "--a", "13/2"}},
        {"staircase_range.csv", {"--format", "csv", "staircase", "--range", "1:9", "--step", "1/2"}},
        {"staircase_range.json", {"--format", "json", "staircase", "--range", "6:7", "--step", "1/4"}},
        {"staircase_range.svg", {"--format", "svg", "staircase", "--range", "1:9"}},
        {"classify_13_2.txt", {"classify", "--p", "13", "--q", "2"}},
        {"classify_8_1.json", {"--format", "json", "classify", "--p", "8", "--q", "1"}},
        {"classify_3_1.txt", {"classify", "--p", "3", "--q", "1"}},
        {"mutate_word_1.txt", {"mutate", "--model", "-1,-3;1,0", "--word", "1"}},
        {"mutate_compare.txt", {"mutate", "--model", "-1,-3;1,0", "--word", "1,2", "--compare-original"}},
        {"mutate_compare_single.txt", {"mutate", "--model", "-1,-3;1,0", "--word", "1", "--compare-original"}},
        {"mutate_orbit_0.txt", {"mutate", "--model", "-1,-3;1,0", "--orbit-depth", "0"}},
        {"mutate_orbit_3.dot", {"--format", "dot", "mutate", "--model", "-1,-3;1,0", "--orbit-depth", "3"}},
        {"mutate_orbit_3.json", {"--format", "json", "mutate", "--model", "-1,-3;1,0", "--orbit-depth", "3"}},
        {"verify_12.json", {"--format", "json", "verify", "--order", "12"}},
        {"verify_12.txt", {"verify", "--order", "12"}},
        {"verify_3.txt", {"verify", "--order", "3"}},
    };
    return cases;
}

class Golden : public ::testing::TestWithParam<GoldenCase> {};

} // namespace

TEST_P(Golden, MatchesFile) {
    const GoldenCase& c = GetParam();
    Result r = run(c.args);
    ASSERT_EQ(r.status, c.status) << r.err;
    EXPECT_EQ(run(c.args).out, r.out) << "output is not deterministic";

    const fs::path path = fs::path(SESQUI_GOLDEN_DIR) / c.name;
    if (std::getenv("SESQUI_UPDATE_GOLDEN") != nullptr) {
        std::ofstream(path, std::ios::binary) << r.out;
        return;
    }
    ASSERT_TRUE(fs::exists(path)) << "missing golden " << path << "; rerun with SESQUI_UPDATE_GOLDEN=1";
    EXPECT_EQ(r.out, slurp(path));
}

INSTANTIATE_TEST_SUITE_P(Cli, Golden, ::testing::ValuesIn(golden_cases()),
                         [](const auto& info) {
                             std::string n = info.param.name;
                             for (char& ch : n) {
                                 if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
                             }
                             return n;
                         });

TEST(CliExit, InvalidInput) {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"classify", "--p", "4", "--q", "2"},
             {"scatter", "--m", "2,2", "--m", "0,1"},
             {"scatter", "--m", "1,0", "--k", "0"},
             {"scatter", "--m", "1,0", "--m", "0,1", "--order", "1"},
             {"verify", "--order", "2"},
             {"staircase", "--a", "8/1", "--value", "unstabilized"},
             {"staircase", "--a", "1/2"},
             {"staircase", "--a", "1.5"},
             {"staircase", "--a", "3/0"},
             {"mutate", "--model", "-1,-3;1,0", "--word", "3"},
             {"mutate", "--model", "-1,-3;1,"},
             {"--format", "svg", "classify", "--p", "3", "--q", "1"},
             {"--format", "xml", "classify", "--p", "3", "--q", "1"},
             {"frobnicate"},
             {},
         }) {
        Result r = run(args);
        EXPECT_EQ(r.status, sesqui::cli::kInvalidInput) << testing::PrintToString(args);
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(CliExit, TermCap) {
    Result r = run({"--term-cap", "10", "scatter", "--m", "1,0", "--m", "0,1", "--k", "3", "--k", "3", "--order", "8"});
    EXPECT_EQ(r.status, sesqui::cli::kTermCap);
    EXPECT_TRUE(r.out.empty());
}

TEST(CliExit, Disagreement) {
    Result printed = run({"verify", "--order", "8", "--w-sign", "as-printed"});
    EXPECT_EQ(printed.status, sesqui::cli::kDisagreement);
    EXPECT_NE(printed.err.find("disagreement on pairs"), std::string::npos);
    Result corrupt = run({"verify", "--order", "12", "--corrupt-classifier"});
    EXPECT_EQ(corrupt.status, sesqui::cli::kDisagreement);
    EXPECT_NE(corrupt.err.find("{8,1}"), std::string::npos);
}

TEST(CliExit, StaircasePointInWindowPrintsUnspecified) {
    Result r = run({"staircase", "--a", "8/1"});
    EXPECT_EQ(r.status, sesqui::cli::kOk);
    EXPECT_NE(r.out.find("unspecified"), std::string::npos);
    EXPECT_EQ(run({"staircase", "--a", "8/1", "--value", "stabilized"}).out, "8/3\n");
}

TEST(CliOut, AtomicWrite) {
    const fs::path dir = fs::temp_directory_path() / "sesqui_cli_out_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    const fs::path target = dir / "classify.json";
    std::vector<std::string> args{"--format", "json", "--out", target.string(), "classify", "--p", "8", "--q", "1"};
    Result r = run(args);
    EXPECT_EQ(r.status, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(slurp(target), run({"--format", "json", "classify", "--p", "8", "--q", "1"}).out);

    const fs::path failed = dir / "failed.json";
    EXPECT_EQ(run({"--out", failed.string(), "classify", "--p", "4", "--q", "2"}).status, 2);
    EXPECT_FALSE(fs::exists(failed));
    std::size_t entries = std::distance(fs::directory_iterator(dir), fs::directory_iterator{});
    EXPECT_EQ(entries, 1u);

    EXPECT_EQ(run({"--out", (dir / "missing" / "x.txt").string(), "classify", "--p", "8", "--q", "1"}).status,
              sesqui::cli::kInternal);
    fs::remove_all(dir);
}
