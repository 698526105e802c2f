#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "test_support.hpp"

namespace fsdem {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, SweepPrintsReportJson) {
    const auto r = run({"sweep", "--data", test::data_path("iris.csv"), "--selector", "chi2", "--measure",
                        "accuracy", "--a", "1", "--b", "4", "--stride", "2", "--seed", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("dataset_id"), "iris");
    EXPECT_EQ(j.at("selector_id"), "chi2");
    EXPECT_EQ(j.at("curve").size(), 3u);
    EXPECT_EQ(j.at("seed"), 3u);
}

TEST(Cli, SweepWritesFilesToOut) {
    const auto dir = test::temp_dir("cli-sweep");
    const auto r = run({"sweep", "--data", "wealth", "--rows", "80", "--selector", "random", "--measure", "clacc",
                        "--out", dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(fs::exists(dir / "wealth__random__clacc.json"));
    EXPECT_TRUE(fs::exists(dir / "wealth__random__clacc.curve.csv"));
    EXPECT_TRUE(fs::exists(dir / "summary.csv"));
}

TEST(Cli, StabilityPrintsBothIndices) {
    const auto r = run({"stability", "--data", "wealth", "--selector", "info_gain", "--repeats", "4", "--noise",
                        "0", "--k", "3", "--seed", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("nogueira").get<double>(), 1.0);
    EXPECT_EQ(j.at("kuncheva").get<double>(), 1.0);
}

TEST(Cli, DummyWritesWealthCsv) {
    const auto dir = test::temp_dir("cli-dummy");
    const auto path = dir / "w.csv";
    const auto r = run({"dummy", "--n", "50", "--seed", "2", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "age,salary_eur,salary_usd,residence_size,distance_km,distance_miles,class");
    int rows = 0;
    for (std::string line; std::getline(in, line);) ++rows;
    EXPECT_EQ(rows, 50);
}

TEST(Cli, BenchmarkRunsConfigAndSignalsPartialFailure) {
    const auto dir = test::temp_dir("cli-bench");
    const auto write_config = [&](const std::string& datasets) {
        std::ofstream(dir / "config.json")
            << R"({"datasets": )" << datasets
            << R"(, "selectors": ["random", "info_gain"], "evaluators": ["accuracy"], "repeats": 2,
                 "output_dir": "out", "master_seed": 5})";
    };
    write_config(R"([{"path": "wealth", "n": 60}, ")" + test::data_path("iris.csv") + R"("])");
    auto r = run({"benchmark", "--config", (dir / "config.json").string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("runs"), 4);
    EXPECT_TRUE(fs::exists(dir / "out" / "summary.csv"));

    write_config(R"(["wealth", "missing.csv"])");
    r = run({"benchmark", "--config", (dir / "config.json").string(), "--workers", "2"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("missing"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 1);
    EXPECT_EQ(run({"sweep"}).code, 1);
    EXPECT_EQ(run({"frobnicate"}).code, 1);
    EXPECT_EQ(run({"sweep", "--data", "wealth", "--stride", "0"}).code, 1);
    EXPECT_EQ(run({"sweep", "--data", "wealth", "--selector", "lasso"}).code, 1);
    EXPECT_EQ(run({"sweep", "--data", "wealth", "--a", "3", "--b", "9"}).code, 1);
    EXPECT_EQ(run({"sweep", "--data", "/nonexistent.csv"}).code, 2);
    EXPECT_EQ(run({"benchmark", "--config", "/nonexistent.json"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    const auto v = run({"--version"});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find('.'), std::string::npos);
}

TEST(Cli, MalformedDataIsADataError) {
    const auto dir = test::temp_dir("cli-bad");
    std::ofstream(dir / "bad.csv") << "a,b,y\n1,2,0\n3,\"4,1\n";
    const auto r = run({"sweep", "--data", (dir / "bad.csv").string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("line"), std::string::npos) << r.err;
}

}  // namespace
}  // namespace fsdem
