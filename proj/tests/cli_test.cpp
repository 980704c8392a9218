#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "cli_runner.hpp"

namespace fs = std::filesystem;
using cli_runner::quote;
using cli_runner::run;

namespace {

const std::string kCli = ABJAD_CLI;
const fs::path kData = ABJAD_TEST_DATA;

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("abjad_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write(const std::string& name, const std::string& content) {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << content;
        return p;
    }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, Encode) {
    EXPECT_EQ(run(kCli, "encode t").out, "[2, 0, 0]\n");
    EXPECT_EQ(run(kCli, "encode brain").out, "[2, 9, 0, 1, 9, 5, 0]\n");
    EXPECT_EQ(run(kCli, "encode a").out, "[1]\n");
    const auto bad = run(kCli, "encode 42x");
    EXPECT_EQ(bad.exit_code, 3);
    EXPECT_TRUE(bad.out.empty());
}

TEST_F(CliTest, Relate) {
    auto r = run(kCli, "relate brain think");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "118/90 ≈ 1.311111\n");
    EXPECT_EQ(run(kCli, "relate a a").out, "1/10 ≈ 0.100000\n");

    r = run(kCli, "relate brain 42x");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("unencodable character '4'"), std::string::npos);
}

TEST_F(CliTest, ScanGoldenAndFormats) {
    const auto corpus = (kData / "paper_results_corpus.txt").string();
    const auto text = run(kCli, "scan brain think --corpus " + quote(corpus));
    EXPECT_EQ(text.exit_code, 0);
    EXPECT_TRUE(text.err.empty());
    EXPECT_EQ(text.out, cli_runner::slurp(kData / "paper_results_expected.txt"));

    const auto json = run(kCli, "scan brain think --format json --corpus " + quote(corpus));
    const auto doc = nlohmann::json::parse(json.out);
    EXPECT_EQ(doc["seed"]["fraction"], "118/90");
    EXPECT_EQ(doc["records"].size(), 52u);

    const auto csv = run(kCli, "scan brain think --format csv --corpus " + quote(corpus));
    EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "word,percent,position");
    EXPECT_NE(csv.out.find("\nimaging,237,50\n"), std::string::npos);
}

TEST_F(CliTest, ScanOptions) {
    const auto corpus = (kData / "paper_results_corpus.txt").string();
    auto r = run(kCli, "scan brain think --top-k 1 --corpus " + quote(corpus));
    EXPECT_EQ(r.out, "['brain', 'think'] is related to Brain per = 360%\n");

    r = run(kCli, "scan brain think --dedup --min-score 100 --corpus " + quote(corpus));
    EXPECT_EQ(r.out,
              "['brain', 'think'] is related to book per = 139%\n"
              "['brain', 'think'] is related to ai per = 155%\n"
              "['brain', 'think'] is related to head per = 122%\n"
              "['brain', 'think'] is related to black per = 129%\n"
              "['brain', 'think'] is related to food per = 172%\n"
              "['brain', 'think'] is related to learn per = 144%\n"
              "['brain', 'think'] is related to happy per = 128%\n"
              "['brain', 'think'] is related to prepare per = 112%\n"
              "['brain', 'think'] is related to Brain per = 360%\n"
              "['brain', 'think'] is related to health per = 108%\n"
              "['brain', 'think'] is related to imaging per = 237%\n");

    const auto out = dir_ / "out.txt";
    r = run(kCli, "scan brain think --jobs 4 --progress --out " + quote(out.string()) + " --corpus " +
                      quote(corpus));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("Processing word 52 of 52 (100.00%)"), std::string::npos);
    EXPECT_EQ(cli_runner::slurp(out), cli_runner::slurp(kData / "paper_results_expected.txt"));
}

TEST_F(CliTest, ScanFromStdinAndSkips) {
    const auto corpus = write("dirty.txt", "book, 42 (imaging)\n");
    auto r = run(kCli, "scan brain think --corpus - < " + quote(corpus.string()));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out,
              "['brain', 'think'] is related to book per = 139%\n"
              "['brain', 'think'] is related to imaging per = 237%\n");
    EXPECT_NE(r.err.find("warning: skipped 1 unencodable token"), std::string::npos);

    r = run(kCli, "scan brain think --policy error --corpus " + quote(corpus.string()));
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("\"42\" at position 1"), std::string::npos);
}

TEST_F(CliTest, ScanEncodings) {
    const auto corpus = write("latin1.txt", "book caf\xE9 imaging");
    auto r = run(kCli, "scan brain think --corpus " + quote(corpus.string()));
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("byte offset 8"), std::string::npos);

    r = run(kCli, "scan brain think --encoding latin-1 --format csv --corpus " + quote(corpus.string()));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("caf,"), std::string::npos);
}

TEST_F(CliTest, CustomAlphabet) {
    const auto alpha = write("tiny.json", R"({"name":"tiny","values":{"a":1,"b":20}})");
    auto r = run(kCli, "encode --alphabet " + quote(alpha.string()) + " abBA");
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_EQ(r.out, "[1, 2, 0, 2, 0, 1]\n");

    const auto bad = write("bad.json", R"({"name":"bad","values":{"a":0}})");
    r = run(kCli, "encode --alphabet " + quote(bad.string()) + " a");
    EXPECT_EQ(r.exit_code, 3);
    EXPECT_NE(r.err.find("non-positive value for key 'a'"), std::string::npos);
}

TEST_F(CliTest, ExitCodes) {
    const auto empty = write("empty.txt", "");
    auto r = run(kCli, "scan brain think --corpus " + quote(empty.string()));
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(r.err.empty());

    r = run(kCli, "scan brain think --corpus " + quote((dir_ / "missing.txt").string()));
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_FALSE(r.err.empty());

    r = run(kCli, "scan br4in think --corpus " + quote(empty.string()));
    EXPECT_EQ(r.exit_code, 3);

    r = run(kCli, "scan brain think --corpus " + quote(empty.string()) + " --out /nonexistent/dir/out.txt");
    EXPECT_EQ(r.exit_code, 2);

    EXPECT_EQ(run(kCli, "").exit_code, 1);
    EXPECT_EQ(run(kCli, "scan brain").exit_code, 1);
    EXPECT_EQ(run(kCli, "scan brain think --corpus x --format xml").exit_code, 1);
    EXPECT_EQ(run(kCli, "scan brain think --corpus x --top-k 0").exit_code, 1);
    EXPECT_EQ(run(kCli, "bogus").exit_code, 1);
    EXPECT_EQ(run(kCli, "--help").exit_code, 0);
}
