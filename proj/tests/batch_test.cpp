#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli.hpp"
#include "support/test_support.hpp"
#include "veinseg/batch.hpp"
#include "veinseg/error.hpp"
#include "veinseg/pgm.hpp"

namespace fs = std::filesystem;

namespace veinseg {
namespace {

class BatchTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = fs::temp_directory_path() /
            ("veinseg_batch_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(root_);
    fs::create_directories(root_ / "in");
  }
  void TearDown() override { fs::remove_all(root_); }

  fs::path write_leaf(const std::string& name, std::uint64_t seed) {
    const auto path = root_ / "in" / name;
    write_file(path, save_pgm(testing::make_vein_phantom(64, 48, seed).image));
    return path;
  }

  fs::path write_bytes(const std::string& name, const std::string& text) {
    const auto path = root_ / "in" / name;
    write_file(path, std::vector<std::uint8_t>(text.begin(), text.end()));
    return path;
  }

  fs::path root_;
};

TEST_F(BatchTest, ThreeValidInputs) {
  PipelineConfig cfg;
  cfg.inputs = {write_leaf("a.pgm", 1), write_leaf("b.pgm", 2), write_leaf("c.pgm", 3)};
  cfg.output_dir = root_ / "out";
  std::ostringstream report;
  std::ostringstream warnings;
  const BatchSummary s = run_batch(cfg, report, warnings);
  EXPECT_EQ(s.processed, 3);
  EXPECT_EQ(s.warnings, 0);
  for (const char* stem : {"a", "b", "c"}) {
    const auto out = root_ / "out" / (std::string(stem) + ".final.pgm");
    ASSERT_TRUE(fs::exists(out));
    EXPECT_EQ(load_pgm(read_file(out)).width(), 64);
  }
  EXPECT_NE(report.str().find("stage=close ms="), std::string::npos);
  EXPECT_NE(report.str().find("config lambda=8"), std::string::npos);
  EXPECT_TRUE(warnings.str().empty());
}

TEST_F(BatchTest, CorruptInputIsSkippedWithWarning) {
  PipelineConfig cfg;
  write_leaf("a.pgm", 1);
  write_leaf("b.pgm", 2);
  write_bytes("broken.pgm", "P5\n64 48\n255\nshort");
  cfg.inputs = {root_ / "in"};
  cfg.output_dir = root_ / "out";
  std::ostringstream report;
  std::ostringstream warnings;
  const BatchSummary s = run_batch(cfg, report, warnings);
  EXPECT_EQ(s.processed, 2);
  EXPECT_EQ(s.warnings, 1);
  EXPECT_NE(warnings.str().find("broken.pgm"), std::string::npos);
  EXPECT_NE(report.str().find("summary processed=2 warnings=1"), std::string::npos);
}

TEST_F(BatchTest, EmptyDirectoryIsUsageError) {
  PipelineConfig cfg;
  cfg.inputs = {root_ / "in"};
  cfg.output_dir = root_ / "out";
  std::ostringstream sink;
  EXPECT_THROW(run_batch(cfg, sink, sink), UsageError);
}

TEST_F(BatchTest, IntermediatesAndBaselineFiles) {
  PipelineConfig cfg;
  cfg.inputs = {write_leaf("leaf.pgm", 4)};
  cfg.output_dir = root_ / "out";
  cfg.emit_intermediates = true;
  cfg.baseline = Baseline::kPrewitt;
  std::ostringstream sink;
  run_batch(cfg, sink, sink);
  for (const char* stage : {"gray", "gabor", "close", "erode", "final", "prewitt"}) {
    EXPECT_TRUE(fs::exists(root_ / "out" / (std::string("leaf.") + stage + ".pgm"))) << stage;
  }
}

TEST_F(BatchTest, ColorInputIsConvertedToGray) {
  std::string ppm = "P6\n40 40\n255\n";
  for (int i = 0; i < 40 * 40; ++i) ppm += std::string{'\x40', '\x80', '\x20'};
  PipelineConfig cfg;
  cfg.inputs = {write_bytes("color.ppm", ppm)};
  cfg.output_dir = root_ / "out";
  cfg.emit_intermediates = true;
  std::ostringstream sink;
  EXPECT_EQ(run_batch(cfg, sink, sink).processed, 1);
  const Image gray = load_pgm(read_file(root_ / "out" / "color.gray.pgm"));
  EXPECT_NEAR(gray(0, 0), (0.299 * 64 + 0.587 * 128 + 0.114 * 32) / 255.0, 0.5 / 255.0);
}

TEST_F(BatchTest, CliExitCodes) {
  const auto leaf = write_leaf("leaf.pgm", 5);
  const std::string out_dir = (root_ / "out").string();
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::run({"--out", out_dir, leaf.string()}, out, err), cli::kSuccess);
  EXPECT_NE(out.str().find("stage=gabor"), std::string::npos);

  EXPECT_EQ(cli::run({"--bandwidth", "0", leaf.string()}, out, err), cli::kUsageError);
  EXPECT_NE(err.str().find("bandwidth"), std::string::npos);
  EXPECT_EQ(cli::run({}, out, err), cli::kUsageError);
  EXPECT_EQ(cli::run({"--out", out_dir, (root_ / "in" / "missing.pgm").string()}, out, err),
            cli::kUsageError);
  EXPECT_EQ(cli::run({"--config", (root_ / "nope.cfg").string(), leaf.string()}, out, err),
            cli::kIoError);

  std::ostringstream help;
  EXPECT_EQ(cli::run({"--help"}, help, err), cli::kSuccess);
  EXPECT_NE(help.str().find("--emit-intermediates"), std::string::npos);
}

TEST_F(BatchTest, UnwritableOutputIsIoError) {
  const auto leaf = write_leaf("leaf.pgm", 6);
  write_bytes("blocker", "x");
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cli::run({"--out", (root_ / "in" / "blocker").string(), leaf.string()}, out, err),
            cli::kIoError);
}

}  // namespace
}  // namespace veinseg
