#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli.hpp"
#include "veinseg/config.hpp"
#include "veinseg/error.hpp"

namespace veinseg {
namespace {

std::string key_of(const std::vector<std::string>& args) {
  try {
    cli::parse_config(args);
  } catch (const UsageError& e) {
    return e.key();
  }
  return "<none>";
}

TEST(ConfigTest, DefaultsFollowTheParameterTable) {
  const PipelineConfig cfg = cli::parse_config({}).config;
  EXPECT_EQ(cfg.gabor.wavelength, 8.0);
  EXPECT_EQ(cfg.gabor.phase, 0.0);
  EXPECT_EQ(cfg.gabor.bandwidth, 5.0);
  EXPECT_EQ(cfg.gabor.aspect_ratio, 0.5);
  EXPECT_EQ(cfg.orientations, evenly_spaced_orientations(8));
  EXPECT_EQ(cfg.disk_radius, 3);
  EXPECT_EQ(cfg.line_length, 2.0);
  EXPECT_EQ(cfg.line_angle, 0.0);
  EXPECT_EQ(cfg.stretch_low, 0.01);
  EXPECT_EQ(cfg.stretch_high, 0.99);
  EXPECT_EQ(cfg.fusion, Fusion::kMaxAbs);
  EXPECT_EQ(cfg.border, BorderMode::kReflect);
  EXPECT_EQ(cfg.convolution, ConvolutionMode::kAuto);
  EXPECT_EQ(cfg.baseline, Baseline::kNone);
  EXPECT_FALSE(cfg.emit_intermediates);
}

TEST(ConfigTest, SingleOverride) {
  const PipelineConfig cfg = cli::parse_config({"--lambda", "12"}).config;
  EXPECT_EQ(cfg.gabor.wavelength, 12.0);
  EXPECT_EQ(cfg.gabor.bandwidth, 5.0);
  EXPECT_EQ(cfg.disk_radius, 3);
}

TEST(ConfigTest, PreconditionViolationsNameTheKey) {
  EXPECT_EQ(key_of({"--bandwidth", "0"}), "bandwidth");
  EXPECT_EQ(key_of({"--lambda", "abc"}), "lambda");
  EXPECT_EQ(key_of({"--phase", "200"}), "phase");
  EXPECT_EQ(key_of({"--fusion", "mean"}), "fusion");
  EXPECT_EQ(key_of({"--disk-radius", "-1"}), "disk-radius");
  EXPECT_EQ(key_of({"--stretch-low", "0.6", "--stretch-high", "0.5"}), "stretch-low");
  EXPECT_EQ(key_of({"--orientations", "0"}), "orientations");
  EXPECT_EQ(key_of({"--no-such-flag"}), "");
  try {
    cli::parse_config({"--bandwidth", "0"});
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("> 0"), std::string::npos);
  }
}

TEST(ConfigTest, OrientationForms) {
  EXPECT_EQ(parse_orientations("4"), (std::vector<double>{0, 45, 90, 135}));
  EXPECT_EQ(parse_orientations("0, 30,45,60,90,120,180"),
            (std::vector<double>{0, 30, 45, 60, 90, 120, 180}));
  EXPECT_EQ(parse_orientations("90,"), (std::vector<double>{90}));
}

TEST(ConfigTest, FileThenFlagsPrecedence) {
  const auto path = std::filesystem::temp_directory_path() / "veinseg_config_test.cfg";
  {
    std::ofstream f(path);
    f << "# leaf settings\n"
         "lambda = 10\n"
         "gamma = 0.8   # rounder envelope\n"
         "\n"
         "fusion = l2\n"
         "emit-intermediates = true\n";
  }
  const PipelineConfig cfg =
      cli::parse_config({"--config", path.string(), "--lambda", "6", "a.pgm"}).config;
  EXPECT_EQ(cfg.gabor.wavelength, 6.0);
  EXPECT_EQ(cfg.gabor.aspect_ratio, 0.8);
  EXPECT_EQ(cfg.fusion, Fusion::kL2);
  EXPECT_TRUE(cfg.emit_intermediates);
  ASSERT_EQ(cfg.inputs.size(), 1u);
  std::filesystem::remove(path);
}

TEST(ConfigTest, FileErrors) {
  PipelineConfig cfg;
  EXPECT_THROW(apply_config_text(cfg, "lambda 3\n"), UsageError);
  try {
    apply_config_text(cfg, "colour = red\n");
    FAIL();
  } catch (const UsageError& e) {
    EXPECT_EQ(e.key(), "colour");
  }
  EXPECT_THROW(cli::parse_config({"--config", "/nonexistent/veinseg.cfg"}), IoError);
}

TEST(ConfigTest, DescribeEchoesEffectiveValues) {
  PipelineConfig cfg;
  apply_setting(cfg, "lambda", "12");
  apply_setting(cfg, "baseline", "sobel");
  const std::string text = describe(cfg);
  EXPECT_NE(text.find("lambda=12"), std::string::npos);
  EXPECT_NE(text.find("baseline=sobel"), std::string::npos);
  EXPECT_NE(text.find("orientations=0,22.5,45"), std::string::npos);
}

TEST(ConfigTest, EveryKeyIsAccepted) {
  const std::vector<std::pair<std::string, std::string>> samples = {
      {"lambda", "8"},        {"gamma", "1"},         {"bandwidth", "1"},
      {"phase", "-90"},       {"orientations", "6"},  {"fusion", "max"},
      {"disk-radius", "2"},   {"line-length", "3"},   {"line-angle", "90"},
      {"stretch-low", "0.02"}, {"stretch-high", "0.98"}, {"border", "zero"},
      {"conv", "fft"},        {"baseline", "prewitt"}, {"emit-intermediates", "false"},
      {"out", "/tmp/x"},      {"threads", "2"}};
  ASSERT_EQ(samples.size(), config_keys().size());
  PipelineConfig cfg;
  for (const auto& [k, v] : samples) EXPECT_NO_THROW(apply_setting(cfg, k, v)) << k;
  EXPECT_NO_THROW(cfg.validate());
}

}  // namespace
}  // namespace veinseg
