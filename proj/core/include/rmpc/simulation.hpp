#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmpc/product_code.hpp"

namespace rmpc {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);

struct StopRule {
  std::uint64_t min_block_errors = 100;
  std::uint64_t max_frames = 10'000'000;
};

struct SimConfig {
  std::string code = "rm(6,1)xrm(2,1)";
  DecodeMode mode = DecodeMode::kSoft;
  int iterations = 3;
  std::vector<double> ebno_db;
  StopRule stop;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::kCsv;
  unsigned workers = 1;
};

/// Throws ConfigError on an invalid configuration.
void validate(const SimConfig& config);

struct SimPoint {
  double ebno_db = 0.0;
  double snr_db = 0.0;
  std::uint64_t frames = 0;
  std::uint64_t bit_errors = 0;
  std::uint64_t block_errors = 0;
  double ber = 0.0;
  double bler = 0.0;
  double bler_ci_lo = 0.0;
  double bler_ci_hi = 0.0;
  double ops_per_decode = 0.0;

  friend bool operator==(const SimPoint&, const SimPoint&) = default;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Wilson score interval for `successes` out of `trials` at normal quantile z.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 1.959963984540054);

/// True when the two 95% intervals share no point.
bool disjoint(const Interval& a, const Interval& b);

/// Monte-Carlo estimate at one Eb/N0. Frame f draws its info word and noise
/// from frame_rng(seed, f); frames are tallied in index order and the run
/// stops at the first frame that reaches min_block_errors (or max_frames),
/// so the result does not depend on `workers`.
SimPoint run_point(const ProductCode& code, DecodeMode mode, int iterations, double ebno_db,
                   const StopRule& stop, std::uint64_t seed, unsigned workers = 1);

std::vector<SimPoint> run_sweep(const SimConfig& config);

/// "start:stop:step" (inclusive, empty when stop < start) or "a,b,c".
std::vector<double> parse_ebno_grid(std::string_view text);

inline constexpr std::string_view kCsvHeader =
    "ebno_db,snr_db,frames,bit_errors,block_errors,ber,bler,bler_ci_lo,bler_ci_hi,ops_per_decode";

std::string format_csv(const std::vector<SimPoint>& points);
std::string format_json(const SimConfig& config, const std::vector<SimPoint>& points);

/// Writes the sweep in config.format to `path` ("-" or "stdout" for standard
/// output). Throws std::runtime_error when the file cannot be written.
void emit(const SimConfig& config, const std::vector<SimPoint>& points, const std::string& path);

}  // namespace rmpc
