#include "rmpc/simulation.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <exception>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <stdexcept>
#include <thread>

#include "rmpc/channel.hpp"
#include "rmpc/errors.hpp"

namespace rmpc {

namespace {

constexpr std::size_t kBatchFrames = 1024;

struct FrameResult {
  bool block_error = false;
  std::uint64_t bit_errors = 0;
  std::uint64_t ops = 0;
};

// Per-worker state: one decoder and reusable buffers.
class FrameRunner {
 public:
  FrameRunner(const ProductCode& code, DecodeMode mode, int iterations, double sigma2,
              std::uint64_t seed)
      : code_(code), decoder_(code), mode_(mode), iterations_(iterations), sigma2_(sigma2),
        seed_(seed), u_(code.k()), y_(code.n()) {}

  FrameResult run(std::uint64_t frame) {
    auto rng = frame_rng(seed_, frame);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      if (i % 64 == 0) word = rng();
      u_.set(i, (word >> (i % 64)) & 1U);
    }
    const BitVector c = product_encode(code_, u_);
    const auto x = bpsk_modulate(c);
    add_awgn(x, y_, sigma2_, rng);

    OpCounter ops;
    const BitVector c_hat = decoder_.decode(y_, sigma2_, iterations_, mode_, &ops);

    FrameResult r;
    r.block_error = c_hat != c;
    if (r.block_error) r.bit_errors = hamming_distance(product_unencode(code_, c_hat), u_);
    r.ops = ops.total();
    return r;
  }

 private:
  const ProductCode& code_;
  ProductDecoder decoder_;
  DecodeMode mode_;
  int iterations_;
  double sigma2_;
  std::uint64_t seed_;
  BitVector u_;
  std::vector<double> y_;
};

std::string lower(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return s;
}

double parse_double(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw ConfigError("bad number '" + s + "' in Eb/N0 grid");
  }
  if (used != s.size() || !std::isfinite(v)) throw ConfigError("bad number '" + s + "' in Eb/N0 grid");
  return v;
}

// Grid points snapped to 1e-9 dB so 0.1 steps print as 0.3, not 0.30000000000000004.
double snap(double v) { return std::round(v * 1e9) / 1e9; }

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  const auto s = lower(text);
  if (s == "csv") return OutputFormat::kCsv;
  if (s == "json") return OutputFormat::kJson;
  throw ConfigError("output format must be csv or json, got '" + std::string(text) + "'");
}

void validate(const SimConfig& config) {
  if (config.iterations < 1) throw ConfigError("iterations must be >= 1");
  if (config.stop.min_block_errors < 1) throw ConfigError("min block errors must be >= 1");
  if (config.stop.max_frames < 1) throw ConfigError("max frames must be >= 1");
  if (config.workers < 1) throw ConfigError("workers must be >= 1");
  for (double e : config.ebno_db)
    if (!std::isfinite(e)) throw ConfigError("Eb/N0 values must be finite");
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  // The endpoints are exact at the boundaries; the formula leaves rounding residue there.
  return {successes == 0 ? 0.0 : std::max(0.0, center - half),
          successes == trials ? 1.0 : std::min(1.0, center + half)};
}

bool disjoint(const Interval& a, const Interval& b) { return a.hi < b.lo || b.hi < a.lo; }

SimPoint run_point(const ProductCode& code, DecodeMode mode, int iterations, double ebno_db,
                   const StopRule& stop, std::uint64_t seed, unsigned workers) {
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (stop.min_block_errors < 1 || stop.max_frames < 1) throw ConfigError("invalid stopping rule");
  if (workers < 1) throw ConfigError("workers must be >= 1");

  const double sigma2 = ebno_db_to_sigma2(ebno_db, code.rate());
  std::vector<FrameRunner> runners;
  runners.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) runners.emplace_back(code, mode, iterations, sigma2, seed);

  SimPoint p;
  p.ebno_db = ebno_db;
  p.snr_db = snr_db(sigma2);
  std::uint64_t total_ops = 0;
  std::vector<FrameResult> batch;

  bool done = false;
  while (!done && p.frames < stop.max_frames) {
    const auto first = p.frames;
    const auto count =
        static_cast<std::size_t>(std::min<std::uint64_t>(kBatchFrames, stop.max_frames - first));
    batch.assign(count, {});

    if (workers == 1) {
      for (std::size_t i = 0; i < count; ++i) batch[i] = runners[0].run(first + i);
    } else {
      std::vector<std::exception_ptr> errors(workers);
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([&, w] {
            try {
              for (std::size_t i = w; i < count; i += workers) batch[i] = runners[w].run(first + i);
            } catch (...) {
              errors[w] = std::current_exception();
            }
          });
        }
      }
      for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    }

    for (const auto& r : batch) {
      ++p.frames;
      total_ops += r.ops;
      p.bit_errors += r.bit_errors;
      if (r.block_error && ++p.block_errors >= stop.min_block_errors) {
        done = true;
        break;
      }
    }
  }

  const double frames = static_cast<double>(p.frames);
  p.bler = static_cast<double>(p.block_errors) / frames;
  p.ber = static_cast<double>(p.bit_errors) / (frames * static_cast<double>(code.k()));
  const auto ci = wilson_interval(p.block_errors, p.frames);
  p.bler_ci_lo = ci.lo;
  p.bler_ci_hi = ci.hi;
  p.ops_per_decode = static_cast<double>(total_ops) / frames;
  return p;
}

std::vector<SimPoint> run_sweep(const SimConfig& config) {
  validate(config);
  const ProductCode code = parse_product_descriptor(config.code);
  std::vector<SimPoint> points;
  points.reserve(config.ebno_db.size());
  for (double e : config.ebno_db)
    points.push_back(
        run_point(code, config.mode, config.iterations, e, config.stop, config.seed, config.workers));
  return points;
}

std::vector<double> parse_ebno_grid(std::string_view text) {
  const auto s = lower(text);
  if (s.empty()) return {};
  std::vector<double> grid;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t pos; (pos = s.find(':', start)) != std::string::npos; start = pos + 1)
      parts.push_back(s.substr(start, pos - start));
    parts.push_back(s.substr(start));
    if (parts.size() != 3) throw ConfigError("Eb/N0 range must be start:stop:step");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0)) throw ConfigError("Eb/N0 step must be positive");
    if (hi < lo) return {};
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    if (count > 100000) throw ConfigError("Eb/N0 grid too large");
    for (std::size_t i = 0; i < count; ++i) grid.push_back(snap(lo + static_cast<double>(i) * step));
  } else {
    std::size_t start = 0;
    while (true) {
      const auto pos = s.find(',', start);
      grid.push_back(parse_double(s.substr(start, pos == std::string::npos ? pos : pos - start)));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }
  return grid;
}

std::string format_csv(const std::vector<SimPoint>& points) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& p : points) {
    out += fmt::format("{},{},{},{},{},{},{},{},{},{}\n", p.ebno_db, p.snr_db, p.frames,
                       p.bit_errors, p.block_errors, p.ber, p.bler, p.bler_ci_lo, p.bler_ci_hi,
                       p.ops_per_decode);
  }
  return out;
}

std::string format_json(const SimConfig& config, const std::vector<SimPoint>& points) {
  using json = nlohmann::ordered_json;
  // Worker count is left out on purpose: output must not depend on it.
  json cfg = {
      {"code", config.code},
      {"decoder", std::string(to_string(config.mode))},
      {"iterations", config.iterations},
      {"ebno_db", config.ebno_db},
      {"min_errors", config.stop.min_block_errors},
      {"max_frames", config.stop.max_frames},
      {"seed", config.seed},
  };
  json pts = json::array();
  for (const auto& p : points) {
    pts.push_back({{"ebno_db", p.ebno_db},
                   {"snr_db", p.snr_db},
                   {"frames", p.frames},
                   {"bit_errors", p.bit_errors},
                   {"block_errors", p.block_errors},
                   {"ber", p.ber},
                   {"bler", p.bler},
                   {"bler_ci_lo", p.bler_ci_lo},
                   {"bler_ci_hi", p.bler_ci_hi},
                   {"ops_per_decode", p.ops_per_decode}});
  }
  json doc = {{"config", cfg}, {"points", pts}};
  return doc.dump(2) + "\n";
}

void emit(const SimConfig& config, const std::vector<SimPoint>& points, const std::string& path) {
  const std::string text =
      config.format == OutputFormat::kCsv ? format_csv(points) : format_json(config, points);
  if (path.empty() || path == "-" || path == "stdout") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
  if (!file.flush()) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace rmpc
