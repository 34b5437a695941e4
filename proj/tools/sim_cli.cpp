#include "sim_cli.hpp"

#include <CLI11.hpp>
#include <exception>
#include <iostream>
#include <ostream>
#include <string>
#include <thread>

#include "rmpc/errors.hpp"
#include "rmpc/simulation.hpp"

namespace rmpc::cli {

namespace {

unsigned parse_workers(const std::string& text) {
  if (text == "auto") return std::max(1U, std::thread::hardware_concurrency());
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || v < 1) throw ConfigError("--workers must be a positive integer or 'auto'");
  return static_cast<unsigned>(v);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& err) {
  CLI::App app{"Monte-Carlo BLER/BER simulation of Reed-Muller product codes over BPSK/AWGN"};
  app.name("rmpc_sim");

  std::string code = "rm(6,1)xrm(2,1)";
  std::string decoder = "soft";
  int iterations = 3;
  std::string ebno;
  std::uint64_t min_errors = 100;
  std::uint64_t max_frames = 10'000'000;
  std::uint64_t seed = 1;
  std::string workers = "1";
  std::string format = "csv";
  std::string out = "stdout";

  app.add_option("--code", code,
                 "Product descriptor, components joined by 'x', first decoded first; "
                 "append ':bfmap' for brute-force soft-MAP, e.g. rm(11,1)xrm(3,2):bfmap")
      ->capture_default_str();
  app.add_option("--decoder", decoder, "Component decoding: soft (SISO) or hard (FHT ML)")
      ->check(CLI::IsMember({"soft", "hard"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--iterations", iterations, "Decoding iterations I")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--ebno", ebno, "Eb/N0 grid in dB: start:stop:step (inclusive) or a,b,c")
      ->required();
  app.add_option("--min-errors", min_errors, "Stop a point after this many block errors")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--max-frames", max_frames, "Upper bound on frames per point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--seed", seed, "Master seed (u64); output is a function of config and seed")
      ->capture_default_str();
  app.add_option("--workers", workers, "Worker threads, or 'auto'; does not change results")
      ->capture_default_str();
  app.add_option("--format", format, "Output format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}, CLI::ignore_case))
      ->capture_default_str();
  app.add_option("--out", out, "Output file path, or 'stdout'")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "rmpc_sim: " << e.what() << "\n" << "Run with --help for usage.\n";
    return e.get_exit_code() == 0 ? 2 : e.get_exit_code();
  }

  try {
    SimConfig config;
    config.code = code;
    config.mode = parse_decode_mode(decoder);
    config.iterations = iterations;
    config.ebno_db = parse_ebno_grid(ebno);
    config.stop = {min_errors, max_frames};
    config.seed = seed;
    config.format = parse_output_format(format);
    config.workers = parse_workers(workers);
    validate(config);
    // Fail on a bad descriptor before any simulation work.
    config.code = parse_product_descriptor(code).descriptor();

    const auto points = run_sweep(config);
    emit(config, points, out);
  } catch (const std::exception& e) {
    err << "rmpc_sim: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace rmpc::cli
