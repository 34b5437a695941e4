#include "rmpc/channel.hpp"

#include <cmath>

#include "rmpc/errors.hpp"

namespace rmpc {

namespace {

void check_sigma2(double sigma2) {
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw ParameterError("noise variance must be positive and finite");
}

void check_rate(double rate) {
  if (!(rate > 0.0) || rate > 1.0) throw ParameterError("code rate must be in (0, 1]");
}

}  // namespace

std::vector<double> bpsk_modulate(const BitVector& c) {
  std::vector<double> x(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) x[i] = c[i] ? -1.0 : 1.0;
  return x;
}

void add_awgn(std::span<const double> x, std::span<double> y, double sigma2, std::mt19937_64& rng) {
  check_sigma2(sigma2);
  if (x.size() != y.size()) throw DimensionError("channel input/output length mismatch");
  std::normal_distribution<double> noise(0.0, std::sqrt(sigma2));
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + noise(rng);
}

std::vector<double> awgn_channel(std::span<const double> x, double sigma2, std::mt19937_64& rng) {
  std::vector<double> y(x.size());
  add_awgn(x, y, sigma2, rng);
  return y;
}

std::vector<double> channel_llr(std::span<const double> y, double sigma2) {
  check_sigma2(sigma2);
  std::vector<double> l(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) l[i] = 2.0 * y[i] / sigma2;
  return l;
}

double ebno_db_to_sigma2(double ebno_db, double rate) {
  check_rate(rate);
  return 1.0 / (2.0 * rate * std::pow(10.0, ebno_db / 10.0));
}

double sigma2_to_ebno_db(double sigma2, double rate) {
  check_sigma2(sigma2);
  check_rate(rate);
  return 10.0 * std::log10(1.0 / (2.0 * rate * sigma2));
}

double snr_db(double sigma2) {
  check_sigma2(sigma2);
  return 10.0 * std::log10(1.0 / (2.0 * sigma2));
}

std::mt19937_64 frame_rng(std::uint64_t master_seed, std::uint64_t frame_index) {
  std::seed_seq seq{static_cast<std::uint32_t>(master_seed),
                    static_cast<std::uint32_t>(master_seed >> 32),
                    static_cast<std::uint32_t>(frame_index),
                    static_cast<std::uint32_t>(frame_index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace rmpc
