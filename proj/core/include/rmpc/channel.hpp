#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "rmpc/bits.hpp"

namespace rmpc {

/// 1 - 2c, elementwise.
std::vector<double> bpsk_modulate(const BitVector& c);

/// y = x + n with n ~ N(0, sigma2) i.i.d., drawn from `rng`.
std::vector<double> awgn_channel(std::span<const double> x, double sigma2, std::mt19937_64& rng);

/// Same as awgn_channel, writing into `y` (may alias `x`).
void add_awgn(std::span<const double> x, std::span<double> y, double sigma2, std::mt19937_64& rng);

/// 2y / sigma2.
std::vector<double> channel_llr(std::span<const double> y, double sigma2);

/// sigma2 = 1 / (2 * rate * 10^{ebno_db/10}).
double ebno_db_to_sigma2(double ebno_db, double rate);

/// 10 log10(1 / (2 * rate * sigma2)); inverse of ebno_db_to_sigma2.
double sigma2_to_ebno_db(double sigma2, double rate);

/// SNR = 1 / (2 sigma2) in dB.
double snr_db(double sigma2);

/// Generator for one simulation frame. The stream depends only on
/// (master_seed, frame_index), never on which worker runs the frame.
std::mt19937_64 frame_rng(std::uint64_t master_seed, std::uint64_t frame_index);

}  // namespace rmpc
