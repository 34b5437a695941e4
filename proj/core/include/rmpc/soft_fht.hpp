#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmpc/bits.hpp"
#include "rmpc/first_order_tables.hpp"
#include "rmpc/op_counter.hpp"
#include "rmpc/rm_code.hpp"

namespace rmpc {

inline constexpr int kMaxBruteForceDim = 16;

/// Max-log LLRs of the m+1 information bits from a Hadamard spectrum
/// l_WH = l * H. Bit 0 (all-one row) compares the signed spectrum against its
/// negation; bits 1..m compare |l_WH| over the tables' zero/one index sets.
std::vector<double> info_bit_llrs(std::span<const double> l_wh, const FirstOrderTables& tables,
                                  OpCounter* ops = nullptr);

/// Min-sum combination of info-bit LLRs into coded-bit LLRs: for each column
/// j, product of signs times minimum magnitude over the rows supporting j.
/// sign(0) is +1.
std::vector<double> encoded_bit_llrs(std::span<const double> l_inf,
                                     const FirstOrderTables& tables, OpCounter* ops = nullptr);

/// Soft-input soft-output decoding of RM(m,1): FHT, then info-bit LLRs, then
/// coded-bit LLRs. Returns n updated LLRs.
std::vector<double> soft_fht_decode(std::span<const double> llr, const FirstOrderTables& tables,
                                    OpCounter* ops = nullptr);

/// Scratch space for allocation-free soft-FHT decoding of one fiber.
struct SoftFhtWorkspace {
  std::vector<double> spectrum;
  std::vector<double> magnitude;
  std::vector<double> info;
  std::vector<double> info_abs;

  explicit SoftFhtWorkspace(const FirstOrderTables& tables)
      : spectrum(tables.n), magnitude(tables.n), info(static_cast<std::size_t>(tables.m) + 1),
        info_abs(static_cast<std::size_t>(tables.m) + 1) {}
};

/// Same result as soft_fht_decode(); `out` may alias `llr`.
void soft_fht_decode_into(std::span<const double> llr, std::span<double> out,
                          const FirstOrderTables& tables, SoftFhtWorkspace& ws,
                          OpCounter* ops = nullptr);

struct SoftMapResult {
  std::vector<double> info;   // length k
  std::vector<double> coded;  // length n
};

/// Exhaustive max-log soft-MAP over all 2^k codewords of a small code.
/// Codeword j carries the information word binary(j), MSB first.
class Codebook {
 public:
  explicit Codebook(const RmCode& code);

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t size() const noexcept { return std::size_t{1} << k_; }

  SoftMapResult soft_map(std::span<const double> llr, OpCounter* ops = nullptr) const;

  /// Coded-bit LLRs only, written to `out` (may alias `llr`). `metrics`
  /// needs size() entries.
  void soft_map_coded_into(std::span<const double> llr, std::span<double> out,
                           std::span<double> metrics, OpCounter* ops = nullptr) const;

  /// Index of the codeword maximizing <l, 1-2c>, smallest index on ties.
  std::size_t ml_index(std::span<const double> llr, std::span<double> metrics,
                       OpCounter* ops = nullptr) const;

  /// Codeword j as +-1 values.
  std::span<const double> bipolar(std::size_t j) const {
    return {bipolar_.data() + j * n_, n_};
  }

 private:
  void metrics_into(std::span<const double> llr, std::span<double> metrics, OpCounter* ops) const;
  void coded_from_metrics(std::span<const double> metrics, std::span<double> out,
                          OpCounter* ops) const;

  std::size_t n_ = 0;
  std::size_t k_ = 0;
  std::vector<double> bipolar_;  // size() x n, row-major
};

/// One-shot Codebook(code).soft_map(llr). Throws SizeLimitError for k > 16.
SoftMapResult brute_force_soft_map(std::span<const double> llr, const RmCode& code,
                                   OpCounter* ops = nullptr);

}  // namespace rmpc
