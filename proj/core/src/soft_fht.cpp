#include "rmpc/soft_fht.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "rmpc/errors.hpp"
#include "rmpc/fht.hpp"

namespace rmpc {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_spectrum(std::size_t size, const FirstOrderTables& tables) {
  if (size != tables.n)
    throw DimensionError("LLR length " + std::to_string(size) + " != n = " +
                         std::to_string(tables.n));
}

// Info-bit LLRs from the spectrum; `magnitude` is scratch of length n.
void info_llrs_into(std::span<const double> wh, std::span<double> magnitude,
                    std::span<double> info, const FirstOrderTables& tables, OpCounter* ops) {
  const std::size_t n = tables.n;
  double hi = wh[0];
  double lo = wh[0];
  for (std::size_t i = 0; i < n; ++i) {
    hi = std::max(hi, wh[i]);
    lo = std::min(lo, wh[i]);
    magnitude[i] = std::abs(wh[i]);
  }
  // max(l_WH) - max(-l_WH)
  info[0] = hi + lo;

  for (std::size_t b = 1; b < info.size(); ++b) {
    double best0 = kNegInf;
    double best1 = kNegInf;
    for (auto i : tables.zero_sets[b]) best0 = std::max(best0, magnitude[i]);
    for (auto i : tables.one_sets[b]) best1 = std::max(best1, magnitude[i]);
    info[b] = best0 - best1;
  }

  if (ops) {
    const auto bits = static_cast<std::uint64_t>(tables.m);
    ops->compare += 2 * (n - 1);        // max and min of the spectrum
    ops->add_sub += 1;
    ops->other += n;                    // magnitudes
    ops->compare += bits * (n - 2);     // two maxima over n/2 entries per bit
    ops->add_sub += bits;
    ops->depth += 1 + reduction_depth(n / 2 > 0 ? n / 2 : 1) + 1;
  }
}

// Min-sum from info-bit LLRs to coded-bit LLRs.
void encoded_llrs_into(std::span<const double> info, std::span<double> info_abs,
                       std::span<double> out, const FirstOrderTables& tables, OpCounter* ops) {
  for (std::size_t i = 0; i < info.size(); ++i) info_abs[i] = std::abs(info[i]);
  std::uint64_t max_support = 1;
  std::uint64_t work = 0;
  for (std::size_t j = 0; j < tables.n; ++j) {
    const auto& support = tables.column_supports[j];
    double mag = std::numeric_limits<double>::infinity();
    bool negative = false;
    for (auto i : support) {
      mag = std::min(mag, info_abs[i]);
      negative ^= info[i] < 0.0;
    }
    out[j] = negative ? -mag : mag;
    work += support.size() - 1;
    max_support = std::max<std::uint64_t>(max_support, support.size());
  }
  if (ops) {
    ops->other += info.size();       // magnitudes
    ops->compare += work;            // minima
    ops->other += work + tables.n;   // sign products, then sign * min
    ops->depth += 1 + reduction_depth(max_support) + 1;
  }
}

}  // namespace

FirstOrderTables precompute_tables(int m) {
  if (m < 1) throw ParameterError("first-order tables need m >= 1");
  if (m > kMaxMatrixOrder)
    throw SizeLimitError("m=" + std::to_string(m) + " exceeds cap " + std::to_string(kMaxMatrixOrder));

  FirstOrderTables t;
  t.m = m;
  t.n = std::size_t{1} << m;
  const std::size_t k = static_cast<std::size_t>(m) + 1;

  // First half of the enumeration: info words binary(i) in k bits, u_0 = 0.
  t.first_half_info.reserve(t.n);
  for (std::size_t i = 0; i < t.n; ++i) t.first_half_info.push_back(BitVector::from_integer(i, k));

  t.zero_sets.assign(k, {});
  t.one_sets.assign(k, {});
  for (std::size_t b = 1; b < k; ++b) {
    t.zero_sets[b].reserve(t.n / 2);
    t.one_sets[b].reserve(t.n / 2);
  }
  for (std::size_t i = 0; i < t.n; ++i) {
    const auto& u = t.first_half_info[i];
    for (std::size_t b = 1; b < k; ++b)
      (u[b] ? t.one_sets[b] : t.zero_sets[b]).push_back(static_cast<std::uint32_t>(i));
  }

  const RmCode code = build_rm_code(m, 1);
  const auto& g = code.generator();
  t.column_supports.assign(t.n, {});
  for (std::size_t j = 0; j < t.n; ++j)
    for (std::size_t r = 0; r < g.rows(); ++r)
      if (g.get(r, j)) t.column_supports[j].push_back(static_cast<std::uint32_t>(r));
  return t;
}

std::vector<double> info_bit_llrs(std::span<const double> l_wh, const FirstOrderTables& tables,
                                  OpCounter* ops) {
  check_spectrum(l_wh.size(), tables);
  std::vector<double> magnitude(tables.n);
  std::vector<double> info(static_cast<std::size_t>(tables.m) + 1);
  info_llrs_into(l_wh, magnitude, info, tables, ops);
  return info;
}

std::vector<double> encoded_bit_llrs(std::span<const double> l_inf,
                                     const FirstOrderTables& tables, OpCounter* ops) {
  if (l_inf.size() != static_cast<std::size_t>(tables.m) + 1)
    throw DimensionError("info LLR length must be m+1");
  std::vector<double> info_abs(l_inf.size());
  std::vector<double> out(tables.n);
  encoded_llrs_into(l_inf, info_abs, out, tables, ops);
  return out;
}

void soft_fht_decode_into(std::span<const double> llr, std::span<double> out,
                          const FirstOrderTables& tables, SoftFhtWorkspace& ws, OpCounter* ops) {
  check_spectrum(llr.size(), tables);
  if (out.size() != tables.n) throw DimensionError("output length != n");
  std::copy(llr.begin(), llr.end(), ws.spectrum.begin());
  fht_in_place(ws.spectrum, ops);
  info_llrs_into(ws.spectrum, ws.magnitude, ws.info, tables, ops);
  encoded_llrs_into(ws.info, ws.info_abs, out, tables, ops);
}

std::vector<double> soft_fht_decode(std::span<const double> llr, const FirstOrderTables& tables,
                                    OpCounter* ops) {
  SoftFhtWorkspace ws(tables);
  std::vector<double> out(tables.n);
  soft_fht_decode_into(llr, out, tables, ws, ops);
  return out;
}

Codebook::Codebook(const RmCode& code) : n_(code.n()), k_(code.k()) {
  if (k_ > static_cast<std::size_t>(kMaxBruteForceDim))
    throw SizeLimitError("brute-force soft-MAP needs k <= " + std::to_string(kMaxBruteForceDim) +
                         ", got " + std::to_string(k_));
  const auto words = enumerate_codewords(code);
  bipolar_.resize(words.size() * n_);
  for (std::size_t j = 0; j < words.size(); ++j)
    for (std::size_t x = 0; x < n_; ++x) bipolar_[j * n_ + x] = words[j][x] ? -1.0 : 1.0;
}

void Codebook::metrics_into(std::span<const double> llr, std::span<double> metrics,
                            OpCounter* ops) const {
  if (llr.size() != n_) throw DimensionError("LLR length != n");
  if (metrics.size() < size()) throw DimensionError("metric buffer too small");
  for (std::size_t j = 0; j < size(); ++j) {
    const double* c = bipolar_.data() + j * n_;
    double acc = 0.0;
    for (std::size_t x = 0; x < n_; ++x) acc += llr[x] * c[x];
    metrics[j] = acc;
  }
  if (ops) {
    ops->add_sub += size() * n_;
    ops->depth += reduction_depth(n_) + 1;
  }
}

SoftMapResult Codebook::soft_map(std::span<const double> llr, OpCounter* ops) const {
  std::vector<double> metrics(size());
  metrics_into(llr, metrics, ops);

  SoftMapResult out{std::vector<double>(k_), std::vector<double>(n_)};
  for (std::size_t i = 0; i < k_; ++i) {
    const std::size_t shift = k_ - 1 - i;
    double best0 = kNegInf;
    double best1 = kNegInf;
    for (std::size_t j = 0; j < size(); ++j) {
      if ((j >> shift) & 1U)
        best1 = std::max(best1, metrics[j]);
      else
        best0 = std::max(best0, metrics[j]);
    }
    out.info[i] = best0 - best1;
  }
  if (ops) {
    ops->compare += k_ * size();
    ops->add_sub += k_;
  }
  coded_from_metrics(metrics, out.coded, ops);
  return out;
}

void Codebook::soft_map_coded_into(std::span<const double> llr, std::span<double> out,
                                   std::span<double> metrics, OpCounter* ops) const {
  if (out.size() != n_) throw DimensionError("output length != n");
  metrics_into(llr, metrics, ops);
  coded_from_metrics(metrics, out, ops);
}

void Codebook::coded_from_metrics(std::span<const double> metrics, std::span<double> out,
                                  OpCounter* ops) const {
  for (std::size_t x = 0; x < n_; ++x) {
    double best0 = kNegInf;
    double best1 = kNegInf;
    for (std::size_t j = 0; j < size(); ++j) {
      if (bipolar_[j * n_ + x] > 0.0)
        best0 = std::max(best0, metrics[j]);
      else
        best1 = std::max(best1, metrics[j]);
    }
    out[x] = best0 - best1;
  }
  if (ops) {
    ops->compare += n_ * size();
    ops->add_sub += n_;
    ops->depth += reduction_depth(size()) + 1;
  }
}

std::size_t Codebook::ml_index(std::span<const double> llr, std::span<double> metrics,
                               OpCounter* ops) const {
  metrics_into(llr, metrics, ops);
  std::size_t best = 0;
  for (std::size_t j = 1; j < size(); ++j)
    if (metrics[j] > metrics[best]) best = j;
  if (ops) {
    ops->compare += size() - 1;
    ops->depth += reduction_depth(size());
  }
  return best;
}

SoftMapResult brute_force_soft_map(std::span<const double> llr, const RmCode& code,
                                   OpCounter* ops) {
  return Codebook(code).soft_map(llr, ops);
}

}  // namespace rmpc
