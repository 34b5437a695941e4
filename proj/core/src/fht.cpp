#include "rmpc/fht.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "rmpc/errors.hpp"

namespace rmpc {

namespace {

void require_power_of_two(std::size_t n) {
  if (n == 0 || !std::has_single_bit(n))
    throw DimensionError("transform length " + std::to_string(n) + " is not a power of two");
}

// Largest |v(i)|, smallest index on ties.
std::size_t argmax_abs(std::span<const double> v) {
  std::size_t best = 0;
  double best_abs = std::abs(v[0]);
  for (std::size_t i = 1; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > best_abs) {
      best_abs = a;
      best = i;
    }
  }
  return best;
}

void count_argmax(OpCounter* ops, std::size_t n) {
  if (!ops) return;
  ops->other += n;  // |.|
  ops->compare += n - 1;
  ops->depth += 1 + reduction_depth(n);
  ops->other += n;  // emit +-h_i
  ops->depth += 1;
}

}  // namespace

void fht_in_place(std::span<double> v, OpCounter* ops) {
  const std::size_t n = v.size();
  require_power_of_two(n);
  std::uint64_t stages = 0;
  for (std::size_t h = 1; h < n; h <<= 1, ++stages) {
    for (std::size_t i = 0; i < n; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = v[j];
        const double b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
    }
  }
  if (ops) {
    ops->add_sub += stages * n;
    ops->depth += stages;
  }
}

std::vector<double> fht(std::span<const double> v, OpCounter* ops) {
  std::vector<double> out(v.begin(), v.end());
  fht_in_place(out, ops);
  return out;
}

HardDecision fht_ml_decode(std::span<const double> llr, const FirstOrderTables& tables,
                           OpCounter* ops) {
  if (llr.size() != tables.n)
    throw DimensionError("LLR length " + std::to_string(llr.size()) + " != n = " +
                         std::to_string(tables.n));
  const auto wh = fht(llr, ops);
  const std::size_t best = argmax_abs(wh);
  count_argmax(ops, wh.size());

  const bool negative = wh[best] < 0.0;
  HardDecision out{BitVector(tables.n), tables.info_word(best, negative)};
  for (std::size_t x = 0; x < tables.n; ++x)
    out.codeword.set(x, (std::popcount(x & best) & 1) != static_cast<int>(negative));
  return out;
}

void fht_ml_decode_bipolar(std::span<const double> llr, std::span<double> out,
                           std::span<double> scratch, OpCounter* ops) {
  const std::size_t n = llr.size();
  if (out.size() != n || scratch.size() < n) throw DimensionError("buffer size mismatch");
  std::copy(llr.begin(), llr.end(), scratch.begin());
  auto wh = scratch.first(n);
  fht_in_place(wh, ops);
  const std::size_t best = argmax_abs(wh);
  count_argmax(ops, n);
  const double s = wh[best] < 0.0 ? -1.0 : 1.0;
  for (std::size_t x = 0; x < n; ++x) out[x] = (std::popcount(x & best) & 1) ? -s : s;
}

}  // namespace rmpc
