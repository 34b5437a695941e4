#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "rmpc/errors.hpp"
#include "rmpc/fht.hpp"
#include "rmpc/rm_code.hpp"
#include "rmpc/soft_fht.hpp"

using namespace rmpc;

namespace {

std::vector<std::vector<int>> as_int_words(const std::vector<BitVector>& words) {
  std::vector<std::vector<int>> out;
  for (const auto& w : words) {
    std::vector<int> c(w.size());
    for (std::size_t x = 0; x < w.size(); ++x) c[x] = w[x];
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

TEST_CASE("precompute_tables small cases") {
  const auto t1 = precompute_tables(1);
  CHECK(t1.zero_sets[1] == std::vector<std::uint32_t>{0});
  CHECK(t1.one_sets[1] == std::vector<std::uint32_t>{1});

  const auto t2 = precompute_tables(2);
  CHECK(t2.column_supports[0] == std::vector<std::uint32_t>{0});
  CHECK(t2.column_supports[3] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(t2.info_word(3, true) == BitVector{1, 1, 1});

  CHECK_THROWS_AS(precompute_tables(0), ParameterError);
  CHECK_THROWS_AS(precompute_tables(kMaxMatrixOrder + 1), SizeLimitError);
}

TEST_CASE("index sets are balanced partitions and supports are nonempty for m <= 10") {
  for (int m = 1; m <= 10; ++m) {
    const auto t = precompute_tables(m);
    for (std::size_t b = 1; b <= static_cast<std::size_t>(m); ++b) {
      REQUIRE(t.zero_sets[b].size() == t.n / 2);
      REQUIRE(t.one_sets[b].size() == t.n / 2);
      std::vector<int> seen(t.n, 0);
      for (auto i : t.zero_sets[b]) ++seen[i];
      for (auto i : t.one_sets[b]) ++seen[i];
      for (int s : seen) REQUIRE(s == 1);
    }
    for (const auto& support : t.column_supports) {
      REQUIRE_FALSE(support.empty());
      CHECK(support.front() == 0);
    }
  }
}

TEST_CASE("info_bit_llrs on a strongly positive frame") {
  const auto t = precompute_tables(2);
  const auto wh = fht(std::vector<double>(4, 10.0));
  REQUIRE(wh == std::vector<double>{40, 0, 0, 0});
  // Exhaustive max-log gives 40 for every bit: the best u_0 = 1 codeword
  // correlates to 0, not -40.
  const auto expected = oracle::maxlog_info_llrs(std::vector<double>(4, 10.0),
                                                 oracle::first_order_codewords(2), 3);
  CHECK(expected == std::vector<double>{40, 40, 40});
  CHECK(info_bit_llrs(wh, t) == expected);
}

TEST_CASE("info_bit_llrs symmetry under l -> -l") {
  std::mt19937_64 rng(21);
  const auto t = precompute_tables(4);
  for (int trial = 0; trial < 100; ++trial) {
    auto l = oracle::gaussian_vector(t.n, rng);
    const auto a = info_bit_llrs(fht(l), t);
    for (auto& v : l) v = -v;
    const auto b = info_bit_llrs(fht(l), t);
    CHECK(b[0] == doctest::Approx(-a[0]));
    for (std::size_t i = 1; i < a.size(); ++i) CHECK(b[i] == doctest::Approx(a[i]));
  }
}

TEST_CASE("info_bit_llrs equals exhaustive max-log on random frames") {
  std::mt19937_64 rng(22);
  for (int m = 2; m <= 5; ++m) {
    const auto t = precompute_tables(m);
    const auto words = oracle::first_order_codewords(m);
    for (int frame = 0; frame < 500; ++frame) {
      const auto l = oracle::gaussian_vector(t.n, rng, 0.5, 1.5);
      const auto got = info_bit_llrs(fht(l), t);
      const auto expected = oracle::maxlog_info_llrs(l, words, static_cast<std::size_t>(m) + 1);
      for (std::size_t i = 0; i < got.size(); ++i) REQUIRE(std::abs(got[i] - expected[i]) <= 1e-9);
    }
  }
}

TEST_CASE("encoded_bit_llrs min-sum examples") {
  const auto t = precompute_tables(2);
  const auto out = encoded_bit_llrs(std::vector<double>{2, -1, 3}, t);
  CHECK(out[0] == 2);   // support {0}
  CHECK(out[2] == -1);  // support {0,1}: sign(+2)sign(-1) min(2,1)
  CHECK(out[1] == 2);   // support {0,2}
  CHECK(out[3] == -1);  // support {0,1,2}
  for (double v : encoded_bit_llrs(std::vector<double>{1, 4, 0.5}, t)) CHECK(v > 0);
  // Zero counts as positive.
  CHECK(encoded_bit_llrs(std::vector<double>{0, -1, -1}, t)[3] == 0.0);
  CHECK_THROWS_AS(encoded_bit_llrs(std::vector<double>{1, 2}, t), DimensionError);
}

TEST_CASE("soft_fht_decode on noiseless all-zero input") {
  const auto t = precompute_tables(5);
  for (double v : soft_fht_decode(std::vector<double>(t.n, 8.0), t)) CHECK(v > 0);
}

TEST_CASE("soft_fht_decode is positively homogeneous") {
  std::mt19937_64 rng(23);
  const auto t = precompute_tables(5);
  for (double alpha : {0.25, 1.0, 3.5}) {
    const auto l = oracle::gaussian_vector(t.n, rng);
    auto scaled = l;
    for (auto& v : scaled) v *= alpha;
    const auto a = soft_fht_decode(l, t);
    const auto b = soft_fht_decode(scaled, t);
    for (std::size_t j = 0; j < t.n; ++j) CHECK(b[j] == doctest::Approx(alpha * a[j]));
  }
}

TEST_CASE("soft_fht_decode signs reproduce the ML codeword; info signs match ML info bits") {
  std::mt19937_64 rng(24);
  for (int m = 2; m <= 6; ++m) {
    const auto t = precompute_tables(m);
    const auto words = oracle::first_order_codewords(m);
    for (int frame = 0; frame < 300; ++frame) {
      const auto l = oracle::gaussian_vector(t.n, rng, 0.3, 1.0);
      const auto best = oracle::ml_argmax(l, words);
      if (!best.unique) continue;
      const auto out = soft_fht_decode(l, t);
      for (std::size_t x = 0; x < t.n; ++x) REQUIRE((out[x] < 0) == (words[best.index][x] == 1));
      const auto info = info_bit_llrs(fht(l), t);
      const auto u = BitVector::from_integer(best.index, static_cast<std::size_t>(m) + 1);
      for (std::size_t i = 0; i < info.size(); ++i) REQUIRE((info[i] < 0) == (u[i] == 1));
    }
  }
}

TEST_CASE("soft_fht_decode_into matches soft_fht_decode and may alias") {
  std::mt19937_64 rng(25);
  const auto t = precompute_tables(6);
  SoftFhtWorkspace ws(t);
  auto l = oracle::gaussian_vector(t.n, rng);
  const auto expected = soft_fht_decode(l, t);
  soft_fht_decode_into(l, l, t, ws);
  CHECK(l == expected);
}

TEST_CASE("soft-FHT op count stays within a constant of n log2 n") {
  double lo = 1e300, hi = 0;
  for (int m = 4; m <= 10; ++m) {
    const auto t = precompute_tables(m);
    OpCounter ops;
    soft_fht_decode(std::vector<double>(t.n, 1.0), t, &ops);
    const double ratio = static_cast<double>(ops.total()) / (static_cast<double>(t.n) * m);
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    CHECK(ops.depth <= 4 * static_cast<std::uint64_t>(m));
  }
  CHECK(hi <= 6.0);
  CHECK(hi / lo < 1.5);
}

TEST_CASE("brute_force_soft_map agrees with soft-FHT info LLRs on first-order codes") {
  std::mt19937_64 rng(26);
  for (int m = 1; m <= 5; ++m) {
    const auto code = build_rm_code(m, 1);
    const auto t = precompute_tables(m);
    for (int frame = 0; frame < 200; ++frame) {
      const auto l = oracle::gaussian_vector(t.n, rng);
      const auto bf = brute_force_soft_map(l, code);
      const auto fast = info_bit_llrs(fht(l), t);
      for (std::size_t i = 0; i < fast.size(); ++i) REQUIRE(std::abs(bf.info[i] - fast[i]) <= 1e-9);
    }
  }
}

TEST_CASE("brute_force_soft_map on RM(3,2) matches the oracle and handles zero input") {
  std::mt19937_64 rng(27);
  const auto code = build_rm_code(3, 2);
  const Codebook book(code);
  CHECK(book.size() == 128);
  const auto words = as_int_words(enumerate_codewords(code));
  for (int frame = 0; frame < 200; ++frame) {
    const auto l = oracle::gaussian_vector(8, rng);
    const auto got = book.soft_map(l);
    const auto info = oracle::maxlog_info_llrs(l, words, 7);
    const auto coded = oracle::maxlog_coded_llrs(l, words);
    for (std::size_t i = 0; i < 7; ++i) REQUIRE(got.info[i] == doctest::Approx(info[i]));
    for (std::size_t x = 0; x < 8; ++x) REQUIRE(got.coded[x] == doctest::Approx(coded[x]));
  }
  const auto zero = book.soft_map(std::vector<double>(8, 0.0));
  for (double v : zero.info) CHECK(v == 0.0);
  for (double v : zero.coded) CHECK(v == 0.0);
  CHECK_THROWS_AS(Codebook(build_rm_code(6, 2)), SizeLimitError);
}
