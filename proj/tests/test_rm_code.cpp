#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "rmpc/errors.hpp"
#include "rmpc/rm_code.hpp"

using namespace rmpc;

namespace {

std::size_t binom(int m, int i) {
  std::size_t b = 1;
  for (int t = 0; t < i; ++t) b = b * static_cast<std::size_t>(m - t) / static_cast<std::size_t>(t + 1);
  return b;
}

BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1U);
  return v;
}

}  // namespace

TEST_CASE("polarization matrix small cases") {
  CHECK(build_polarization_matrix(0) == BitMatrix{{1}});
  CHECK(build_polarization_matrix(1) == BitMatrix{{1, 0}, {1, 1}});
  CHECK(build_polarization_matrix(2) ==
        BitMatrix{{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}});
  CHECK_THROWS_AS(build_polarization_matrix(kMaxMatrixOrder + 1), SizeLimitError);
}

TEST_CASE("polarization matrix is the Kronecker power of [[1,0],[1,1]]") {
  // P_{2n} = [[P, 0], [P, P]]
  for (int m = 1; m <= 5; ++m) {
    const auto prev = build_polarization_matrix(m - 1);
    const auto p = build_polarization_matrix(m);
    const std::size_t h = prev.rows();
    for (std::size_t i = 0; i < 2 * h; ++i)
      for (std::size_t j = 0; j < 2 * h; ++j) {
        const bool expected = (i < h && j >= h) ? false : prev.get(i % h, j % h);
        REQUIRE(p.get(i, j) == expected);
      }
  }
}

TEST_CASE("rm_dimension") {
  CHECK(rm_dimension(6, 1) == 7);
  CHECK(rm_dimension(13, 2) == 92);
  CHECK(rm_dimension(3, 2) == 7);
  CHECK(rm_dimension(8, 2) == 37);
  CHECK(rm_dimension(5, 5) == 32);
  CHECK_THROWS_AS(rm_dimension(3, 4), ParameterError);
  CHECK_THROWS_AS(rm_dimension(3, -1), ParameterError);
}

TEST_CASE("canonical generators for small codes") {
  const auto rm11 = build_rm_code(1, 1);
  CHECK(rm11.k() == 2);
  CHECK(rm11.generator() == BitMatrix{{1, 1}, {0, 1}});

  const auto rm21 = build_rm_code(2, 1);
  CHECK(rm21.k() == 3);
  CHECK(rm21.generator() == BitMatrix{{1, 1, 1, 1}, {0, 0, 1, 1}, {0, 1, 0, 1}});
  // Same row space as the weight >= 2 rows of P_4: rows 1, 2, 3.
  const auto p = build_polarization_matrix(2);
  BitMatrix selected{{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 1, 1, 1}};
  CHECK(selected.row(0) == p.row(1));
  CHECK(rm21.generator().same_row_space(selected));

  CHECK(build_rm_code(8, 2).k() == 37);
  CHECK_THROWS_AS(build_rm_code(3, 4), ParameterError);
  CHECK_THROWS_AS(build_rm_code(3, -1), ParameterError);
  CHECK_THROWS_AS(build_rm_code(kMaxMatrixOrder + 1, 1), SizeLimitError);
}

TEST_CASE("G1 columns are binary expansions, MSB in the first G1 row") {
  const auto code = build_rm_code(4, 1);
  for (std::size_t x = 0; x < code.n(); ++x) {
    CHECK(code.generator().get(0, x));
    for (int t = 1; t <= 4; ++t)
      CHECK(code.generator().get(static_cast<std::size_t>(t), x) == (((x >> (4 - t)) & 1U) != 0));
  }
}

TEST_CASE("dimension and weight profile for all m <= 10") {
  for (int m = 0; m <= 10; ++m) {
    for (int r = 0; r <= m; ++r) {
      const auto code = build_rm_code(m, r);
      REQUIRE(code.k() == rm_dimension(m, r));
      const std::size_t n = code.n();
      std::map<std::size_t, std::size_t> by_weight;
      for (auto w : code.weight_profile()) {
        CHECK(w >= (std::size_t{1} << (m - r)));
        ++by_weight[w];
      }
      for (int i = 0; i <= r; ++i) CHECK(by_weight[n >> i] == binom(m, i));
      CHECK(code.generator().row_weight(0) == n);
    }
  }
}

TEST_CASE("row space equals the weight-selected polarization rows for m <= 6") {
  for (int m = 0; m <= 6; ++m) {
    const auto p = build_polarization_matrix(m);
    for (int r = 0; r <= m; ++r) {
      BitMatrix selected;
      for (std::size_t i = 0; i < p.rows(); ++i)
        if (p.row_weight(i) >= (std::size_t{1} << (m - r))) selected.append_row(p.row(i));
      const auto code = build_rm_code(m, r);
      CHECK(selected.rows() == code.k());
      CHECK(code.generator().same_row_space(selected));
    }
  }
}

TEST_CASE("higher-degree rows are products of G1 rows in lexicographic subset order") {
  const auto code = build_rm_code(4, 2);
  const auto& mono = code.row_monomials();
  REQUIRE(mono.size() == 11);
  CHECK(mono[0].empty());
  CHECK(mono[5] == std::vector<int>{1, 2});
  CHECK(mono[6] == std::vector<int>{1, 3});
  CHECK(mono[10] == std::vector<int>{3, 4});
  for (std::size_t row = 5; row < 11; ++row) {
    const auto a = static_cast<std::size_t>(mono[row][0]);
    const auto b = static_cast<std::size_t>(mono[row][1]);
    for (std::size_t x = 0; x < code.n(); ++x)
      CHECK(code.generator().get(row, x) == (code.generator().get(a, x) && code.generator().get(b, x)));
  }
}

TEST_CASE("encode") {
  const auto code = build_rm_code(2, 1);
  CHECK(encode(code, BitVector{0, 0, 0}) == BitVector{0, 0, 0, 0});
  CHECK(encode(code, BitVector{1, 0, 0}) == BitVector{1, 1, 1, 1});
  CHECK(encode(code, BitVector{1, 1, 0}) == BitVector{1, 1, 0, 0});
  CHECK_THROWS_AS(encode(code, BitVector{1, 0}), DimensionError);
}

TEST_CASE("encode is linear and unencode inverts it") {
  std::mt19937_64 rng(11);
  for (auto [m, r] : {std::pair{3, 1}, {5, 2}, {7, 1}, {7, 3}, {4, 4}, {6, 0}}) {
    const auto code = build_rm_code(m, r);
    for (int trial = 0; trial < 50; ++trial) {
      const auto u = random_bits(code.k(), rng);
      const auto v = random_bits(code.k(), rng);
      CHECK(encode(code, u ^ v) == (encode(code, u) ^ encode(code, v)));
      CHECK(unencode(code, encode(code, u)) == u);
    }
  }
}

TEST_CASE("enumerate_codewords order and size") {
  const auto rm11 = enumerate_codewords(build_rm_code(1, 1));
  REQUIRE(rm11.size() == 4);
  CHECK(rm11[0] == BitVector{0, 0});
  CHECK(rm11[1] == BitVector{0, 1});
  CHECK(rm11[2] == BitVector{1, 1});
  CHECK(rm11[3] == BitVector{1, 0});

  const auto rm21 = enumerate_codewords(build_rm_code(2, 1));
  CHECK(rm21.size() == 8);
  CHECK(rm21.front().weight() == 0);

  for (auto [m, r] : {std::pair{3, 1}, {4, 2}, {3, 3}}) {
    const auto words = enumerate_codewords(build_rm_code(m, r));
    CHECK(words.size() == (std::size_t{1} << rm_dimension(m, r)));
    std::set<std::string> distinct;
    for (const auto& w : words) distinct.insert(w.to_string());
    CHECK(distinct.size() == words.size());
  }
  CHECK_THROWS_AS(enumerate_codewords(build_rm_code(7, 3)), SizeLimitError);
}

TEST_CASE("brute-force minimum distance equals 2^(m-r)") {
  CHECK(min_distance_bruteforce(build_rm_code(3, 1)) == 4);
  CHECK(min_distance_bruteforce(build_rm_code(2, 1)) == 2);
  for (int m = 0; m <= 5; ++m)
    for (int r = 0; r <= m; ++r) {
      const auto code = build_rm_code(m, r);
      if (code.k() > 20) continue;
      CHECK(min_distance_bruteforce(code) == (std::size_t{1} << (m - r)));
    }
  CHECK_THROWS_AS(min_distance_bruteforce(build_rm_code(7, 3)), SizeLimitError);
}

TEST_CASE("descriptor parsing") {
  CHECK(parse_rm_descriptor("rm(6,1)").k() == 7);
  CHECK(parse_rm_descriptor(" RM( 3 , 2 ) ").descriptor() == "rm(3,2)");
  CHECK_THROWS_AS(parse_rm_descriptor("rm(6;1)"), ParseError);
  CHECK_THROWS_AS(parse_rm_descriptor("polar(6,1)"), ParseError);
  CHECK_THROWS_AS(parse_rm_descriptor("rm(2,3)"), ParameterError);
}
