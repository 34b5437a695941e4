#include "rmpc/rm_code.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <regex>
#include <stdexcept>
#include <string>

#include "rmpc/errors.hpp"

namespace rmpc {

namespace {

void check_order(int m, int r) {
  if (m < 0) throw ParameterError("RM length exponent m must be nonnegative");
  if (r < 0 || r > m)
    throw ParameterError("RM order r=" + std::to_string(r) + " outside [0, " + std::to_string(m) + "]");
}

void check_matrix_cap(int m) {
  if (m > kMaxMatrixOrder)
    throw SizeLimitError("m=" + std::to_string(m) + " exceeds matrix cap " +
                         std::to_string(kMaxMatrixOrder));
}

// Next i-subset of {1..m} in lexicographic order; false when exhausted.
bool next_combination(std::vector<int>& s, int m) {
  const int i = static_cast<int>(s.size());
  for (int pos = i - 1; pos >= 0; --pos) {
    if (s[static_cast<std::size_t>(pos)] < m - (i - 1 - pos)) {
      ++s[static_cast<std::size_t>(pos)];
      for (int q = pos + 1; q < i; ++q)
        s[static_cast<std::size_t>(q)] = s[static_cast<std::size_t>(q - 1)] + 1;
      return true;
    }
  }
  return false;
}

// Column mask of a G1-subset: G1 row t reads bit (m - t) of the column index.
std::uint32_t subset_mask(const std::vector<int>& subset, int m) {
  std::uint32_t mask = 0;
  for (int t : subset) mask |= std::uint32_t{1} << (m - t);
  return mask;
}

}  // namespace

BitMatrix build_polarization_matrix(int m) {
  if (m < 0) throw ParameterError("m must be nonnegative");
  check_matrix_cap(m);
  const std::size_t n = std::size_t{1} << m;
  BitMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((j & ~i) == 0) p.set(i, j, true);
  return p;
}

std::size_t rm_dimension(int m, int r) {
  check_order(m, r);
  std::size_t k = 0;
  std::size_t binom = 1;  // C(m, i)
  for (int i = 0; i <= r; ++i) {
    k += binom;
    binom = binom * static_cast<std::size_t>(m - i) / static_cast<std::size_t>(i + 1);
  }
  return k;
}

std::vector<std::size_t> RmCode::weight_profile() const {
  std::vector<std::size_t> w(k());
  for (std::size_t i = 0; i < k(); ++i) w[i] = generator_.row_weight(i);
  return w;
}

std::string RmCode::descriptor() const {
  return "rm(" + std::to_string(m_) + "," + std::to_string(r_) + ")";
}

RmCode build_rm_code(int m, int r) {
  check_order(m, r);
  check_matrix_cap(m);
  const std::size_t n = std::size_t{1} << m;

  RmCode code;
  code.m_ = m;
  code.r_ = r;
  code.generator_ = BitMatrix(rm_dimension(m, r), n);

  std::size_t row = 0;
  for (int degree = 0; degree <= r; ++degree) {
    std::vector<int> subset(static_cast<std::size_t>(degree));
    for (int i = 0; i < degree; ++i) subset[static_cast<std::size_t>(i)] = i + 1;
    do {
      const std::uint32_t mask = subset_mask(subset, m);
      for (std::size_t x = 0; x < n; ++x)
        if ((x & mask) == mask) code.generator_.set(row, x, true);
      code.monomials_.push_back(subset);
      code.info_set_.push_back(mask);
      ++row;
    } while (next_combination(subset, m));
  }

  // The canonical rows must span the same space as the rows of the
  // polarization matrix with weight >= 2^{m-r}. Row i of that matrix has
  // weight 2^{popcount(i)}, so those rows are generated without building it.
  if (m <= 12) {
    BitMatrix selected(0, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::popcount(i) < m - r) continue;
      BitVector prow(n);
      for (std::size_t j = 0; j < n; ++j) prow.set(j, (j & ~i) == 0);
      selected.append_row(prow);
    }
    if (selected.rows() != code.k() || !selected.same_row_space(code.generator_))
      throw std::logic_error("canonical RM generator does not match polarization row selection");
  }
  return code;
}

void encode_into(const RmCode& code, std::span<const std::uint8_t> u, std::span<std::uint8_t> c) {
  const auto& g = code.generator();
  if (u.size() != g.rows()) throw DimensionError("information word length != k");
  if (c.size() != g.cols()) throw DimensionError("codeword buffer length != n");
  const std::size_t wpr = g.words_per_row();
  std::uint64_t small[4] = {0, 0, 0, 0};
  std::vector<std::uint64_t> big;
  std::uint64_t* acc = small;
  if (wpr > 4) {
    big.assign(wpr, 0);
    acc = big.data();
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i]) continue;
    auto words = g.row_words(i);
    for (std::size_t w = 0; w < wpr; ++w) acc[w] ^= words[w];
  }
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = (acc[j >> 6] >> (j & 63)) & 1U;
}

BitVector encode(const RmCode& code, const BitVector& u) {
  if (u.size() != code.k())
    throw DimensionError("information word has length " + std::to_string(u.size()) +
                         ", code dimension is " + std::to_string(code.k()));
  BitVector c(code.n());
  encode_into(code, u.bits(), c.mutable_bits());
  return c;
}

BitVector unencode(const RmCode& code, const BitVector& c) {
  if (c.size() != code.n()) throw DimensionError("codeword length != n");
  // The generator restricted to the information set is the subset-inclusion
  // (zeta) matrix; over GF(2) its inverse sums over all submasks.
  const auto& info = code.information_set();
  BitVector u(info.size());
  for (std::size_t a = 0; a < info.size(); ++a) {
    const std::uint32_t mask = info[a];
    std::uint8_t bit = 0;
    for (std::uint32_t t = mask;; t = (t - 1) & mask) {
      bit ^= c[t];
      if (t == 0) break;
    }
    u.set(a, bit);
  }
  return u;
}

std::vector<BitVector> enumerate_codewords(const RmCode& code) {
  const std::size_t k = code.k();
  if (k > static_cast<std::size_t>(kMaxEnumerationDim))
    throw SizeLimitError("enumeration of 2^" + std::to_string(k) + " codewords exceeds cap");
  std::vector<BitVector> words;
  words.reserve(std::size_t{1} << k);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << k); ++j)
    words.push_back(encode(code, BitVector::from_integer(j, k)));
  return words;
}

std::size_t min_distance_bruteforce(const RmCode& code) {
  if (code.k() > static_cast<std::size_t>(kMaxEnumerationDim))
    throw SizeLimitError("dimension " + std::to_string(code.k()) + " exceeds enumeration cap");
  return min_nonzero_weight(code.generator());
}

RmCode parse_rm_descriptor(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  static const std::regex pattern(R"(^rm\((\d{1,3}),(\d{1,3})\)$)");
  std::smatch match;
  if (!std::regex_match(s, match, pattern))
    throw ParseError("bad code descriptor '" + std::string(text) + "', expected rm(m,r)");
  return build_rm_code(std::stoi(match[1]), std::stoi(match[2]));
}

}  // namespace rmpc
