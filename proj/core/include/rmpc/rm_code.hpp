#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rmpc/bits.hpp"

namespace rmpc {

inline constexpr int kMaxMatrixOrder = 16;      // 2^m x 2^m storage cap
inline constexpr int kMaxEnumerationDim = 20;   // 2^k enumeration cap

/// [[1,0],[1,1]]^{(x)m}. Entry (i, j) is 1 iff the bits of j are a subset of
/// the bits of i.
BitMatrix build_polarization_matrix(int m);

/// Sum_{i=0}^{r} C(m, i).
std::size_t rm_dimension(int m, int r);

/// Reed-Muller code RM(m, r) with its generator in canonical block order:
///
///   row 0          all-one row
///   rows 1..m      G1, column x holds the m-bit binary expansion of x
///                  (most significant bit in row 1)
///   then G2..Gr    products of distinct i-subsets of G1 rows, subsets in
///                  lexicographic order
///
/// Immutable after construction.
class RmCode {
 public:
  int m() const noexcept { return m_; }
  int r() const noexcept { return r_; }
  std::size_t n() const noexcept { return generator_.cols(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  std::size_t min_distance() const noexcept { return std::size_t{1} << (m_ - r_); }
  double rate() const noexcept { return static_cast<double>(k()) / static_cast<double>(n()); }
  const BitMatrix& generator() const noexcept { return generator_; }

  /// G1-row subset that generated each row (empty for the all-one row).
  const std::vector<std::vector<int>>& row_monomials() const noexcept { return monomials_; }

  /// Hamming weight of each generator row, in row order.
  std::vector<std::size_t> weight_profile() const;

  /// Information-set column for each generator row: row with G1-subset S
  /// owns the column whose index has exactly the bits of S set.
  const std::vector<std::uint32_t>& information_set() const noexcept { return info_set_; }

  /// "rm(m,r)"
  std::string descriptor() const;

  friend RmCode build_rm_code(int m, int r);

 private:
  RmCode() = default;

  int m_ = 0;
  int r_ = 0;
  BitMatrix generator_;
  std::vector<std::vector<int>> monomials_;
  std::vector<std::uint32_t> info_set_;
};

RmCode build_rm_code(int m, int r);

/// u * G over GF(2).
BitVector encode(const RmCode& code, const BitVector& u);

/// Packed-output variant for hot loops; `u` has k entries, `c` has n.
void encode_into(const RmCode& code, std::span<const std::uint8_t> u, std::span<std::uint8_t> c);

/// Information word read back from the information-set positions of `c`.
/// Exact inverse of encode() on codewords.
BitVector unencode(const RmCode& code, const BitVector& c);

/// All 2^k codewords; entry j encodes the k-bit binary expansion of j,
/// most significant bit first.
std::vector<BitVector> enumerate_codewords(const RmCode& code);

std::size_t min_distance_bruteforce(const RmCode& code);

/// Parses "rm(m,r)" case-insensitively, whitespace tolerated.
RmCode parse_rm_descriptor(std::string_view text);

}  // namespace rmpc
