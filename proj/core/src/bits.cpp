#include "rmpc/bits.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "rmpc/errors.hpp"

namespace rmpc {

namespace {

std::uint8_t checked_bit(long long v) {
  if (v != 0 && v != 1) throw ParameterError("bit value must be 0 or 1");
  return static_cast<std::uint8_t>(v);
}

// Gaussian elimination on a copy of the packed rows; returns the rank.
std::size_t eliminate(std::vector<std::uint64_t>& words, std::size_t rows,
                      std::size_t cols, std::size_t wpr) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t w = c >> 6;
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    std::size_t pivot = rank;
    while (pivot < rows && !(words[pivot * wpr + w] & mask)) ++pivot;
    if (pivot == rows) continue;
    if (pivot != rank) {
      std::swap_ranges(words.begin() + pivot * wpr,
                       words.begin() + (pivot + 1) * wpr,
                       words.begin() + rank * wpr);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r != rank && (words[r * wpr + w] & mask)) {
        for (std::size_t i = w; i < wpr; ++i) words[r * wpr + i] ^= words[rank * wpr + i];
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BitVector::BitVector(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) bits_.push_back(checked_bit(b));
}

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) checked_bit(b);
}

std::size_t BitVector::weight() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size() != size()) throw DimensionError("xor of bit vectors with different lengths");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] ^= other.bits_[i];
  return *this;
}

std::string BitVector::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

BitVector BitVector::from_integer(std::uint64_t value, std::size_t k) {
  BitVector v(k);
  for (std::size_t i = 0; i < k; ++i) v.bits_[k - 1 - i] = (value >> i) & 1U;
  return v;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DimensionError("hamming distance of different lengths");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
      words_(rows * words_per_row_, 0) {}

BitMatrix::BitMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : BitMatrix(rows.size(), rows.size() ? rows.begin()->size() : 0) {
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged BitMatrix initializer");
    std::size_t c = 0;
    for (int b : row) set(r, c++, checked_bit(b));
    ++r;
  }
}

BitMatrix BitMatrix::from_rows(std::span<const BitVector> rows) {
  BitMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

void BitMatrix::set(std::size_t r, std::size_t c, bool v) {
  auto& w = words_[r * words_per_row_ + (c >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (c & 63);
  w = v ? (w | mask) : (w & ~mask);
}

BitVector BitMatrix::row(std::size_t r) const {
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, get(r, c));
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

std::size_t BitMatrix::row_weight(std::size_t r) const {
  std::size_t w = 0;
  for (auto word : row_words(r)) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

void BitMatrix::set_row(std::size_t r, const BitVector& bits) {
  if (bits.size() != cols_) throw DimensionError("row length does not match matrix width");
  auto words = row_words(r);
  std::fill(words.begin(), words.end(), 0);
  for (std::size_t c = 0; c < cols_; ++c)
    if (bits[c]) words[c >> 6] |= std::uint64_t{1} << (c & 63);
}

void BitMatrix::append_row(const BitVector& bits) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = bits.size();
    words_per_row_ = (cols_ + 63) / 64;
  }
  words_.resize((rows_ + 1) * words_per_row_, 0);
  ++rows_;
  set_row(rows_ - 1, bits);
}

BitMatrix BitMatrix::stacked(const BitMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionError("stacking matrices of different widths");
  BitMatrix out(rows_ + other.rows_, cols_);
  std::copy(words_.begin(), words_.end(), out.words_.begin());
  std::copy(other.words_.begin(), other.words_.end(),
            out.words_.begin() + static_cast<std::ptrdiff_t>(words_.size()));
  return out;
}

BitVector BitMatrix::left_multiply(const BitVector& x) const {
  if (x.size() != rows_) throw DimensionError("vector length does not match matrix rows");
  std::vector<std::uint64_t> acc(words_per_row_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!x[r]) continue;
    auto words = row_words(r);
    for (std::size_t i = 0; i < words_per_row_; ++i) acc[i] ^= words[i];
  }
  BitVector out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.set(c, (acc[c >> 6] >> (c & 63)) & 1U);
  return out;
}

std::size_t BitMatrix::rank() const {
  auto copy = words_;
  return eliminate(copy, rows_, cols_, words_per_row_);
}

bool BitMatrix::row_space_contains(const BitMatrix& other) const {
  if (other.cols_ != cols_) throw DimensionError("row space check across different widths");
  return stacked(other).rank() == rank();
}

bool BitMatrix::row_space_contains(const BitVector& v) const {
  BitMatrix single(1, cols_);
  single.set_row(0, v);
  return row_space_contains(single);
}

bool BitMatrix::same_row_space(const BitMatrix& other) const {
  if (other.cols_ != cols_) return false;
  const auto r = rank();
  return r == other.rank() && stacked(other).rank() == r;
}

std::size_t min_nonzero_weight(const BitMatrix& generator) {
  const std::size_t k = generator.rows();
  if (k == 0) throw DimensionError("empty generator");
  const std::size_t wpr = generator.words_per_row();
  std::vector<std::uint64_t> acc(wpr, 0);
  std::size_t best = generator.cols() + 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t g = 1; g < total; ++g) {
    // Gray code step: flip the row at the position of the lowest set bit of g.
    const auto row = static_cast<std::size_t>(std::countr_zero(g));
    auto words = generator.row_words(row);
    std::size_t w = 0;
    for (std::size_t i = 0; i < wpr; ++i) {
      acc[i] ^= words[i];
      w += static_cast<std::size_t>(std::popcount(acc[i]));
    }
    if (w > 0) best = std::min(best, w);
  }
  return best;
}

}  // namespace rmpc
