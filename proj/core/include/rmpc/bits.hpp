#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rmpc {

/// Binary word over GF(2), one byte per bit. Every element is 0 or 1.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : bits_(n, 0) {}
  BitVector(std::initializer_list<int> bits);
  explicit BitVector(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }

  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  std::span<std::uint8_t> mutable_bits() noexcept { return bits_; }

  std::size_t weight() const noexcept;
  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  /// "0101..." rendering, mostly for test diagnostics.
  std::string to_string() const;

  /// k-bit binary representation of `value`, most significant bit first.
  static BitVector from_integer(std::uint64_t value, std::size_t k);

 private:
  std::vector<std::uint8_t> bits_;
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Dense GF(2) matrix with rows packed into 64-bit words.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static BitMatrix from_rows(std::span<const BitVector> rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return words_per_row_; }

  bool get(std::size_t r, std::size_t c) const {
    return (row_words(r)[c >> 6] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c, bool v);

  std::span<const std::uint64_t> row_words(std::size_t r) const {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }
  std::span<std::uint64_t> row_words(std::size_t r) {
    return {words_.data() + r * words_per_row_, words_per_row_};
  }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  std::size_t row_weight(std::size_t r) const;
  void set_row(std::size_t r, const BitVector& bits);
  void append_row(const BitVector& bits);

  /// Row i of the result is row i of this matrix followed by rows of `other`.
  BitMatrix stacked(const BitMatrix& other) const;

  /// x * M over GF(2) for a row vector x of length rows().
  BitVector left_multiply(const BitVector& x) const;

  std::size_t rank() const;

  /// True when every row of `other` lies in the row space of this matrix.
  bool row_space_contains(const BitMatrix& other) const;
  bool row_space_contains(const BitVector& v) const;
  bool same_row_space(const BitMatrix& other) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Minimum Hamming weight over all nonzero vectors in the row space of a
/// full-row-rank generator, by Gray-code enumeration of its 2^rows span.
std::size_t min_nonzero_weight(const BitMatrix& generator);

}  // namespace rmpc
