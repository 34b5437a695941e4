#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rmpc/bits.hpp"

namespace rmpc {

/// Index tables for decoding RM(m,1), fixed per m and shared read-only.
///
/// Indices are 0-based. Info bit 0 multiplies the all-one generator row;
/// info bits 1..m multiply the G1 rows. Hadamard column i corresponds to the
/// codeword with information word (0, binary(i)) and its negation to
/// (1, binary(i)).
struct FirstOrderTables {
  int m = 0;
  std::size_t n = 0;

  /// zero_sets[b] / one_sets[b]: Hadamard indices whose info bit b is 0 / 1.
  /// Entry 0 is left empty since info bit 0 is handled separately.
  std::vector<std::vector<std::uint32_t>> zero_sets;
  std::vector<std::vector<std::uint32_t>> one_sets;

  /// column_supports[j]: generator rows with a 1 in column j.
  std::vector<std::vector<std::uint32_t>> column_supports;

  /// first_half_info[i]: (m+1)-bit info word of the i-th codeword in
  /// enumeration order, i < n. Bit 0 is always 0 here.
  std::vector<BitVector> first_half_info;

  /// Info word for Hadamard column `index`, negated when `negative`.
  BitVector info_word(std::size_t index, bool negative) const {
    BitVector u = first_half_info.at(index);
    if (negative) u.flip(0);
    return u;
  }
};

/// Builds the tables by enumerating the first n information words and
/// reading column supports off the canonical RM(m,1) generator.
FirstOrderTables precompute_tables(int m);

}  // namespace rmpc
