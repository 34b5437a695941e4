#pragma once

#include <span>
#include <vector>

#include "rmpc/bits.hpp"
#include "rmpc/first_order_tables.hpp"
#include "rmpc/op_counter.hpp"

namespace rmpc {

/// In-place fast Walsh-Hadamard transform, v <- v * H with Sylvester
/// H = [[1,1],[1,-1]]^{(x)m}. Runs log2(n) butterfly stages of n add/sub each.
/// Throws DimensionError unless v.size() is a power of two.
void fht_in_place(std::span<double> v, OpCounter* ops = nullptr);

std::vector<double> fht(std::span<const double> v, OpCounter* ops = nullptr);

struct HardDecision {
  BitVector codeword;
  BitVector info;
};

/// Maximum-likelihood decoding of RM(m,1) from channel LLRs via one FHT.
/// Picks the largest |l_WH(i)| (smallest index on ties) and sign(0) = +1.
HardDecision fht_ml_decode(std::span<const double> llr, const FirstOrderTables& tables,
                           OpCounter* ops = nullptr);

/// Codeword-only variant writing 1 - 2c (i.e. +-1) straight into `out`,
/// which may alias `llr`. Used by the hard product decoder.
void fht_ml_decode_bipolar(std::span<const double> llr, std::span<double> out,
                           std::span<double> scratch, OpCounter* ops = nullptr);

}  // namespace rmpc
