#pragma once

#include <cstdint>

namespace rmpc {

/// Arithmetic-operation tally for one decode (or an accumulation of them).
/// Owned by the caller and passed by pointer; decoders never touch global
/// state. `depth` is the length of the longest dependency chain, counting
/// work that could run in parallel once.
struct OpCounter {
  std::uint64_t add_sub = 0;
  std::uint64_t compare = 0;
  std::uint64_t other = 0;  // abs, sign products, scaling
  std::uint64_t depth = 0;

  std::uint64_t total() const noexcept { return add_sub + compare + other; }

  OpCounter& operator+=(const OpCounter& o) noexcept {
    add_sub += o.add_sub;
    compare += o.compare;
    other += o.other;
    depth += o.depth;
    return *this;
  }
};

/// ceil(log2(x)) for x >= 1; depth of a balanced reduction tree over x items.
constexpr std::uint64_t reduction_depth(std::uint64_t x) noexcept {
  std::uint64_t d = 0;
  while ((std::uint64_t{1} << d) < x) ++d;
  return d;
}

}  // namespace rmpc
