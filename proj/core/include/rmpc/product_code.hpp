#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rmpc/bits.hpp"
#include "rmpc/first_order_tables.hpp"
#include "rmpc/op_counter.hpp"
#include "rmpc/rm_code.hpp"
#include "rmpc/soft_fht.hpp"

namespace rmpc {

/// Per-component decoder family. FHT components use soft-FHT in soft mode
/// and the FHT ML decoder in hard mode; brute-force components use exhaustive
/// max-log soft-MAP (soft) or exhaustive ML (hard).
enum class ComponentDecoder { kFht, kBruteForceMap };

enum class DecodeMode { kSoft, kHard };

std::string_view to_string(DecodeMode mode);
DecodeMode parse_decode_mode(std::string_view text);

struct ComponentSpec {
  std::string descriptor;                    // "rm(m,r)"
  std::optional<ComponentDecoder> decoder;   // default: FHT if r == 1, else brute force
};

struct Component {
  RmCode code;
  ComponentDecoder decoder;
  std::shared_ptr<const FirstOrderTables> tables;  // set for kFht
  std::shared_ptr<const Codebook> codebook;        // set for kBruteForceMap
};

/// Product C_1 (x) ... (x) C_Q of RM components. Component 1 is encoded and
/// decoded first and owns the fastest-varying tensor axis.
class ProductCode {
 public:
  const std::vector<Component>& components() const noexcept { return components_; }
  std::size_t dimensions() const noexcept { return components_.size(); }

  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t min_distance() const noexcept { return d_; }
  double rate() const noexcept { return static_cast<double>(k_) / static_cast<double>(n_); }

  /// Parameters of the enclosing RM(sum m_q, sum r_q).
  int m_total() const noexcept { return m_total_; }
  int r_total() const noexcept { return r_total_; }
  std::size_t enclosing_dimension() const noexcept { return enclosing_k_; }

  /// Axis sizes, component 1 first.
  std::vector<std::size_t> code_dims() const;
  std::vector<std::size_t> info_dims() const;

  /// "rm(6,1)xrm(2,1)", with ":bfmap" on brute-force components that
  /// would otherwise default to FHT.
  std::string descriptor() const;

  friend ProductCode build_product_code(std::span<const ComponentSpec> specs);

 private:
  std::vector<Component> components_;
  std::size_t n_ = 1;
  std::size_t k_ = 1;
  std::size_t d_ = 1;
  int m_total_ = 0;
  int r_total_ = 0;
  std::size_t enclosing_k_ = 0;
};

ProductCode build_product_code(std::span<const ComponentSpec> specs);

/// Parses "rm(6,1)xrm(2,1)" or "rm(11,1)xrm(3,2):bfmap", case-insensitive.
ProductCode parse_product_descriptor(std::string_view text);

/// Encodes every axis in turn, axis 1 first. The info word is laid out like
/// a tensor of shape (k_Q, ..., k_1) with axis 1 fastest.
BitVector product_encode(const ProductCode& code, const BitVector& u);

/// Inverse of product_encode on codewords (reads information sets back).
BitVector product_unencode(const ProductCode& code, const BitVector& c);

/// k_t x n_t generator, row i = product_encode(e_i). For tests and tiny codes.
BitMatrix product_generator(const ProductCode& code);

/// Throws SizeLimitError when k_t > 20.
std::size_t min_distance_bruteforce(const ProductCode& code);

/// LLR array of shape (n_Q, ..., n_1), stored row-major so axis 1 varies
/// fastest. Element (i_Q, ..., i_1) lives at sum_q i_q * prod_{p<q} n_p.
class LlrTensor {
 public:
  LlrTensor() = default;
  LlrTensor(std::vector<std::size_t> shape, std::vector<double> values);

  /// (n_Q, ..., n_1)
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  /// Index in the same order as shape().
  double at(std::span<const std::size_t> index) const;
  std::size_t linear_index(std::span<const std::size_t> index) const;

 private:
  std::vector<std::size_t> shape_;
  std::vector<double> values_;
};

LlrTensor reshape_vector_to_tensor(std::span<const double> v, const ProductCode& code);
std::vector<double> reshape_tensor_to_vector(const LlrTensor& t, const ProductCode& code);

/// Calls fn(base, stride) for each 1-D fiber along `axis` of a tensor whose
/// axis sizes are `dims` (axis 0 fastest).
template <typename Fn>
void for_each_fiber(std::span<const std::size_t> dims, std::size_t axis, Fn&& fn) {
  std::size_t stride = 1;
  for (std::size_t p = 0; p < axis; ++p) stride *= dims[p];
  std::size_t outer = 1;
  for (std::size_t p = axis + 1; p < dims.size(); ++p) outer *= dims[p];
  const std::size_t block = stride * dims[axis];
  for (std::size_t hi = 0; hi < outer; ++hi)
    for (std::size_t lo = 0; lo < stride; ++lo) fn(hi * block + lo, stride);
}

/// Iterative product decoder with reusable per-instance scratch. Not
/// thread-safe; use one instance per worker.
class ProductDecoder {
 public:
  explicit ProductDecoder(const ProductCode& code);

  /// Channel LLRs 2y/sigma2, then `iterations` sweeps over axes 1..Q, each
  /// replacing every fiber by its component decoder output. Fills `llrs`
  /// (serialized tensor) and returns the sign decisions (sign(0) = +1).
  BitVector decode(std::span<const double> y, double sigma2, int iterations, DecodeMode mode,
                   OpCounter* ops = nullptr);

  /// Final LLR array of the last decode().
  std::span<const double> llrs() const noexcept { return llr_; }

 private:
  void decode_axis(std::size_t axis, DecodeMode mode, OpCounter* ops);

  const ProductCode* code_;
  std::vector<std::size_t> dims_;
  std::vector<double> llr_;
  std::vector<double> fiber_;
  std::vector<double> scratch_;
  std::vector<std::unique_ptr<SoftFhtWorkspace>> workspaces_;
};

struct ProductDecodeResult {
  BitVector codeword;
  LlrTensor llrs;
  OpCounter ops;
};

ProductDecodeResult product_decode(const ProductCode& code, std::span<const double> y,
                                   double sigma2, int iterations, DecodeMode mode);

}  // namespace rmpc
