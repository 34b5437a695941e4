#include "rmpc/product_code.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "rmpc/errors.hpp"
#include "rmpc/fht.hpp"

namespace rmpc {

namespace {

std::string normalized(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  return s;
}

std::size_t product(std::span<const std::size_t> dims) {
  std::size_t p = 1;
  for (auto d : dims) p *= d;
  return p;
}

// One axis of the encoder: every length-k_q fiber of `in` (axis sizes
// `dims`) is replaced by its length-n_q codeword in `out`.
std::vector<std::uint8_t> encode_axis(const RmCode& code, std::span<const std::uint8_t> in,
                                      std::vector<std::size_t>& dims, std::size_t axis) {
  auto out_dims = dims;
  out_dims[axis] = code.n();
  std::vector<std::uint8_t> out(product(out_dims));
  std::vector<std::uint8_t> u(code.k());
  std::vector<std::uint8_t> c(code.n());

  std::size_t stride = 1;
  for (std::size_t p = 0; p < axis; ++p) stride *= dims[p];
  const std::size_t outer = in.size() / (stride * dims[axis]);
  for (std::size_t hi = 0; hi < outer; ++hi) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t in_base = hi * stride * code.k() + lo;
      const std::size_t out_base = hi * stride * code.n() + lo;
      for (std::size_t t = 0; t < code.k(); ++t) u[t] = in[in_base + t * stride];
      encode_into(code, u, c);
      for (std::size_t t = 0; t < code.n(); ++t) out[out_base + t * stride] = c[t];
    }
  }
  dims = std::move(out_dims);
  return out;
}

std::vector<std::uint8_t> unencode_axis(const RmCode& code, std::span<const std::uint8_t> in,
                                        std::vector<std::size_t>& dims, std::size_t axis) {
  auto out_dims = dims;
  out_dims[axis] = code.k();
  std::vector<std::uint8_t> out(product(out_dims));
  BitVector c(code.n());

  std::size_t stride = 1;
  for (std::size_t p = 0; p < axis; ++p) stride *= dims[p];
  const std::size_t outer = in.size() / (stride * dims[axis]);
  for (std::size_t hi = 0; hi < outer; ++hi) {
    for (std::size_t lo = 0; lo < stride; ++lo) {
      const std::size_t in_base = hi * stride * code.n() + lo;
      const std::size_t out_base = hi * stride * code.k() + lo;
      for (std::size_t t = 0; t < code.n(); ++t) c.set(t, in[in_base + t * stride]);
      const BitVector u = unencode(code, c);
      for (std::size_t t = 0; t < code.k(); ++t) out[out_base + t * stride] = u[t];
    }
  }
  dims = std::move(out_dims);
  return out;
}

}  // namespace

std::string_view to_string(DecodeMode mode) { return mode == DecodeMode::kSoft ? "soft" : "hard"; }

DecodeMode parse_decode_mode(std::string_view text) {
  const auto s = normalized(text);
  if (s == "soft") return DecodeMode::kSoft;
  if (s == "hard") return DecodeMode::kHard;
  throw ParseError("decoder mode must be soft or hard, got '" + std::string(text) + "'");
}

std::vector<std::size_t> ProductCode::code_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& c : components_) dims.push_back(c.code.n());
  return dims;
}

std::vector<std::size_t> ProductCode::info_dims() const {
  std::vector<std::size_t> dims;
  for (const auto& c : components_) dims.push_back(c.code.k());
  return dims;
}

std::string ProductCode::descriptor() const {
  std::string s;
  for (const auto& c : components_) {
    if (!s.empty()) s += "x";
    s += c.code.descriptor();
    if (c.decoder == ComponentDecoder::kBruteForceMap && c.code.r() == 1) s += ":bfmap";
  }
  return s;
}

ProductCode build_product_code(std::span<const ComponentSpec> specs) {
  if (specs.empty()) throw ParameterError("product code needs at least one component");
  ProductCode pc;
  for (const auto& spec : specs) {
    RmCode code = parse_rm_descriptor(spec.descriptor);
    const auto kind = spec.decoder.value_or(code.r() == 1 ? ComponentDecoder::kFht
                                                          : ComponentDecoder::kBruteForceMap);
    Component comp{std::move(code), kind, nullptr, nullptr};
    if (kind == ComponentDecoder::kFht) {
      if (comp.code.r() != 1)
        throw ParameterError("FHT decoding needs a first-order component, got " +
                             comp.code.descriptor());
      comp.tables = std::make_shared<const FirstOrderTables>(precompute_tables(comp.code.m()));
    } else {
      comp.codebook = std::make_shared<const Codebook>(comp.code);
    }
    pc.n_ *= comp.code.n();
    pc.k_ *= comp.code.k();
    pc.d_ *= comp.code.min_distance();
    pc.m_total_ += comp.code.m();
    pc.r_total_ += comp.code.r();
    pc.components_.push_back(std::move(comp));
  }
  if (pc.m_total_ > 62) throw SizeLimitError("product blocklength too large");
  pc.enclosing_k_ = rm_dimension(pc.m_total_, pc.r_total_);
  if (pc.k_ > pc.enclosing_k_)
    throw std::logic_error("product dimension exceeds enclosing RM dimension");
  if (pc.d_ != (std::size_t{1} << (pc.m_total_ - pc.r_total_)))
    throw std::logic_error("product distance differs from enclosing RM distance");
  return pc;
}

ProductCode parse_product_descriptor(std::string_view text) {
  const auto s = normalized(text);
  std::vector<ComponentSpec> specs;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find('x', start);
    std::string piece = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    ComponentSpec spec;
    if (const auto colon = piece.find(':'); colon != std::string::npos) {
      const auto suffix = piece.substr(colon + 1);
      if (suffix != "bfmap")
        throw ParseError("unknown decoder suffix ':" + suffix + "' in '" + std::string(text) + "'");
      spec.decoder = ComponentDecoder::kBruteForceMap;
      piece.resize(colon);
    }
    if (piece.empty()) throw ParseError("empty component in '" + std::string(text) + "'");
    spec.descriptor = piece;
    specs.push_back(std::move(spec));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return build_product_code(specs);
}

BitVector product_encode(const ProductCode& code, const BitVector& u) {
  if (u.size() != code.k())
    throw DimensionError("information word has length " + std::to_string(u.size()) +
                         ", product dimension is " + std::to_string(code.k()));
  auto dims = code.info_dims();
  std::vector<std::uint8_t> buf(u.bits().begin(), u.bits().end());
  for (std::size_t q = 0; q < code.dimensions(); ++q)
    buf = encode_axis(code.components()[q].code, buf, dims, q);
  return BitVector(std::move(buf));
}

BitVector product_unencode(const ProductCode& code, const BitVector& c) {
  if (c.size() != code.n()) throw DimensionError("codeword length != n_t");
  auto dims = code.code_dims();
  std::vector<std::uint8_t> buf(c.bits().begin(), c.bits().end());
  for (std::size_t q = code.dimensions(); q-- > 0;)
    buf = unencode_axis(code.components()[q].code, buf, dims, q);
  return BitVector(std::move(buf));
}

BitMatrix product_generator(const ProductCode& code) {
  BitMatrix g(code.k(), code.n());
  for (std::size_t i = 0; i < code.k(); ++i) {
    BitVector e(code.k());
    e.set(i, true);
    g.set_row(i, product_encode(code, e));
  }
  return g;
}

std::size_t min_distance_bruteforce(const ProductCode& code) {
  if (code.k() > static_cast<std::size_t>(kMaxEnumerationDim))
    throw SizeLimitError("product dimension " + std::to_string(code.k()) +
                         " exceeds enumeration cap");
  return min_nonzero_weight(product_generator(code));
}

LlrTensor::LlrTensor(std::vector<std::size_t> shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (product(shape_) != values_.size()) throw DimensionError("tensor shape does not match size");
}

std::size_t LlrTensor::linear_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw DimensionError("tensor index rank mismatch");
  std::size_t linear = 0;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    if (index[a] >= shape_[a]) throw DimensionError("tensor index out of range");
    linear = linear * shape_[a] + index[a];
  }
  return linear;
}

double LlrTensor::at(std::span<const std::size_t> index) const {
  return values_[linear_index(index)];
}

LlrTensor reshape_vector_to_tensor(std::span<const double> v, const ProductCode& code) {
  if (v.size() != code.n())
    throw DimensionError("vector length " + std::to_string(v.size()) + " != n_t = " +
                         std::to_string(code.n()));
  auto shape = code.code_dims();
  std::reverse(shape.begin(), shape.end());
  return LlrTensor(std::move(shape), std::vector<double>(v.begin(), v.end()));
}

std::vector<double> reshape_tensor_to_vector(const LlrTensor& t, const ProductCode& code) {
  auto expected = code.code_dims();
  std::reverse(expected.begin(), expected.end());
  if (t.shape() != expected) throw DimensionError("tensor shape does not match the product code");
  return {t.values().begin(), t.values().end()};
}

ProductDecoder::ProductDecoder(const ProductCode& code)
    : code_(&code), dims_(code.code_dims()), llr_(code.n()) {
  std::size_t longest = 0;
  std::size_t metrics = 0;
  for (const auto& c : code.components()) {
    longest = std::max(longest, c.code.n());
    if (c.codebook) metrics = std::max(metrics, c.codebook->size());
    workspaces_.push_back(c.tables ? std::make_unique<SoftFhtWorkspace>(*c.tables) : nullptr);
  }
  fiber_.resize(longest);
  scratch_.resize(std::max(longest, metrics));
}

void ProductDecoder::decode_axis(std::size_t axis, DecodeMode mode, OpCounter* ops) {
  const Component& comp = code_->components()[axis];
  const std::size_t len = dims_[axis];
  auto fiber = std::span<double>(fiber_).first(len);
  std::uint64_t fiber_depth = 0;

  for_each_fiber(dims_, axis, [&](std::size_t base, std::size_t stride) {
    const bool contiguous = stride == 1;
    std::span<double> data = contiguous ? std::span<double>(llr_).subspan(base, len) : fiber;
    if (!contiguous)
      for (std::size_t t = 0; t < len; ++t) fiber[t] = llr_[base + t * stride];

    OpCounter local;
    OpCounter* counter = ops ? &local : nullptr;
    if (comp.decoder == ComponentDecoder::kFht) {
      if (mode == DecodeMode::kSoft)
        soft_fht_decode_into(data, data, *comp.tables, *workspaces_[axis], counter);
      else
        fht_ml_decode_bipolar(data, data, scratch_, counter);
    } else if (mode == DecodeMode::kSoft) {
      comp.codebook->soft_map_coded_into(data, data, scratch_, counter);
    } else {
      const auto best = comp.codebook->ml_index(data, scratch_, counter);
      const auto word = comp.codebook->bipolar(best);
      std::copy(word.begin(), word.end(), data.begin());
      if (counter) counter->other += len;
    }

    if (!contiguous)
      for (std::size_t t = 0; t < len; ++t) llr_[base + t * stride] = fiber[t];
    if (ops) {
      fiber_depth = std::max(fiber_depth, local.depth);
      local.depth = 0;
      *ops += local;
    }
  });
  // Fibers along one axis are independent, so they add work but not depth.
  if (ops) ops->depth += fiber_depth;
}

BitVector ProductDecoder::decode(std::span<const double> y, double sigma2, int iterations,
                                 DecodeMode mode, OpCounter* ops) {
  if (y.size() != code_->n())
    throw DimensionError("received length " + std::to_string(y.size()) + " != n_t = " +
                         std::to_string(code_->n()));
  if (!(sigma2 > 0.0)) throw ParameterError("noise variance must be positive");
  if (iterations < 1) throw ParameterError("iterations must be >= 1");

  const double scale = 2.0 / sigma2;
  for (std::size_t i = 0; i < y.size(); ++i) llr_[i] = scale * y[i];
  if (ops) {
    ops->other += y.size();
    ops->depth += 1;
  }

  for (int it = 0; it < iterations; ++it)
    for (std::size_t q = 0; q < code_->dimensions(); ++q) decode_axis(q, mode, ops);

  BitVector c(llr_.size());
  for (std::size_t i = 0; i < llr_.size(); ++i) c.set(i, llr_[i] < 0.0);
  if (ops) {
    ops->other += llr_.size();
    ops->depth += 1;
  }
  return c;
}

ProductDecodeResult product_decode(const ProductCode& code, std::span<const double> y,
                                   double sigma2, int iterations, DecodeMode mode) {
  ProductDecoder decoder(code);
  ProductDecodeResult result;
  result.codeword = decoder.decode(y, sigma2, iterations, mode, &result.ops);
  result.llrs = reshape_vector_to_tensor(decoder.llrs(), code);
  return result;
}

}  // namespace rmpc
