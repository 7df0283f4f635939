// Skilling-style transpose transforms between Hilbert curve positions and
// lattice points, in any dimension, with an arbitrary-precision index.

#include "hilbertcd/hilbert.hpp"

#include <stdexcept>
#include <string>

namespace hilbertcd {

namespace {

void check_params(const CurveParams& params) {
  if (params.dims < 1) {
    throw std::invalid_argument("hilbert: dims must be >= 1");
  }
  if (params.bits < 1 || params.bits > 64) {
    throw std::invalid_argument("hilbert: bits must be in [1, 64], got " +
                                std::to_string(params.bits));
  }
}

// The transpose form holds the index as one word per dimension, `bits` bits
// each; the index is the bit-interleaving of the words, most significant bit
// first, cycling through dimensions in order.
std::vector<std::uint64_t> unpack_transpose(const CurveParams& params,
                                            const HilbertIndex& index) {
  std::vector<std::uint64_t> words(params.dims, 0);
  const unsigned total = params.dims * params.bits;
  for (unsigned j = 0; j < total; ++j) {  // j == 0 is the MSB
    if (boost::multiprecision::bit_test(index, total - 1 - j)) {
      words[j % params.dims] |= std::uint64_t{1}
                                << (params.bits - 1 - j / params.dims);
    }
  }
  return words;
}

HilbertIndex pack_transpose(const CurveParams& params,
                            const std::vector<std::uint64_t>& words) {
  HilbertIndex index = 0;
  const unsigned total = params.dims * params.bits;
  for (unsigned j = 0; j < total; ++j) {
    if ((words[j % params.dims] >> (params.bits - 1 - j / params.dims)) & 1u) {
      boost::multiprecision::bit_set(index, total - 1 - j);
    }
  }
  return index;
}

// Gray decode followed by the per-level undo of the curve's rotations.
void transpose_to_axes(std::vector<std::uint64_t>& x, unsigned bits) {
  const std::size_t n = x.size();
  const std::uint64_t t = x[n - 1] >> 1;
  for (std::size_t i = n - 1; i > 0; --i) x[i] ^= x[i - 1];
  x[0] ^= t;
  for (unsigned level = 1; level < bits; ++level) {
    const std::uint64_t q = std::uint64_t{1} << level;
    const std::uint64_t p = q - 1;
    for (std::size_t i = n; i-- > 0;) {
      if (x[i] & q) {
        x[0] ^= p;  // invert low bits
      } else {
        const std::uint64_t d = (x[0] ^ x[i]) & p;  // exchange low bits
        x[0] ^= d;
        x[i] ^= d;
      }
    }
  }
}

void axes_to_transpose(std::vector<std::uint64_t>& x, unsigned bits) {
  const std::size_t n = x.size();
  for (unsigned level = bits; level-- > 1;) {
    const std::uint64_t q = std::uint64_t{1} << level;
    const std::uint64_t p = q - 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (x[i] & q) {
        x[0] ^= p;
      } else {
        const std::uint64_t d = (x[0] ^ x[i]) & p;
        x[0] ^= d;
        x[i] ^= d;
      }
    }
  }
  for (std::size_t i = 1; i < n; ++i) x[i] ^= x[i - 1];
  std::uint64_t t = 0;
  for (unsigned level = bits; level-- > 1;) {
    if (x[n - 1] & (std::uint64_t{1} << level)) {
      t ^= (std::uint64_t{1} << level) - 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] ^= t;
}

}  // namespace

GridPoint decode_index(const CurveParams& params, const HilbertIndex& index) {
  check_params(params);
  if (index.sign() < 0 || (index >> (params.dims * params.bits)) != 0) {
    throw std::out_of_range("hilbert: index outside [0, 2^(dims*bits))");
  }
  std::vector<std::uint64_t> words = unpack_transpose(params, index);
  transpose_to_axes(words, params.bits);
  return words;
}

HilbertIndex encode_point(const CurveParams& params, const GridPoint& point) {
  check_params(params);
  if (point.size() != params.dims) {
    throw std::invalid_argument("hilbert: point has " +
                                std::to_string(point.size()) +
                                " coordinates, expected " +
                                std::to_string(params.dims));
  }
  for (const std::uint64_t c : point) {
    if (params.bits < 64 && (c >> params.bits) != 0) {
      throw std::out_of_range("hilbert: coordinate >= 2^bits");
    }
  }
  std::vector<std::uint64_t> words = point;
  axes_to_transpose(words, params.bits);
  return pack_transpose(params, words);
}

}  // namespace hilbertcd
