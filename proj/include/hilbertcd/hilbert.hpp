#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hilbertcd {

/// Position along the curve: an exact non-negative integer in
/// [0, 2^(dims*bits)).  dims*bits routinely exceeds 64, so the index is
/// arbitrary precision.
using HilbertIndex = boost::multiprecision::cpp_int;

/// Lattice point, one coordinate per dimension, each in [0, 2^bits).
using GridPoint = std::vector<std::uint64_t>;

/// Discretization of the curve: a lattice of 2^(dims*bits) cells, visited
/// once each by a depth-first traversal of the 2^dims-ary dyadic tree.
struct CurveParams {
  unsigned dims = 0;  // >= 1
  unsigned bits = 0;  // bits of resolution per dimension, in [1, 64]
};

/// Lattice point visited at the given position of the traversal.
/// Consecutive positions map to points at L1 distance exactly 1.
/// Throws std::invalid_argument for bad params and std::out_of_range for an
/// index outside [0, 2^(dims*bits)).
GridPoint decode_index(const CurveParams& params, const HilbertIndex& index);

/// Exact inverse of decode_index on the lattice.
/// Throws std::out_of_range if any coordinate is >= 2^bits.
HilbertIndex encode_point(const CurveParams& params, const GridPoint& point);

}  // namespace hilbertcd
