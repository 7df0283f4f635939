#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hilbertcd/dataset.hpp"

namespace hilbertcd {

/// Synthetic population: an m-by-p matrix of uniform draws on (-1, 1),
/// responses that are a step function of the projection onto one random
/// direction, and a uniformly chosen subpopulation.
struct SynthConfig {
  std::size_t population = 0;     // m
  std::size_t subpop_size = 0;    // n, 1 <= n < m
  std::size_t covariates = 0;     // p >= 1
  std::uint64_t seed = 0;
  bool force_subpop_ones = false; // overwrite subpopulation responses with 1
};

struct SynthResult {
  Dataset data;                     // covariates mapped into [0, 1], weights 1
  std::vector<std::size_t> subpop;  // strictly increasing row indices
};

/// Deterministic in the seed: draws the matrix row-major, then the direction
/// vector, re-draws any row whose projection lands exactly on 0, then picks
/// the subpopulation by partial Fisher-Yates.  Dataset labels hold the
/// subpopulation membership flag.
SynthResult generate(const SynthConfig& config);

}  // namespace hilbertcd
