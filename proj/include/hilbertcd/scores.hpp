#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hilbertcd {

/// Dense row-major matrix of covariate values with named columns.
/// column_order is the permutation mapping curve dimension -> column; the
/// Hilbert curve cycles through covariates in that order.
struct CovariateMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;             // rows*cols, row-major
  std::vector<std::string> column_names;  // size cols
  std::vector<std::size_t> column_order;  // permutation of [0, cols)

  double at(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
  double& at(std::size_t i, std::size_t j) { return values[i * cols + j]; }

  /// Builds and validates: finite values, >= 2 rows, >= 1 column, names and
  /// order consistent.  Empty names/order default to x1..xp / identity.
  static CovariateMatrix create(std::size_t rows, std::size_t cols,
                                std::vector<double> values,
                                std::vector<std::string> column_names = {},
                                std::vector<std::size_t> column_order = {});

  CovariateMatrix with_reversed_order() const;
};

enum class NormalizationMode {
  affine_minmax,   // per column, min -> 0 and max -> 1
  divide_by_max,   // per column, divide by max; requires min >= 0, max > 0
};

/// Rescales every column into [0, 1] according to the mode.  A constant
/// column under affine_minmax (or max <= 0 / negative values under
/// divide_by_max) raises std::invalid_argument naming the column.
CovariateMatrix normalize(const CovariateMatrix& matrix,
                          NormalizationMode mode);

/// Adds an independent uniform perturbation in +-rel_magnitude*scale(column)
/// to each selected entry, where scale(column) is the largest magnitude in
/// the column (1 if the column is all zeros).  One draw per entry is taken
/// from Rng(seed) in row-major order over the whole matrix, so the
/// perturbation of a given entry does not depend on which columns are
/// selected.  columns empty means all; rel_magnitude 0 is a pass-through.
CovariateMatrix apply_jitter(const CovariateMatrix& matrix, std::uint64_t seed,
                             double rel_magnitude,
                             const std::vector<std::size_t>& columns = {});

/// Scalar scores in [0, 1], one per row, in the original row order, plus the
/// permutation that sorts them ascending.
struct ScoreVector {
  std::vector<double> scores;
  std::vector<std::size_t> permutation;
};

/// Default resolution: spread 64 total bits over the dimensions, at least
/// one bit each (so the index is exactly one 64-bit word's worth for
/// dims <= 64, and dims bits beyond that).
unsigned default_bits_per_dim(std::size_t dims);

/// Quantizes each row onto the 2^bits lattice, encodes it along the Hilbert
/// curve (curve dimension d reads column column_order[d]), and affinely
/// rescales the resulting indices so the smallest maps to 0 and the largest
/// to 1.  Rows with equal indices are ordered by original row position, and
/// final scores are nudged apart by ulps where double precision cannot
/// separate distinct indices, so the output is always strictly distinct.
/// bits_per_dim 0 selects the default policy.  Requires entries in [0, 1]
/// and at least two rows.
ScoreVector hilbert_scores(const CovariateMatrix& matrix,
                           unsigned bits_per_dim = 0);

}  // namespace hilbertcd
