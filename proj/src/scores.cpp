#include "hilbertcd/scores.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "hilbertcd/hilbert.hpp"
#include "hilbertcd/rng.hpp"

namespace hilbertcd {

namespace {

void check_column_selection(const CovariateMatrix& m,
                            const std::vector<std::size_t>& columns) {
  for (const std::size_t c : columns) {
    if (c >= m.cols) {
      throw std::invalid_argument("column index " + std::to_string(c) +
                                  " out of range");
    }
  }
}

std::pair<double, double> column_range(const CovariateMatrix& m,
                                       std::size_t j) {
  double lo = m.at(0, j);
  double hi = lo;
  for (std::size_t i = 1; i < m.rows; ++i) {
    lo = std::min(lo, m.at(i, j));
    hi = std::max(hi, m.at(i, j));
  }
  return {lo, hi};
}

}  // namespace

CovariateMatrix CovariateMatrix::create(std::size_t rows, std::size_t cols,
                                        std::vector<double> values,
                                        std::vector<std::string> column_names,
                                        std::vector<std::size_t> column_order) {
  if (rows < 2) throw std::invalid_argument("covariate matrix needs >= 2 rows");
  if (cols < 1) {
    throw std::invalid_argument("covariate matrix needs >= 1 column");
  }
  if (values.size() != rows * cols) {
    throw std::invalid_argument("covariate matrix value count mismatch");
  }
  for (const double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("covariate matrix has a non-finite entry");
    }
  }
  if (column_names.empty()) {
    for (std::size_t j = 0; j < cols; ++j) {
      column_names.push_back("x" + std::to_string(j + 1));
    }
  } else if (column_names.size() != cols) {
    throw std::invalid_argument("column_names size mismatch");
  }
  if (column_order.empty()) {
    column_order.resize(cols);
    std::iota(column_order.begin(), column_order.end(), 0);
  } else {
    std::vector<bool> seen(cols, false);
    if (column_order.size() != cols) {
      throw std::invalid_argument("column_order must have one entry per column");
    }
    for (const std::size_t c : column_order) {
      if (c >= cols || seen[c]) {
        throw std::invalid_argument("column_order is not a permutation");
      }
      seen[c] = true;
    }
  }
  CovariateMatrix m;
  m.rows = rows;
  m.cols = cols;
  m.values = std::move(values);
  m.column_names = std::move(column_names);
  m.column_order = std::move(column_order);
  return m;
}

CovariateMatrix CovariateMatrix::with_reversed_order() const {
  CovariateMatrix out = *this;
  std::reverse(out.column_order.begin(), out.column_order.end());
  return out;
}

CovariateMatrix normalize(const CovariateMatrix& matrix,
                          NormalizationMode mode) {
  CovariateMatrix out = matrix;
  for (std::size_t j = 0; j < matrix.cols; ++j) {
    const auto [lo, hi] = column_range(matrix, j);
    if (mode == NormalizationMode::affine_minmax) {
      if (hi <= lo) {
        throw std::invalid_argument("column '" + matrix.column_names[j] +
                                    "' is constant; affine min-max "
                                    "normalization is degenerate");
      }
      for (std::size_t i = 0; i < matrix.rows; ++i) {
        out.at(i, j) = (matrix.at(i, j) - lo) / (hi - lo);
      }
    } else {
      if (hi <= 0.0 || lo < 0.0) {
        throw std::invalid_argument("column '" + matrix.column_names[j] +
                                    "' needs max > 0 and min >= 0 for "
                                    "divide-by-max normalization");
      }
      for (std::size_t i = 0; i < matrix.rows; ++i) {
        out.at(i, j) = matrix.at(i, j) / hi;
      }
    }
  }
  return out;
}

CovariateMatrix apply_jitter(const CovariateMatrix& matrix, std::uint64_t seed,
                             double rel_magnitude,
                             const std::vector<std::size_t>& columns) {
  if (rel_magnitude < 0.0) {
    throw std::invalid_argument("jitter magnitude must be >= 0");
  }
  check_column_selection(matrix, columns);
  if (rel_magnitude == 0.0) return matrix;

  std::vector<bool> selected(matrix.cols, columns.empty());
  for (const std::size_t c : columns) selected[c] = true;

  std::vector<double> scale(matrix.cols, 0.0);
  for (std::size_t j = 0; j < matrix.cols; ++j) {
    const auto [lo, hi] = column_range(matrix, j);
    scale[j] = std::max(std::abs(lo), std::abs(hi));
    if (scale[j] == 0.0) scale[j] = 1.0;
  }

  CovariateMatrix out = matrix;
  Rng rng(seed);
  for (std::size_t i = 0; i < matrix.rows; ++i) {
    for (std::size_t j = 0; j < matrix.cols; ++j) {
      const double delta = rng.uniform(-1.0, 1.0) * rel_magnitude * scale[j];
      if (selected[j]) out.at(i, j) += delta;
    }
  }
  return out;
}

unsigned default_bits_per_dim(std::size_t dims) {
  if (dims == 0) throw std::invalid_argument("dims must be >= 1");
  if (dims >= 64) return 1;
  return static_cast<unsigned>(64 / dims);
}

ScoreVector hilbert_scores(const CovariateMatrix& matrix,
                           unsigned bits_per_dim) {
  if (matrix.rows < 2) {
    throw std::invalid_argument("scores need at least two rows");
  }
  const unsigned bits =
      bits_per_dim == 0 ? default_bits_per_dim(matrix.cols) : bits_per_dim;
  const CurveParams params{static_cast<unsigned>(matrix.cols), bits};
  // 2^bits - 1 is exact in long double up to bits = 64.
  const long double lattice_top = std::ldexp(1.0L, static_cast<int>(bits)) - 1.0L;

  const std::size_t m = matrix.rows;
  std::vector<HilbertIndex> indices(m);
  GridPoint point(matrix.cols);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t d = 0; d < matrix.cols; ++d) {
      const double x = matrix.at(i, matrix.column_order[d]);
      if (x < 0.0 || x > 1.0) {
        throw std::invalid_argument(
            "covariates must be normalized to [0, 1] before scoring");
      }
      long double q =
          std::floor(static_cast<long double>(x) * lattice_top + 0.5L);
      if (q < 0.0L) q = 0.0L;
      if (q > lattice_top) q = lattice_top;
      point[d] = static_cast<std::uint64_t>(q);
    }
    indices[i] = encode_point(params, point);
  }

  // Sort by exact index, ties broken by original row position; this order,
  // not the floating-point rescale, is what downstream statistics consume.
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    if (indices[a] != indices[b]) return indices[a] < indices[b];
    return a < b;
  });

  const HilbertIndex& min_index = indices[perm.front()];
  const HilbertIndex range = indices[perm.back()] - min_index;
  std::vector<double> sorted_scores(m);
  if (range == 0) {
    // Every row quantized to the same cell: the tiebreak alone orders them.
    for (std::size_t k = 0; k < m; ++k) {
      sorted_scores[k] =
          static_cast<double>(k) / static_cast<double>(m - 1);
    }
  } else {
    const double denom = static_cast<double>(range);
    for (std::size_t k = 0; k < m; ++k) {
      const HilbertIndex offset = indices[perm[k]] - min_index;
      sorted_scores[k] = static_cast<double>(offset) / denom;
    }
    sorted_scores.front() = 0.0;
    sorted_scores.back() = 1.0;
    // Nudge apart values double precision could not separate.
    for (std::size_t k = 1; k < m; ++k) {
      if (sorted_scores[k] <= sorted_scores[k - 1]) {
        sorted_scores[k] = std::nextafter(
            sorted_scores[k - 1], std::numeric_limits<double>::infinity());
      }
    }
    if (sorted_scores.back() > 1.0) {
      sorted_scores.back() = 1.0;
      for (std::size_t k = m - 1; k-- > 0;) {
        if (sorted_scores[k] >= sorted_scores[k + 1]) {
          sorted_scores[k] = std::nextafter(
              sorted_scores[k + 1], -std::numeric_limits<double>::infinity());
        }
      }
    }
  }
  for (std::size_t k = 1; k < m; ++k) {
    if (!(sorted_scores[k] > sorted_scores[k - 1])) {
      throw std::logic_error("score strictification failed");
    }
  }

  ScoreVector out;
  out.scores.resize(m);
  for (std::size_t k = 0; k < m; ++k) out.scores[perm[k]] = sorted_scores[k];
  out.permutation = std::move(perm);
  return out;
}

}  // namespace hilbertcd
