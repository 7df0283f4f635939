#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "hilbertcd/cumstat_full.hpp"
#include "hilbertcd/cumstat_two.hpp"
#include "hilbertcd/dataset.hpp"

namespace hilbertcd {

struct RenderConfig {
  std::string title;
  // Two-sided 95% quantile of the supremum of |Brownian motion| on [0, 1]:
  // deviations taller than triangle_multiplier * sigma are significant at
  // about that level.  The value is pinned by a series-evaluation test.
  double triangle_multiplier = 2.2414;
  int width = 640;
  int height = 440;
};

/// Everything needed to render or serialize one comparison.
struct GraphSummary {
  std::string kind;            // "full" or "two"
  std::size_t population = 0;  // m
  std::size_t points = 0;      // n: graph points (paired diffs for "two")
  std::vector<double> abscissae;
  std::vector<double> ordinates;
  double sigma = 0.0;
  double ks = 0.0;
  double kuiper = 0.0;
};

GraphSummary summarize(const CumulativeGraphFull& graph,
                       std::size_t population);
GraphSummary summarize(const CumulativeGraphTwo& graph,
                       std::size_t population);

/// SVG 1.1 document: the cumulative polyline from the origin, the
/// significance triangle at the origin (omitted and noted when sigma is 0),
/// and a caption quoting the summary statistics to four significant digits.
/// Byte-identical output for identical inputs.
std::string render_graph(const GraphSummary& summary,
                         const RenderConfig& config);

/// SVG scatter of two covariate columns, point intensity strictly monotone
/// in the score; rows labeled 1 get large markers when labels are given.
std::string render_ordering_scatter(const CovariateMatrix& covariates,
                                    std::size_t col_x, std::size_t col_y,
                                    const ScoreVector& scores,
                                    const std::vector<int>* labels,
                                    const RenderConfig& config);

/// Versioned JSON summary; G/sigma and H/sigma are null when sigma is 0.
/// `config` is echoed verbatim and must at least carry the RenderConfig
/// fields so that a summary re-read from JSON re-renders byte-identically.
nlohmann::json summary_to_json(const GraphSummary& summary,
                               const nlohmann::json& config);
GraphSummary summary_from_json(const nlohmann::json& j);

nlohmann::json render_config_to_json(const RenderConfig& config);
RenderConfig render_config_from_json(const nlohmann::json& config);

/// Scoring and comparison pipeline shared by the CLI and the bindings:
/// jitter (raw covariates), normalize, score along the curve, then compare.
struct AnalysisOptions {
  NormalizationMode normalization = NormalizationMode::affine_minmax;
  unsigned bits_per_dim = 0;  // 0: default policy
  std::uint64_t jitter_seed = 0;
  double jitter_rel = 0.0;  // 0: no jitter
  std::vector<std::size_t> jitter_columns;  // empty: all columns
  bool reverse_order = false;
};

ScoreVector score_dataset(const Dataset& data, const AnalysisOptions& options);

/// Subpopulation rows (0-based, any order) against everything.
GraphSummary compare_full_pipeline(const Dataset& data,
                                   const std::vector<std::size_t>& subpop,
                                   const AnalysisOptions& options);

/// Label-0 rows minus label-1 rows; the dataset must carry labels.
GraphSummary compare_two_pipeline(const Dataset& data,
                                  const AnalysisOptions& options);

}  // namespace hilbertcd
