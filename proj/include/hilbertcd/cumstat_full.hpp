#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hilbertcd {

/// One subpopulation against the full population: m scored, weighted,
/// responded observations plus the (0-based, strictly increasing) indices of
/// the subpopulation members.  n == m is allowed.
struct FullComparisonInput {
  std::vector<double> scores;     // strictly increasing
  std::vector<double> responses;
  std::vector<double> weights;    // all > 0
  std::vector<std::size_t> subpop;

  void validate() const;  // throws std::invalid_argument on violation
};

struct KsKuiper {
  double ks = 0.0;      // max absolute ordinate, origin included
  double kuiper = 0.0;  // max minus min ordinate, origin included
};

/// Kolmogorov-Smirnov and Kuiper summaries of a cumulative-difference path;
/// the path implicitly starts at 0 before the first ordinate.  Throws on an
/// empty or non-finite sequence.
KsKuiper ks_kuiper(std::span<const double> ordinates);

/// Weighted mean response of the full population in the bin around each
/// subpopulation score; bin k spans the midpoints between consecutive
/// subpopulation scores (unbounded at the ends), so it always contains at
/// least the member itself.
std::vector<double> bin_full_population(const FullComparisonInput& input);

/// Null scale of the endpoint of the cumulative-difference graph: treats
/// bins as independent and plugs the bin mean into the per-member response
/// variance -- Bernoulli p(1-p) when every response lies in [0, 1], the
/// within-bin weighted sample variance otherwise.  Returns 0 when every bin
/// is degenerate; callers report a 0 sigma as "significance not defined".
double sigma_full(const FullComparisonInput& input);

/// Cumulative graph of subpopulation-minus-binned-population responses
/// against aggregated subpopulation weight.
struct CumulativeGraphFull {
  std::vector<double> abscissae;  // strictly increasing, ends at 1
  std::vector<double> ordinates;  // cum_sub - cum_full, origin (0,0) implicit
  std::vector<double> cum_sub;    // cumulative weighted subpop response
  std::vector<double> cum_full;   // cumulative weighted binned response
  double sigma = 0.0;
  double ks = 0.0;
  double kuiper = 0.0;
};

CumulativeGraphFull cumulative_graph_full(const FullComparisonInput& input);

}  // namespace hilbertcd
