#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace hilbertcd {

/// One scored observation carrying its subpopulation designation.
struct LabeledSample {
  double score = 0.0;
  double response = 0.0;
  double weight = 1.0;
  int label = 0;  // 0 or 1
};

/// A maximal run of consecutive scores sharing one label, collapsed to its
/// weighted means; members are retained for the variance plug-in.
struct Block {
  int label = 0;
  double mean_score = 0.0;
  double mean_response = 0.0;
  double weight_total = 0.0;
  std::vector<std::pair<double, double>> members;  // (response, weight)
};

/// Collapses samples (sorted by strictly increasing score, both labels
/// present) into alternating blocks.
std::vector<Block> build_blocks(std::span<const LabeledSample> samples);

/// Interleaved response differences and aggregated weights between the two
/// subpopulations, ordered along the score axis.
struct PairedDifferences {
  std::vector<double> diffs;    // subpopulation 0 minus subpopulation 1
  std::vector<double> weights;  // all > 0
};

/// Pairs each block with its neighbours of the other label; a difference is
/// emitted exactly when every block mean it references exists.  When the
/// first block carries label 1 the roles are swapped internally and the
/// differences negated, preserving the 0-minus-1 sign convention.  Throws if
/// the interleaving admits no difference at all.
PairedDifferences pair_differences(const std::vector<Block>& blocks);

/// Null scale of the endpoint ordinate: the endpoint is expanded exactly as
/// a linear combination of block mean responses, and each block mean gets
/// the plug-in variance of cumstat_full (blocks independent, Bernoulli
/// p(1-p) at the block mean when all member responses lie in [0, 1], the
/// within-block weighted sample variance otherwise).
double sigma_two(const std::vector<Block>& blocks,
                 const PairedDifferences& diffs);

struct CumulativeGraphTwo {
  std::vector<double> abscissae;  // strictly increasing, ends at 1
  std::vector<double> ordinates;  // cumulative differences, origin implicit
  double sigma = 0.0;
  double ks = 0.0;
  double kuiper = 0.0;
};

CumulativeGraphTwo cumulative_graph_two(const PairedDifferences& diffs,
                                        const std::vector<Block>& blocks);

}  // namespace hilbertcd
