#include "hilbertcd/cumstat_two.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hilbertcd/cumstat_full.hpp"

namespace hilbertcd {

namespace {

// Block indices per internal label; "zero" is the label of the first block,
// so the paired-difference formulas below always see a leading zero-block.
// `negate` records whether outputs must be flipped back to 0-minus-1.
struct BlockView {
  std::vector<std::size_t> zero, one;
  bool negate = false;
};

BlockView split_blocks(const std::vector<Block>& blocks) {
  if (blocks.size() < 2) {
    throw std::invalid_argument("need blocks from both subpopulations");
  }
  BlockView view;
  view.negate = blocks.front().label == 1;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0 && blocks[i].label == blocks[i - 1].label) {
      throw std::invalid_argument("blocks must alternate labels");
    }
    const bool internal_zero = (blocks[i].label == 1) == view.negate;
    (internal_zero ? view.zero : view.one).push_back(i);
  }
  return view;
}

bool all_members_in_unit_interval(const std::vector<Block>& blocks) {
  for (const Block& b : blocks) {
    for (const auto& [r, w] : b.members) {
      if (r < 0.0 || r > 1.0) return false;
    }
  }
  return true;
}

double block_mean_variance(const Block& block, bool bernoulli) {
  double member_var;
  if (bernoulli) {
    member_var = block.mean_response * (1.0 - block.mean_response);
  } else {
    member_var = 0.0;
    for (const auto& [r, w] : block.members) {
      const double d = r - block.mean_response;
      member_var += w / block.weight_total * d * d;
    }
  }
  double frac_sq = 0.0;
  for (const auto& [r, w] : block.members) {
    const double frac = w / block.weight_total;
    frac_sq += frac * frac;
  }
  return frac_sq * member_var;
}

}  // namespace

std::vector<Block> build_blocks(std::span<const LabeledSample> samples) {
  if (samples.size() < 2) {
    throw std::invalid_argument("need at least two labeled samples");
  }
  bool saw[2] = {false, false};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const LabeledSample& s = samples[i];
    if (s.label != 0 && s.label != 1) {
      throw std::invalid_argument("labels must be 0 or 1");
    }
    if (!(s.weight > 0.0)) {
      throw std::invalid_argument("weights must be positive");
    }
    if (i > 0 && !(s.score > samples[i - 1].score)) {
      throw std::invalid_argument("scores must be strictly increasing");
    }
    saw[s.label] = true;
  }
  if (!saw[0] || !saw[1]) {
    throw std::invalid_argument(
        "both subpopulations must be present; only one label found");
  }

  std::vector<Block> blocks;
  std::size_t i = 0;
  while (i < samples.size()) {
    Block b;
    b.label = samples[i].label;
    double score_sum = 0.0, response_sum = 0.0;
    while (i < samples.size() && samples[i].label == b.label) {
      b.weight_total += samples[i].weight;
      score_sum += samples[i].weight * samples[i].score;
      response_sum += samples[i].weight * samples[i].response;
      b.members.emplace_back(samples[i].response, samples[i].weight);
      ++i;
    }
    b.mean_score = score_sum / b.weight_total;
    b.mean_response = response_sum / b.weight_total;
    blocks.push_back(std::move(b));
  }
  return blocks;
}

PairedDifferences pair_differences(const std::vector<Block>& blocks) {
  const BlockView view = split_blocks(blocks);
  const auto r = [&](const std::vector<std::size_t>& ix, std::size_t k) {
    return blocks[ix[k]].mean_response;
  };
  const auto t = [&](const std::vector<std::size_t>& ix, std::size_t k) {
    return blocks[ix[k]].weight_total;
  };
  const double sign = view.negate ? -1.0 : 1.0;

  PairedDifferences out;
  for (std::size_t k = 0;; ++k) {
    const bool even_ok = k + 1 < view.zero.size() && k < view.one.size();
    const bool odd_ok = k + 1 < view.zero.size() && k + 1 < view.one.size();
    if (even_ok) {
      out.diffs.push_back(
          sign * (r(view.zero, k) + r(view.zero, k + 1) - 2 * r(view.one, k)) /
          2);
      out.weights.push_back(
          (t(view.zero, k) + t(view.zero, k + 1) + 2 * t(view.one, k)) / 2);
    }
    if (odd_ok) {
      out.diffs.push_back(sign *
                          (2 * r(view.zero, k + 1) - r(view.one, k) -
                           r(view.one, k + 1)) /
                          2);
      out.weights.push_back(
          (2 * t(view.zero, k + 1) + t(view.one, k) + t(view.one, k + 1)) / 2);
    }
    if (!even_ok && !odd_ok) break;
  }
  if (out.diffs.empty()) {
    throw std::invalid_argument(
        "degenerate interleaving: " + std::to_string(view.zero.size()) +
        " leading-label blocks and " + std::to_string(view.one.size()) +
        " other blocks admit no paired difference");
  }
  return out;
}

double sigma_two(const std::vector<Block>& blocks,
                 const PairedDifferences& diffs) {
  const BlockView view = split_blocks(blocks);
  double total = 0.0;
  for (const double w : diffs.weights) total += w;

  // Coefficient of each block mean in the endpoint ordinate; the output
  // sign flip for a leading label-1 block squares away.
  std::vector<double> coeff(blocks.size(), 0.0);
  std::size_t j = 0;
  for (std::size_t k = 0;; ++k) {
    const bool even_ok = k + 1 < view.zero.size() && k < view.one.size();
    const bool odd_ok = k + 1 < view.zero.size() && k + 1 < view.one.size();
    if (even_ok) {
      const double u = diffs.weights[j++] / total;
      coeff[view.zero[k]] += u / 2;
      coeff[view.zero[k + 1]] += u / 2;
      coeff[view.one[k]] -= u;
    }
    if (odd_ok) {
      const double u = diffs.weights[j++] / total;
      coeff[view.zero[k + 1]] += u;
      coeff[view.one[k]] -= u / 2;
      coeff[view.one[k + 1]] -= u / 2;
    }
    if (!even_ok && !odd_ok) break;
  }
  if (j != diffs.weights.size()) {
    throw std::invalid_argument("diffs do not match the block structure");
  }

  const bool bernoulli = all_members_in_unit_interval(blocks);
  double var_sum = 0.0;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (coeff[b] == 0.0) continue;
    var_sum += coeff[b] * coeff[b] * block_mean_variance(blocks[b], bernoulli);
  }
  return std::sqrt(var_sum);
}

CumulativeGraphTwo cumulative_graph_two(const PairedDifferences& diffs,
                                        const std::vector<Block>& blocks) {
  if (diffs.diffs.empty() || diffs.diffs.size() != diffs.weights.size()) {
    throw std::invalid_argument("paired differences are empty or misaligned");
  }
  for (const double w : diffs.weights) {
    if (!(w > 0.0)) {
      throw std::invalid_argument("difference weights must be positive");
    }
  }
  double total = 0.0;
  for (const double w : diffs.weights) total += w;

  CumulativeGraphTwo g;
  double a = 0.0, c = 0.0;
  for (std::size_t k = 0; k < diffs.diffs.size(); ++k) {
    a += diffs.weights[k];
    c += diffs.weights[k] * diffs.diffs[k];
    g.abscissae.push_back(a / total);  // exactly 1 at the last index
    g.ordinates.push_back(c / total);
  }
  const KsKuiper kk = ks_kuiper(g.ordinates);
  g.ks = kk.ks;
  g.kuiper = kk.kuiper;
  g.sigma = sigma_two(blocks, diffs);
  return g;
}

}  // namespace hilbertcd
