#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "../common/brute_force.hpp"
#include "hilbertcd/cumstat_two.hpp"
#include "hilbertcd/rng.hpp"

using hilbertcd::Block;
using hilbertcd::CumulativeGraphTwo;
using hilbertcd::LabeledSample;
using hilbertcd::PairedDifferences;

namespace {

std::vector<LabeledSample> make_samples(const std::vector<double>& scores,
                                        const std::vector<double>& responses,
                                        const std::vector<double>& weights,
                                        const std::vector<int>& labels) {
  std::vector<LabeledSample> out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    out.push_back({scores[i], responses[i], weights[i], labels[i]});
  }
  return out;
}

// Runs of `run_length` samples per block, labels alternating from the given
// start, strictly increasing scores, unit weights.
std::vector<LabeledSample> block_instance(std::size_t n_blocks,
                                          std::size_t run_length,
                                          int first_label,
                                          const std::vector<double>& responses) {
  std::vector<LabeledSample> out;
  for (std::size_t b = 0; b < n_blocks; ++b) {
    for (std::size_t k = 0; k < run_length; ++k) {
      const auto i = static_cast<double>(out.size());
      out.push_back({i + 1.0, responses[out.size()], 1.0,
                     static_cast<int>((b + first_label) % 2)});
    }
  }
  return out;
}

std::vector<LabeledSample> random_two_instance(hilbertcd::Rng& rng,
                                               std::size_t m) {
  std::vector<LabeledSample> out;
  double score = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    score += rng.uniform(0.01, 1.0);
    out.push_back({score, rng.uniform01() < 0.5 ? 1.0 : 0.0,
                   rng.uniform(0.5, 2.5), static_cast<int>(rng.index(2))});
  }
  // Guarantee both labels and a workable interleaving.
  out[0].label = 0;
  out[1].label = 1;
  out[m - 1].label = 0;
  return out;
}

}  // namespace

TEST_CASE("hand-worked five-sample example") {
  const auto samples = make_samples({1, 2, 3, 4, 5}, {1, 0, 1, 0, 1},
                                    {1, 1, 1, 1, 1}, {0, 0, 1, 1, 0});
  const auto blocks = hilbertcd::build_blocks(samples);
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0].label == 0);
  CHECK(blocks[0].mean_score == doctest::Approx(1.5));
  CHECK(blocks[0].mean_response == doctest::Approx(0.5));
  CHECK(blocks[0].weight_total == doctest::Approx(2.0));
  CHECK(blocks[1].label == 1);
  CHECK(blocks[1].mean_score == doctest::Approx(3.5));
  CHECK(blocks[1].mean_response == doctest::Approx(0.5));
  CHECK(blocks[1].weight_total == doctest::Approx(2.0));
  CHECK(blocks[2].label == 0);
  CHECK(blocks[2].mean_score == doctest::Approx(5.0));
  CHECK(blocks[2].mean_response == doctest::Approx(1.0));
  CHECK(blocks[2].weight_total == doctest::Approx(1.0));

  const PairedDifferences diffs = hilbertcd::pair_differences(blocks);
  REQUIRE(diffs.diffs.size() == 1);
  CHECK(diffs.diffs[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(diffs.weights[0] == doctest::Approx(3.5).epsilon(1e-12));

  const CumulativeGraphTwo g = hilbertcd::cumulative_graph_two(diffs, blocks);
  CHECK(g.abscissae == std::vector<double>{1.0});
  CHECK(g.ordinates[0] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(g.ks == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(g.kuiper == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("alternating singletons keep their responses as block means") {
  const auto samples = make_samples({1, 2, 3, 4}, {0.2, 0.4, 0.6, 0.8},
                                    {1, 1, 1, 1}, {0, 1, 0, 1});
  const auto blocks = hilbertcd::build_blocks(samples);
  REQUIRE(blocks.size() == 4);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(blocks[i].mean_response == samples[i].response);
    CHECK(blocks[i].weight_total == 1.0);
  }
  // Unit weights and singleton blocks: every aggregated weight is 2.
  const PairedDifferences diffs = hilbertcd::pair_differences(blocks);
  for (const double w : diffs.weights) CHECK(w == doctest::Approx(2.0));
}

TEST_CASE("weighted means within a run") {
  const auto samples = make_samples({1, 2, 3}, {1, 0, 1}, {1, 3, 1}, {0, 0, 1});
  const auto blocks = hilbertcd::build_blocks(samples);
  CHECK(blocks[0].mean_response == doctest::Approx(0.25));
  CHECK(blocks[0].weight_total == doctest::Approx(4.0));
}

TEST_CASE("equal block responses yield an identically zero graph") {
  std::vector<double> resp(12, 0.7);
  const auto samples = block_instance(6, 2, 0, resp);
  const auto blocks = hilbertcd::build_blocks(samples);
  const auto diffs = hilbertcd::pair_differences(blocks);
  for (const double d : diffs.diffs) CHECK(d == doctest::Approx(0.0));
  const CumulativeGraphTwo g = hilbertcd::cumulative_graph_two(diffs, blocks);
  CHECK(g.ks == doctest::Approx(0.0));
  CHECK(g.kuiper == doctest::Approx(0.0));
}

TEST_CASE("equal weights make abscissae j/n") {
  hilbertcd::Rng rng(7);
  std::vector<double> resp;
  for (int i = 0; i < 20; ++i) resp.push_back(rng.uniform01());
  const auto samples = block_instance(20, 1, 0, resp);
  const auto blocks = hilbertcd::build_blocks(samples);
  const auto diffs = hilbertcd::pair_differences(blocks);
  const CumulativeGraphTwo g = hilbertcd::cumulative_graph_two(diffs, blocks);
  const auto n = static_cast<double>(diffs.diffs.size());
  for (std::size_t j = 0; j < diffs.diffs.size(); ++j) {
    CHECK(g.abscissae[j] == doctest::Approx((j + 1) / n).epsilon(1e-12));
  }
}

TEST_CASE("agrees with the brute-force evaluation on random instances") {
  hilbertcd::Rng rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const auto samples = random_two_instance(rng, 10 + rng.index(150));
    std::vector<double> s, r, w;
    std::vector<int> l;
    for (const auto& x : samples) {
      s.push_back(x.score);
      r.push_back(x.response);
      w.push_back(x.weight);
      l.push_back(x.label);
    }
    const auto expected = brute::two_comparison(brute::run_length_blocks(s, r, w, l));
    const auto blocks = hilbertcd::build_blocks(samples);
    const auto diffs = hilbertcd::pair_differences(blocks);
    REQUIRE(diffs.diffs.size() == expected.diffs.size());
    const CumulativeGraphTwo g = hilbertcd::cumulative_graph_two(diffs, blocks);
    for (std::size_t j = 0; j < diffs.diffs.size(); ++j) {
      CHECK(diffs.diffs[j] == doctest::Approx(expected.diffs[j]).epsilon(1e-12));
      CHECK(diffs.weights[j] ==
            doctest::Approx(expected.diff_weights[j]).epsilon(1e-12));
      CHECK(g.ordinates[j] ==
            doctest::Approx(expected.ordinates[j]).epsilon(1e-12));
      CHECK(g.abscissae[j] ==
            doctest::Approx(expected.abscissae[j]).epsilon(1e-12));
    }
  }
}

TEST_CASE("swapping the labels negates the graph and nothing else") {
  hilbertcd::Rng rng(19);
  for (int rep = 0; rep < 20; ++rep) {
    const auto samples = random_two_instance(rng, 10 + rng.index(80));
    auto swapped = samples;
    for (auto& x : swapped) x.label = 1 - x.label;

    const auto blocks_a = hilbertcd::build_blocks(samples);
    const auto blocks_b = hilbertcd::build_blocks(swapped);
    const auto diffs_a = hilbertcd::pair_differences(blocks_a);
    const auto diffs_b = hilbertcd::pair_differences(blocks_b);
    REQUIRE(diffs_a.diffs.size() == diffs_b.diffs.size());
    const auto ga = hilbertcd::cumulative_graph_two(diffs_a, blocks_a);
    const auto gb = hilbertcd::cumulative_graph_two(diffs_b, blocks_b);
    for (std::size_t j = 0; j < diffs_a.diffs.size(); ++j) {
      CHECK(diffs_b.diffs[j] == -diffs_a.diffs[j]);
      CHECK(diffs_b.weights[j] == diffs_a.weights[j]);
      CHECK(gb.ordinates[j] == -ga.ordinates[j]);
      CHECK(gb.abscissae[j] == ga.abscissae[j]);
    }
    CHECK(gb.ks == ga.ks);
    CHECK(gb.kuiper == ga.kuiper);
    CHECK(gb.sigma == ga.sigma);
  }
}

TEST_CASE("global weight rescaling changes nothing") {
  hilbertcd::Rng rng(23);
  const auto samples = random_two_instance(rng, 90);
  const auto base_blocks = hilbertcd::build_blocks(samples);
  const auto base =
      hilbertcd::cumulative_graph_two(hilbertcd::pair_differences(base_blocks),
                                      base_blocks);
  for (const double c : {2.0, 3.0, 0.0625}) {
    auto scaled = samples;
    for (auto& x : scaled) x.weight *= c;
    const auto blocks = hilbertcd::build_blocks(scaled);
    const auto g = hilbertcd::cumulative_graph_two(
        hilbertcd::pair_differences(blocks), blocks);
    for (std::size_t j = 0; j < base.ordinates.size(); ++j) {
      CHECK(g.ordinates[j] == doctest::Approx(base.ordinates[j]).epsilon(1e-12));
      CHECK(g.abscissae[j] == doctest::Approx(base.abscissae[j]).epsilon(1e-12));
    }
    CHECK(g.ks == doctest::Approx(base.ks).epsilon(1e-12));
    CHECK(g.kuiper == doctest::Approx(base.kuiper).epsilon(1e-12));
    CHECK(g.sigma == doctest::Approx(base.sigma).epsilon(1e-12));
  }
}

TEST_CASE("secant slopes recover windowed weighted mean differences") {
  hilbertcd::Rng rng(29);
  const auto samples = random_two_instance(rng, 120);
  const auto blocks = hilbertcd::build_blocks(samples);
  const auto diffs = hilbertcd::pair_differences(blocks);
  const auto g = hilbertcd::cumulative_graph_two(diffs, blocks);
  const std::size_t n = diffs.diffs.size();
  REQUIRE(n >= 4);
  for (const auto& [k, l] : std::vector<std::pair<std::size_t, std::size_t>>{
           {0, n - 1}, {1, 2}, {n / 4, 3 * n / 4}}) {
    const double slope = (g.ordinates[l] - g.ordinates[k]) /
                         (g.abscissae[l] - g.abscissae[k]);
    double num = 0.0, den = 0.0;
    for (std::size_t j = k + 1; j <= l; ++j) {
      num += diffs.weights[j] * diffs.diffs[j];
      den += diffs.weights[j];
    }
    CHECK(slope == doctest::Approx(num / den).epsilon(1e-10));
  }
}

TEST_CASE("blocks partition the samples") {
  hilbertcd::Rng rng(31);
  const auto samples = random_two_instance(rng, 75);
  const auto blocks = hilbertcd::build_blocks(samples);
  std::size_t members = 0;
  double weight = 0.0, total = 0.0;
  for (const auto& b : blocks) {
    members += b.members.size();
    weight += b.weight_total;
  }
  for (const auto& x : samples) total += x.weight;
  CHECK(members == samples.size());
  CHECK(weight == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("sigma vanishes for pure 0/1 block responses") {
  const auto samples = make_samples({1, 2, 3, 4}, {1, 0, 1, 0}, {1, 1, 1, 1},
                                    {0, 1, 0, 1});
  const auto blocks = hilbertcd::build_blocks(samples);
  const auto diffs = hilbertcd::pair_differences(blocks);
  CHECK(hilbertcd::sigma_two(blocks, diffs) == 0.0);
}

TEST_CASE("sigma matches the coefficient expansion for singleton blocks") {
  // All responses 0.5 with unit weights: sigma^2 = 0.25 * sum of squared
  // endpoint coefficients.  The coefficients come from an independent
  // linearity probe of the brute-force pipeline.
  for (std::size_t n_blocks = 3; n_blocks <= 6; ++n_blocks) {
    std::vector<double> resp(n_blocks, 0.5);
    const auto samples = block_instance(n_blocks, 1, 0, resp);
    const auto blocks = hilbertcd::build_blocks(samples);
    const auto diffs = hilbertcd::pair_differences(blocks);

    std::vector<double> s, w;
    std::vector<int> l;
    for (const auto& x : samples) {
      s.push_back(x.score);
      w.push_back(x.weight);
      l.push_back(x.label);
    }
    double coeff_sq = 0.0;
    for (std::size_t b = 0; b < n_blocks; ++b) {
      std::vector<double> basis(n_blocks, 0.0);
      basis[b] = 1.0;
      const auto probe =
          brute::two_comparison(brute::run_length_blocks(s, basis, w, l));
      coeff_sq += probe.ordinates.back() * probe.ordinates.back();
    }
    CHECK(hilbertcd::sigma_two(blocks, diffs) ==
          doctest::Approx(std::sqrt(0.25 * coeff_sq)).epsilon(1e-12));
  }
}

TEST_CASE("plug-in sigma tracks the null endpoint dispersion") {
  hilbertcd::Rng rng(37);
  const std::size_t n_blocks = 60, run = 5;
  std::vector<double> resp(n_blocks * run, 0.0);
  const int sims = 3000;
  double sigma_sum = 0.0, end_sum = 0.0, end_sq = 0.0;
  for (int sim = 0; sim < sims; ++sim) {
    for (double& r : resp) r = rng.uniform01() < 0.5 ? 1.0 : 0.0;
    const auto samples = block_instance(n_blocks, run, 0, resp);
    const auto blocks = hilbertcd::build_blocks(samples);
    const auto diffs = hilbertcd::pair_differences(blocks);
    const auto g = hilbertcd::cumulative_graph_two(diffs, blocks);
    sigma_sum += g.sigma;
    end_sum += g.ordinates.back();
    end_sq += g.ordinates.back() * g.ordinates.back();
  }
  const double mean_sigma = sigma_sum / sims;
  const double var = (end_sq - end_sum * end_sum / sims) / (sims - 1);
  const double ratio = mean_sigma / std::sqrt(var);
  CHECK(ratio > 0.85);
  CHECK(ratio < 1.15);
}

TEST_CASE("degenerate interleavings are rejected") {
  // Only one label present.
  const auto mono = make_samples({1, 2, 3}, {1, 0, 1}, {1, 1, 1}, {0, 0, 0});
  CHECK_THROWS_WITH_AS(static_cast<void>(hilbertcd::build_blocks(mono)),
                       doctest::Contains("one label"), std::invalid_argument);

  // Two blocks admit no paired difference.
  const auto two = make_samples({1, 2}, {1, 0}, {1, 1}, {0, 1});
  CHECK_THROWS_WITH_AS(
      static_cast<void>(hilbertcd::pair_differences(hilbertcd::build_blocks(two))),
      doctest::Contains("degenerate"), std::invalid_argument);

  // Unsorted scores.
  const auto unsorted = make_samples({2, 1}, {1, 0}, {1, 1}, {0, 1});
  CHECK_THROWS_AS(static_cast<void>(hilbertcd::build_blocks(unsorted)),
                  std::invalid_argument);
}
