#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "hilbertcd/rng.hpp"
#include "hilbertcd/scores.hpp"

using hilbertcd::CovariateMatrix;
using hilbertcd::NormalizationMode;
using hilbertcd::ScoreVector;

namespace {

CovariateMatrix column_matrix(std::vector<double> values) {
  const std::size_t n = values.size();
  return CovariateMatrix::create(n, 1, std::move(values));
}

}  // namespace

TEST_CASE("affine min-max normalization") {
  const auto out =
      hilbertcd::normalize(column_matrix({2, 4, 6}), NormalizationMode::affine_minmax);
  CHECK(out.at(0, 0) == doctest::Approx(0.0));
  CHECK(out.at(1, 0) == doctest::Approx(0.5));
  CHECK(out.at(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("divide-by-max normalization") {
  const auto out =
      hilbertcd::normalize(column_matrix({2, 4, 6}), NormalizationMode::divide_by_max);
  CHECK(out.at(0, 0) == doctest::Approx(1.0 / 3));
  CHECK(out.at(1, 0) == doctest::Approx(2.0 / 3));
  CHECK(out.at(2, 0) == doctest::Approx(1.0));
}

TEST_CASE("already normalized column is a fixed point of affine min-max") {
  const std::vector<double> vals{0.0, 0.25, 1.0};
  const auto out = hilbertcd::normalize(column_matrix(vals),
                                        NormalizationMode::affine_minmax);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    CHECK(out.at(i, 0) == vals[i]);
  }
}

TEST_CASE("degenerate columns are named in errors") {
  const auto constant = CovariateMatrix::create(2, 2, {1, 5, 1, 7},
                                                {"age", "income"});
  CHECK_THROWS_WITH_AS(
      hilbertcd::normalize(constant, NormalizationMode::affine_minmax),
      doctest::Contains("age"), std::invalid_argument);
  const auto negative = column_matrix({-1, 2});
  CHECK_THROWS_AS(hilbertcd::normalize(negative, NormalizationMode::divide_by_max),
                  std::invalid_argument);
}

TEST_CASE("jitter is deterministic, seeded, and optional") {
  const auto m = CovariateMatrix::create(3, 2, {1, 2, 3, 4, 5, 6});
  const auto same = hilbertcd::apply_jitter(m, 7, 0.0);
  CHECK(same.values == m.values);

  const auto a = hilbertcd::apply_jitter(m, 1, 1e-8);
  const auto b = hilbertcd::apply_jitter(m, 1, 1e-8);
  CHECK(a.values == b.values);

  const auto c = hilbertcd::apply_jitter(m, 2, 1e-8);
  CHECK(a.values != c.values);

  for (std::size_t i = 0; i < m.values.size(); ++i) {
    CHECK(std::abs(a.values[i] - m.values[i]) <= 1e-8 * 6.0);
  }
}

TEST_CASE("jitter on selected columns leaves the rest bit-identical") {
  const auto m = CovariateMatrix::create(4, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12});
  const auto all = hilbertcd::apply_jitter(m, 11, 1e-6);
  const auto only1 = hilbertcd::apply_jitter(m, 11, 1e-6, {1});
  for (std::size_t i = 0; i < m.rows; ++i) {
    CHECK(only1.at(i, 0) == m.at(i, 0));
    CHECK(only1.at(i, 2) == m.at(i, 2));
    // The draw for a given entry does not depend on the selection.
    CHECK(only1.at(i, 1) == all.at(i, 1));
  }
}

TEST_CASE("one-dimensional scores sort like the covariate itself") {
  hilbertcd::Rng rng(42);
  std::vector<double> vals;
  for (int i = 0; i < 200; ++i) vals.push_back(rng.uniform01());
  const auto scores = hilbertcd::hilbert_scores(column_matrix(vals));

  std::vector<std::size_t> by_value(vals.size());
  std::iota(by_value.begin(), by_value.end(), 0);
  std::sort(by_value.begin(), by_value.end(),
            [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
  CHECK(scores.permutation == by_value);
}

TEST_CASE("identical rows still produce strictly distinct scores") {
  const auto m = CovariateMatrix::create(4, 2, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5, 0.2, 0.9});
  const auto sv = hilbertcd::hilbert_scores(m, 8);
  std::vector<double> sorted = sv.scores;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    CHECK(sorted[i] > sorted[i - 1]);
  }
  CHECK(sorted.front() == 0.0);
  CHECK(sorted.back() == 1.0);
  // Tied rows keep their original relative order.
  CHECK(sv.scores[0] < sv.scores[1]);
  CHECK(sv.scores[1] < sv.scores[2]);
}

TEST_CASE("two rows score exactly zero and one") {
  const auto m = CovariateMatrix::create(2, 2, {0.1, 0.2, 0.8, 0.9});
  const auto sv = hilbertcd::hilbert_scores(m);
  std::vector<double> sorted = sv.scores;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<double>{0.0, 1.0});
}

TEST_CASE("default resolution policy") {
  CHECK(hilbertcd::default_bits_per_dim(1) == 64);
  CHECK(hilbertcd::default_bits_per_dim(2) == 32);
  CHECK(hilbertcd::default_bits_per_dim(3) == 21);
  CHECK(hilbertcd::default_bits_per_dim(64) == 1);
  CHECK(hilbertcd::default_bits_per_dim(4096) == 1);
}

TEST_CASE("reversed column order still yields a valid score vector") {
  hilbertcd::Rng rng(3);
  std::vector<double> vals;
  for (int i = 0; i < 100 * 3; ++i) vals.push_back(rng.uniform01());
  const auto m = CovariateMatrix::create(100, 3, vals);
  const auto rev = hilbertcd::hilbert_scores(m.with_reversed_order());
  std::vector<double> sorted = rev.scores;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted.front() == 0.0);
  CHECK(sorted.back() == 1.0);
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    CHECK(sorted[i] > sorted[i - 1]);
  }
}

TEST_CASE("nearby points in the plane tend to score nearby") {
  // Pairs at small L-infinity distance should sit closer along the curve,
  // in distribution, than unrelated pairs.
  hilbertcd::Rng rng(9);
  const std::size_t n_pairs = 400;
  std::vector<double> vals;
  for (std::size_t k = 0; k < n_pairs; ++k) {
    const double x = rng.uniform(0.05, 0.95);
    const double y = rng.uniform(0.05, 0.95);
    vals.insert(vals.end(), {x, y});
    vals.insert(vals.end(), {x + rng.uniform(-1.0, 1.0) / 256.0,
                             y + rng.uniform(-1.0, 1.0) / 256.0});
  }
  const auto m = CovariateMatrix::create(2 * n_pairs, 2, vals);
  const auto sv = hilbertcd::hilbert_scores(m, 8);

  std::vector<double> near_gaps, far_gaps;
  for (std::size_t k = 0; k < n_pairs; ++k) {
    near_gaps.push_back(std::abs(sv.scores[2 * k] - sv.scores[2 * k + 1]));
    const std::size_t other = (2 * k + 2 * (1 + rng.index(n_pairs - 1))) %
                              (2 * n_pairs);
    far_gaps.push_back(std::abs(sv.scores[2 * k] - sv.scores[other]));
  }
  std::sort(near_gaps.begin(), near_gaps.end());
  std::sort(far_gaps.begin(), far_gaps.end());
  CHECK(near_gaps[n_pairs / 2] < far_gaps[n_pairs / 2]);
  const double near_mean =
      std::accumulate(near_gaps.begin(), near_gaps.end(), 0.0) / n_pairs;
  const double far_mean =
      std::accumulate(far_gaps.begin(), far_gaps.end(), 0.0) / n_pairs;
  CHECK(near_mean < 0.5 * far_mean);
}

TEST_CASE("score validation errors") {
  CHECK_THROWS_AS(hilbertcd::hilbert_scores(column_matrix({0.1, 1.2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(CovariateMatrix::create(1, 1, {0.5}), std::invalid_argument);
  CHECK_THROWS_AS(CovariateMatrix::create(2, 1, {0.5, NAN}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CovariateMatrix::create(2, 2, {1, 2, 3, 4}, {}, {0, 0}),
                  std::invalid_argument);
}
