#include "hilbertcd/synth.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hilbertcd/rng.hpp"

namespace hilbertcd {

SynthResult generate(const SynthConfig& config) {
  const std::size_t m = config.population;
  const std::size_t n = config.subpop_size;
  const std::size_t p = config.covariates;
  if (m < 2 || n < 1 || n >= m) {
    throw std::invalid_argument("synth: need 1 <= subpop_size < population");
  }
  if (p < 1) throw std::invalid_argument("synth: need >= 1 covariate");

  Rng rng(config.seed);
  std::vector<double> raw(m * p);
  for (double& v : raw) v = rng.uniform(-1.0, 1.0);
  std::vector<double> direction(p);
  for (double& v : direction) v = rng.normal();

  std::vector<double> responses(m);
  for (std::size_t i = 0; i < m; ++i) {
    double dot;
    do {
      dot = 0.0;
      for (std::size_t j = 0; j < p; ++j) dot += raw[i * p + j] * direction[j];
      if (dot == 0.0) {  // step function undefined at 0: re-draw the row
        for (std::size_t j = 0; j < p; ++j) {
          raw[i * p + j] = rng.uniform(-1.0, 1.0);
        }
      }
    } while (dot == 0.0);
    responses[i] = dot > 0.0 ? 1.0 : 0.0;
  }

  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::swap(order[k], order[k + rng.index(m - k)]);
  }
  std::vector<std::size_t> subpop(order.begin(), order.begin() + n);
  std::sort(subpop.begin(), subpop.end());

  std::vector<int> labels(m, 0);
  for (const std::size_t i : subpop) {
    labels[i] = 1;
    if (config.force_subpop_ones) responses[i] = 1.0;
  }

  for (double& v : raw) v = (v + 1.0) / 2.0;  // map (-1,1) onto (0,1)

  SynthResult out;
  out.data.covariates = CovariateMatrix::create(m, p, std::move(raw));
  out.data.responses = std::move(responses);
  out.data.weights.assign(m, 1.0);
  out.data.labels = std::move(labels);
  out.subpop = std::move(subpop);
  return out;
}

}  // namespace hilbertcd
