#include "hilbertcd/cumstat_full.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hilbertcd {

namespace {

// Half-open [lo, hi) population index ranges of the bins around each
// subpopulation score.  Thresholds are midpoints of consecutive
// subpopulation scores, evaluated in long double so that a midpoint of two
// adjacent doubles still falls strictly between them; each bin therefore
// contains at least its own member.
struct BinLayout {
  std::vector<std::size_t> lo, hi;
};

BinLayout layout_bins(const FullComparisonInput& input) {
  const std::size_t m = input.scores.size();
  const std::size_t n = input.subpop.size();
  BinLayout bins;
  bins.lo.resize(n);
  bins.hi.resize(n);
  std::size_t i = 0;
  for (std::size_t k = 0; k < n; ++k) {
    bins.lo[k] = i;
    if (k + 1 == n) {
      i = m;
    } else {
      const long double upper =
          (static_cast<long double>(input.scores[input.subpop[k]]) +
           static_cast<long double>(input.scores[input.subpop[k + 1]])) /
          2.0L;
      while (i < m && static_cast<long double>(input.scores[i]) <= upper) ++i;
    }
    bins.hi[k] = i;
  }
  return bins;
}

bool all_responses_in_unit_interval(const FullComparisonInput& input) {
  for (const double r : input.responses) {
    if (r < 0.0 || r > 1.0) return false;
  }
  return true;
}

}  // namespace

void FullComparisonInput::validate() const {
  const std::size_t m = scores.size();
  if (m == 0) throw std::invalid_argument("comparison input is empty");
  if (responses.size() != m || weights.size() != m) {
    throw std::invalid_argument("scores, responses, weights must align");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::isfinite(scores[i]) || !std::isfinite(responses[i]) ||
        !std::isfinite(weights[i])) {
      throw std::invalid_argument("non-finite value at row " +
                                  std::to_string(i));
    }
    if (weights[i] <= 0.0) {
      throw std::invalid_argument("weight at row " + std::to_string(i) +
                                  " must be positive");
    }
    if (i > 0 && !(scores[i] > scores[i - 1])) {
      throw std::invalid_argument("scores must be strictly increasing (row " +
                                  std::to_string(i) + ")");
    }
  }
  if (subpop.empty()) throw std::invalid_argument("subpopulation is empty");
  for (std::size_t k = 0; k < subpop.size(); ++k) {
    if (subpop[k] >= m) {
      throw std::invalid_argument("subpopulation index out of range");
    }
    if (k > 0 && subpop[k] <= subpop[k - 1]) {
      throw std::invalid_argument(
          "subpopulation indices must be strictly increasing");
    }
  }
}

KsKuiper ks_kuiper(std::span<const double> ordinates) {
  if (ordinates.empty()) {
    throw std::invalid_argument("ks_kuiper: empty ordinate sequence");
  }
  KsKuiper out;
  double hi = 0.0, lo = 0.0;  // origin ordinate 0 included
  for (const double d : ordinates) {
    if (!std::isfinite(d)) {
      throw std::invalid_argument("ks_kuiper: non-finite ordinate");
    }
    out.ks = std::max(out.ks, std::abs(d));
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  out.kuiper = hi - lo;
  return out;
}

std::vector<double> bin_full_population(const FullComparisonInput& input) {
  input.validate();
  const BinLayout bins = layout_bins(input);
  const std::size_t n = input.subpop.size();
  std::vector<double> rtilde(n);
  for (std::size_t k = 0; k < n; ++k) {
    double num = 0.0, den = 0.0;
    for (std::size_t i = bins.lo[k]; i < bins.hi[k]; ++i) {
      num += input.weights[i] * input.responses[i];
      den += input.weights[i];
    }
    rtilde[k] = num / den;
  }
  return rtilde;
}

double sigma_full(const FullComparisonInput& input) {
  input.validate();
  const BinLayout bins = layout_bins(input);
  const std::vector<double> rtilde = bin_full_population(input);
  const bool bernoulli = all_responses_in_unit_interval(input);
  const std::size_t n = input.subpop.size();

  double total = 0.0;
  for (const std::size_t i : input.subpop) total += input.weights[i];

  double var_sum = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double bin_weight = 0.0;
    for (std::size_t i = bins.lo[k]; i < bins.hi[k]; ++i) {
      bin_weight += input.weights[i];
    }
    double member_var;
    if (bernoulli) {
      member_var = rtilde[k] * (1.0 - rtilde[k]);
    } else {
      member_var = 0.0;
      for (std::size_t i = bins.lo[k]; i < bins.hi[k]; ++i) {
        const double d = input.responses[i] - rtilde[k];
        member_var += input.weights[i] / bin_weight * d * d;
      }
    }
    const std::size_t self = input.subpop[k];
    const double self_frac = input.weights[self] / bin_weight;
    double coeff = (1.0 - self_frac) * (1.0 - self_frac);
    for (std::size_t i = bins.lo[k]; i < bins.hi[k]; ++i) {
      if (i == self) continue;
      const double frac = input.weights[i] / bin_weight;
      coeff += frac * frac;
    }
    const double share = input.weights[self] / total;
    var_sum += share * share * member_var * coeff;
  }
  return std::sqrt(var_sum);
}

CumulativeGraphFull cumulative_graph_full(const FullComparisonInput& input) {
  input.validate();
  const std::vector<double> rtilde = bin_full_population(input);
  const std::size_t n = input.subpop.size();

  double total = 0.0;
  for (const std::size_t i : input.subpop) total += input.weights[i];

  CumulativeGraphFull g;
  g.abscissae.resize(n);
  g.ordinates.resize(n);
  g.cum_sub.resize(n);
  g.cum_full.resize(n);
  double f = 0.0, ftilde = 0.0, a = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t i = input.subpop[k];
    f += input.weights[i] * input.responses[i];
    ftilde += input.weights[i] * rtilde[k];
    a += input.weights[i];
    g.cum_sub[k] = f / total;
    g.cum_full[k] = ftilde / total;
    g.abscissae[k] = a / total;  // exactly 1 at k = n-1
    g.ordinates[k] = g.cum_sub[k] - g.cum_full[k];
  }
  const KsKuiper kk = ks_kuiper(g.ordinates);
  g.ks = kk.ks;
  g.kuiper = kk.kuiper;
  g.sigma = sigma_full(input);
  return g;
}

}  // namespace hilbertcd
