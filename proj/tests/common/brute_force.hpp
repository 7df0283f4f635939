// Deliberately naive reference evaluations of the cumulative-difference
// definitions, kept independent of the library implementations they check:
// bin membership is a full scan per bin, block structure a direct run-length
// pass, and every sum is written out literally.
#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace brute {

struct FullGraph {
  std::vector<double> rtilde, cum_sub, cum_full, abscissae, ordinates;
  double ks = 0.0, kuiper = 0.0;
};

inline FullGraph full_comparison(const std::vector<double>& s,
                                 const std::vector<double>& r,
                                 const std::vector<double>& w,
                                 const std::vector<std::size_t>& sub) {
  const std::size_t m = s.size();
  const std::size_t n = sub.size();
  const long double inf = std::numeric_limits<long double>::infinity();
  FullGraph g;

  for (std::size_t k = 0; k < n; ++k) {
    const long double lower =
        k == 0 ? -inf
               : (static_cast<long double>(s[sub[k - 1]]) + s[sub[k]]) / 2;
    const long double upper =
        k + 1 == n ? inf
                   : (static_cast<long double>(s[sub[k]]) + s[sub[k + 1]]) / 2;
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (lower < static_cast<long double>(s[i]) &&
          static_cast<long double>(s[i]) <= upper) {
        num += w[i] * r[i];
        den += w[i];
      }
    }
    g.rtilde.push_back(num / den);
  }

  double total = 0.0;
  for (const std::size_t i : sub) total += w[i];
  double f = 0.0, ftilde = 0.0, a = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    f += w[sub[k]] * r[sub[k]] / total;
    ftilde += w[sub[k]] * g.rtilde[k] / total;
    a += w[sub[k]] / total;
    g.cum_sub.push_back(f);
    g.cum_full.push_back(ftilde);
    g.abscissae.push_back(a);
    g.ordinates.push_back(f - ftilde);
  }

  double hi = 0.0, lo = 0.0;
  for (const double d : g.ordinates) {
    g.ks = std::max(g.ks, std::abs(d));
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  g.kuiper = hi - lo;
  return g;
}

struct TwoBlocks {
  std::vector<int> label;
  std::vector<double> mean_score, mean_response, weight_total;
};

inline TwoBlocks run_length_blocks(const std::vector<double>& s,
                                   const std::vector<double>& r,
                                   const std::vector<double>& w,
                                   const std::vector<int>& label) {
  TwoBlocks b;
  std::size_t i = 0;
  while (i < s.size()) {
    std::size_t j = i;
    double sw = 0.0, sr = 0.0, ss = 0.0;
    while (j < s.size() && label[j] == label[i]) {
      sw += w[j];
      sr += w[j] * r[j];
      ss += w[j] * s[j];
      ++j;
    }
    b.label.push_back(label[i]);
    b.mean_score.push_back(ss / sw);
    b.mean_response.push_back(sr / sw);
    b.weight_total.push_back(sw);
    i = j;
  }
  return b;
}

struct TwoGraph {
  std::vector<double> diffs, diff_weights, abscissae, ordinates;
  double ks = 0.0, kuiper = 0.0;
};

// Direct transcription of the paired-difference construction.  The first
// block is assumed to carry label 0 here; callers wanting the swapped case
// flip labels and negate the differences themselves.
inline TwoGraph two_comparison(const TwoBlocks& b) {
  std::vector<double> r0, r1, t0, t1;
  for (std::size_t i = 0; i < b.label.size(); ++i) {
    if (b.label[i] == 0) {
      r0.push_back(b.mean_response[i]);
      t0.push_back(b.weight_total[i]);
    } else {
      r1.push_back(b.mean_response[i]);
      t1.push_back(b.weight_total[i]);
    }
  }
  TwoGraph g;
  for (std::size_t k = 0;; ++k) {
    const bool even_ok = k + 1 < r0.size() && k < r1.size();
    const bool odd_ok = k + 1 < r0.size() && k + 1 < r1.size();
    if (even_ok) {
      g.diffs.push_back((r0[k] + r0[k + 1] - 2 * r1[k]) / 2);
      g.diff_weights.push_back((t0[k] + t0[k + 1] + 2 * t1[k]) / 2);
    }
    if (odd_ok) {
      g.diffs.push_back((2 * r0[k + 1] - r1[k] - r1[k + 1]) / 2);
      g.diff_weights.push_back((2 * t0[k + 1] + t1[k] + t1[k + 1]) / 2);
    }
    if (!even_ok && !odd_ok) break;
  }

  double total = 0.0;
  for (const double wd : g.diff_weights) total += wd;
  double a = 0.0, c = 0.0;
  for (std::size_t j = 0; j < g.diffs.size(); ++j) {
    a += g.diff_weights[j] / total;
    c += g.diff_weights[j] * g.diffs[j] / total;
    g.abscissae.push_back(a);
    g.ordinates.push_back(c);
  }
  double hi = 0.0, lo = 0.0;
  for (const double d : g.ordinates) {
    g.ks = std::max(g.ks, std::abs(d));
    hi = std::max(hi, d);
    lo = std::min(lo, d);
  }
  g.kuiper = hi - lo;
  return g;
}

}  // namespace brute
