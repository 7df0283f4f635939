#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hilbertcd/cumstat_full.hpp"
#include "hilbertcd/cumstat_two.hpp"
#include "hilbertcd/hilbert.hpp"
#include "hilbertcd/scores.hpp"
#include "hilbertcd/synth.hpp"

namespace py = pybind11;

namespace {

// Arbitrary-precision indices cross the boundary as Python ints, via their
// decimal representation.
hilbertcd::HilbertIndex index_from_py(const py::int_& value) {
  return hilbertcd::HilbertIndex(
      value.attr("__str__")().cast<std::string>());
}

py::int_ index_to_py(const hilbertcd::HilbertIndex& value) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(value.str().c_str(), nullptr, 10));
}

hilbertcd::CovariateMatrix matrix_from_rows(
    const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw std::invalid_argument("matrix is empty");
  const std::size_t cols = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (const auto& row : rows) {
    if (row.size() != cols) {
      throw std::invalid_argument("matrix rows have unequal lengths");
    }
    values.insert(values.end(), row.begin(), row.end());
  }
  return hilbertcd::CovariateMatrix::create(rows.size(), cols,
                                            std::move(values));
}

std::vector<std::vector<double>> matrix_to_rows(
    const hilbertcd::CovariateMatrix& m) {
  std::vector<std::vector<double>> rows(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    rows[i].assign(m.values.begin() + static_cast<std::ptrdiff_t>(i * m.cols),
                   m.values.begin() +
                       static_cast<std::ptrdiff_t>((i + 1) * m.cols));
  }
  return rows;
}

hilbertcd::NormalizationMode mode_from_string(const std::string& mode) {
  if (mode == "minmax") return hilbertcd::NormalizationMode::affine_minmax;
  if (mode == "maxdiv") return hilbertcd::NormalizationMode::divide_by_max;
  throw std::invalid_argument("mode must be 'minmax' or 'maxdiv'");
}

// Orders rows by score and maps row indices into that order.
struct Sorted {
  std::vector<std::size_t> perm;  // position -> original row
  std::vector<std::size_t> rank;  // original row -> position
};

Sorted sort_by_score(const std::vector<double>& scores) {
  Sorted s;
  s.perm.resize(scores.size());
  std::iota(s.perm.begin(), s.perm.end(), 0);
  std::sort(s.perm.begin(), s.perm.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  s.rank.resize(scores.size());
  for (std::size_t k = 0; k < s.perm.size(); ++k) s.rank[s.perm[k]] = k;
  return s;
}

py::dict graph_dict(const std::vector<double>& abscissae,
                    const std::vector<double>& ordinates, double sigma,
                    double ks, double kuiper) {
  py::dict out;
  out["abscissae"] = abscissae;
  out["ordinates"] = ordinates;
  out["sigma"] = sigma;
  out["G"] = ks;
  out["H"] = kuiper;
  if (sigma > 0.0) {
    out["G_over_sigma"] = ks / sigma;
    out["H_over_sigma"] = kuiper / sigma;
  } else {
    out["G_over_sigma"] = py::none();
    out["H_over_sigma"] = py::none();
  }
  return out;
}

py::dict compare_full_py(const std::vector<double>& scores,
                         const std::vector<double>& responses,
                         const std::vector<double>& weights,
                         const std::vector<std::size_t>& subpop_rows) {
  const Sorted s = sort_by_score(scores);
  hilbertcd::FullComparisonInput input;
  input.scores.reserve(scores.size());
  for (const std::size_t row : s.perm) {
    input.scores.push_back(scores[row]);
    input.responses.push_back(responses.at(row));
    input.weights.push_back(weights.at(row));
  }
  for (const std::size_t row : subpop_rows) {
    input.subpop.push_back(s.rank.at(row));
  }
  std::sort(input.subpop.begin(), input.subpop.end());
  const hilbertcd::CumulativeGraphFull g =
      hilbertcd::cumulative_graph_full(input);
  return graph_dict(g.abscissae, g.ordinates, g.sigma, g.ks, g.kuiper);
}

py::dict compare_two_py(const std::vector<double>& scores,
                        const std::vector<double>& responses,
                        const std::vector<double>& weights,
                        const std::vector<int>& labels) {
  const Sorted s = sort_by_score(scores);
  std::vector<hilbertcd::LabeledSample> samples;
  samples.reserve(scores.size());
  for (const std::size_t row : s.perm) {
    samples.push_back(
        {scores[row], responses.at(row), weights.at(row), labels.at(row)});
  }
  const auto blocks = hilbertcd::build_blocks(samples);
  const auto diffs = hilbertcd::pair_differences(blocks);
  const hilbertcd::CumulativeGraphTwo g =
      hilbertcd::cumulative_graph_two(diffs, blocks);
  py::dict out = graph_dict(g.abscissae, g.ordinates, g.sigma, g.ks, g.kuiper);
  out["diffs"] = diffs.diffs;
  out["diff_weights"] = diffs.weights;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Hilbert-curve scores and cumulative-difference comparisons of "
      "subpopulations, conditioning on multiple covariates";

  m.def(
      "decode_index",
      [](unsigned dims, unsigned bits, const py::int_& index) {
        return hilbertcd::decode_index({dims, bits}, index_from_py(index));
      },
      py::arg("dims"), py::arg("bits"), py::arg("index"),
      "Lattice point visited at the given curve position.");

  m.def(
      "encode_point",
      [](unsigned dims, unsigned bits, const hilbertcd::GridPoint& point) {
        return index_to_py(hilbertcd::encode_point({dims, bits}, point));
      },
      py::arg("dims"), py::arg("bits"), py::arg("point"),
      "Curve position of a lattice point; inverse of decode_index.");

  m.def("default_bits_per_dim", &hilbertcd::default_bits_per_dim,
        py::arg("dims"));

  m.def(
      "normalize",
      [](const std::vector<std::vector<double>>& rows,
         const std::string& mode) {
        return matrix_to_rows(
            hilbertcd::normalize(matrix_from_rows(rows), mode_from_string(mode)));
      },
      py::arg("matrix"), py::arg("mode") = "minmax",
      "Rescale every column into [0, 1] ('minmax' or 'maxdiv').");

  m.def(
      "apply_jitter",
      [](const std::vector<std::vector<double>>& rows, std::uint64_t seed,
         double rel_magnitude, const std::vector<std::size_t>& columns) {
        return matrix_to_rows(hilbertcd::apply_jitter(
            matrix_from_rows(rows), seed, rel_magnitude, columns));
      },
      py::arg("matrix"), py::arg("seed"), py::arg("rel_magnitude") = 1e-8,
      py::arg("columns") = std::vector<std::size_t>{},
      "Deterministic uniform perturbation to break ties.");

  m.def(
      "hilbert_scores",
      [](const std::vector<std::vector<double>>& rows, unsigned bits_per_dim) {
        const hilbertcd::ScoreVector sv =
            hilbertcd::hilbert_scores(matrix_from_rows(rows), bits_per_dim);
        py::dict out;
        out["scores"] = sv.scores;
        out["permutation"] = sv.permutation;
        return out;
      },
      py::arg("matrix"), py::arg("bits_per_dim") = 0,
      "Strictly distinct scores in [0, 1] ordering rows along the curve.");

  m.def("compare_full", &compare_full_py, py::arg("scores"),
        py::arg("responses"), py::arg("weights"), py::arg("subpop"),
        "Cumulative comparison of a subpopulation (given by row indices) "
        "against the full population.");

  m.def("compare_two", &compare_two_py, py::arg("scores"),
        py::arg("responses"), py::arg("weights"), py::arg("labels"),
        "Cumulative comparison of subpopulation 0 minus subpopulation 1.");

  m.def(
      "synthesize",
      [](std::size_t m_, std::size_t n, std::size_t p, std::uint64_t seed,
         bool force_subpop_ones) {
        const hilbertcd::SynthResult r =
            hilbertcd::generate({m_, n, p, seed, force_subpop_ones});
        py::dict out;
        out["covariates"] = matrix_to_rows(r.data.covariates);
        out["responses"] = r.data.responses;
        out["weights"] = r.data.weights;
        out["subpop"] = r.subpop;
        return out;
      },
      py::arg("m"), py::arg("n"), py::arg("p"), py::arg("seed") = 0,
      py::arg("force_subpop_ones") = false,
      "Synthetic benchmark population with a step-function response.");
}
