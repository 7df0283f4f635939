#include "hilbertcd/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace hilbertcd {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Four significant digits with trailing zeros kept, as in figure captions.
std::string stat4(double v) { return fmt("%#.4g", v); }

std::string caption_line(const GraphSummary& s) {
  std::string out = "G = " + stat4(s.ks) + "; H = " + stat4(s.kuiper);
  if (s.sigma > 0.0) {
    out += "; G/\xCF\x83 = " + stat4(s.ks / s.sigma) +
           "; H/\xCF\x83 = " + stat4(s.kuiper / s.sigma);
  } else {
    out += "; \xCF\x83 = 0, significance not defined (triangle omitted)";
  }
  return out;
}

void append_text(std::string& svg, double x, double y, const std::string& body,
                 const char* anchor, int size) {
  svg += "<text x=\"" + fmt("%.2f", x) + "\" y=\"" + fmt("%.2f", y) +
         "\" font-family=\"sans-serif\" font-size=\"" + std::to_string(size) +
         "\" text-anchor=\"" + anchor + "\">" + body + "</text>\n";
}

}  // namespace

GraphSummary summarize(const CumulativeGraphFull& graph,
                       std::size_t population) {
  GraphSummary s;
  s.kind = "full";
  s.population = population;
  s.points = graph.abscissae.size();
  s.abscissae = graph.abscissae;
  s.ordinates = graph.ordinates;
  s.sigma = graph.sigma;
  s.ks = graph.ks;
  s.kuiper = graph.kuiper;
  return s;
}

GraphSummary summarize(const CumulativeGraphTwo& graph,
                       std::size_t population) {
  GraphSummary s;
  s.kind = "two";
  s.population = population;
  s.points = graph.abscissae.size();
  s.abscissae = graph.abscissae;
  s.ordinates = graph.ordinates;
  s.sigma = graph.sigma;
  s.ks = graph.ks;
  s.kuiper = graph.kuiper;
  return s;
}

std::string render_graph(const GraphSummary& summary,
                         const RenderConfig& config) {
  if (summary.abscissae.size() != summary.ordinates.size() ||
      summary.abscissae.empty()) {
    throw std::invalid_argument("graph summary is empty or misaligned");
  }
  const double left = 70, top = 45;
  const double right = config.width - 25.0;
  const double bottom = config.height - 70.0;
  const double mid = (top + bottom) / 2;

  double peak = 0.001;
  for (const double d : summary.ordinates) peak = std::max(peak, std::abs(d));
  peak = std::max(peak, config.triangle_multiplier * summary.sigma);
  const double ymax = 1.1 * peak;

  const auto px = [&](double a) { return left + a * (right - left); };
  const auto py = [&](double y) { return mid - y / ymax * (mid - top); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(config.width) + "\" height=\"" +
         std::to_string(config.height) + "\" viewBox=\"0 0 " +
         std::to_string(config.width) + " " + std::to_string(config.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + fmt("%.2f", left) + "\" y=\"" + fmt("%.2f", top) +
         "\" width=\"" + fmt("%.2f", right - left) + "\" height=\"" +
         fmt("%.2f", bottom - top) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (int t = 0; t <= 4; ++t) {
    const double a = t / 4.0;
    svg += "<line x1=\"" + fmt("%.2f", px(a)) + "\" y1=\"" +
           fmt("%.2f", bottom) + "\" x2=\"" + fmt("%.2f", px(a)) + "\" y2=\"" +
           fmt("%.2f", bottom + 5) + "\" stroke=\"black\"/>\n";
    append_text(svg, px(a), bottom + 18, fmt("%.2f", a), "middle", 11);
  }
  for (int t = -2; t <= 2; ++t) {
    const double y = ymax * t / 2.0;
    svg += "<line x1=\"" + fmt("%.2f", left - 5) + "\" y1=\"" +
           fmt("%.2f", py(y)) + "\" x2=\"" + fmt("%.2f", left) + "\" y2=\"" +
           fmt("%.2f", py(y)) + "\" stroke=\"black\"/>\n";
    append_text(svg, left - 8, py(y) + 4, stat4(y), "end", 10);
  }
  // zero line
  svg += "<line x1=\"" + fmt("%.2f", left) + "\" y1=\"" + fmt("%.2f", py(0)) +
         "\" x2=\"" + fmt("%.2f", right) + "\" y2=\"" + fmt("%.2f", py(0)) +
         "\" stroke=\"lightgray\" stroke-dasharray=\"4 3\"/>\n";

  if (summary.sigma > 0.0) {
    const double h = config.triangle_multiplier * summary.sigma;
    svg += "<path d=\"M " + fmt("%.2f", px(0)) + " " + fmt("%.2f", py(h)) +
           " L " + fmt("%.2f", px(0)) + " " + fmt("%.2f", py(-h)) + " L " +
           fmt("%.2f", px(0.025)) + " " + fmt("%.2f", py(0)) +
           " Z\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }

  std::string points = fmt("%.2f", px(0)) + "," + fmt("%.2f", py(0));
  for (std::size_t k = 0; k < summary.abscissae.size(); ++k) {
    points += " " + fmt("%.2f", px(summary.abscissae[k])) + "," +
              fmt("%.2f", py(summary.ordinates[k]));
  }
  svg += "<polyline points=\"" + points +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.2\"/>\n";

  if (!config.title.empty()) {
    append_text(svg, (left + right) / 2, top - 18, config.title, "middle", 13);
  }
  append_text(svg, (left + right) / 2, bottom + 40, caption_line(summary),
              "middle", 12);
  append_text(svg, (left + right) / 2, bottom + 56,
              "m = " + std::to_string(summary.population) +
                  "; n = " + std::to_string(summary.points),
              "middle", 11);
  svg += "</svg>\n";
  return svg;
}

std::string render_ordering_scatter(const CovariateMatrix& covariates,
                                    std::size_t col_x, std::size_t col_y,
                                    const ScoreVector& scores,
                                    const std::vector<int>* labels,
                                    const RenderConfig& config) {
  if (col_x >= covariates.cols || col_y >= covariates.cols) {
    throw std::invalid_argument("scatter columns out of range");
  }
  if (scores.scores.size() != covariates.rows) {
    throw std::invalid_argument("scores do not match the matrix");
  }
  if (labels && labels->size() != covariates.rows) {
    throw std::invalid_argument("labels do not match the matrix");
  }
  const double left = 70, top = 45;
  const double right = config.width - 25.0;
  const double bottom = config.height - 55.0;

  double xlo = covariates.at(0, col_x), xhi = xlo;
  double ylo = covariates.at(0, col_y), yhi = ylo;
  for (std::size_t i = 1; i < covariates.rows; ++i) {
    xlo = std::min(xlo, covariates.at(i, col_x));
    xhi = std::max(xhi, covariates.at(i, col_x));
    ylo = std::min(ylo, covariates.at(i, col_y));
    yhi = std::max(yhi, covariates.at(i, col_y));
  }
  const double xpad = (xhi - xlo) * 0.05 + 1e-12;
  const double ypad = (yhi - ylo) * 0.05 + 1e-12;
  xlo -= xpad;
  xhi += xpad;
  ylo -= ypad;
  yhi += ypad;

  const auto px = [&](double x) {
    return left + (x - xlo) / (xhi - xlo) * (right - left);
  };
  const auto py = [&](double y) {
    return bottom - (y - ylo) / (yhi - ylo) * (bottom - top);
  };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(config.width) + "\" height=\"" +
         std::to_string(config.height) + "\" viewBox=\"0 0 " +
         std::to_string(config.width) + " " + std::to_string(config.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<rect x=\"" + fmt("%.2f", left) + "\" y=\"" + fmt("%.2f", top) +
         "\" width=\"" + fmt("%.2f", right - left) + "\" height=\"" +
         fmt("%.2f", bottom - top) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

  for (std::size_t i = 0; i < covariates.rows; ++i) {
    // Later along the curve = darker; strictly monotone in the score.
    const double gray = 85.0 * (1.0 - scores.scores[i]);
    const double radius = labels ? ((*labels)[i] == 1 ? 4.0 : 1.8) : 2.5;
    svg += "<circle cx=\"" + fmt("%.2f", px(covariates.at(i, col_x))) +
           "\" cy=\"" + fmt("%.2f", py(covariates.at(i, col_y))) + "\" r=\"" +
           fmt("%.1f", radius) + "\" fill=\"rgb(" + fmt("%.6f", gray) + "%," +
           fmt("%.6f", gray) + "%," + fmt("%.6f", gray) + "%)\"/>\n";
  }

  if (!config.title.empty()) {
    append_text(svg, (left + right) / 2, top - 18, config.title, "middle", 13);
  }
  append_text(svg, (left + right) / 2, bottom + 30,
              covariates.column_names[col_x], "middle", 12);
  append_text(svg, 20, (top + bottom) / 2, covariates.column_names[col_y],
              "middle", 12);
  svg += "</svg>\n";
  return svg;
}

nlohmann::json summary_to_json(const GraphSummary& summary,
                               const nlohmann::json& config) {
  nlohmann::json j;
  j["schema"] = "hilbertcd/summary/v1";
  j["m"] = summary.population;
  j["n"] = summary.points;
  j["G"] = summary.ks;
  j["H"] = summary.kuiper;
  j["sigma"] = summary.sigma;
  if (summary.sigma > 0.0) {
    j["G_over_sigma"] = summary.ks / summary.sigma;
    j["H_over_sigma"] = summary.kuiper / summary.sigma;
  } else {
    j["G_over_sigma"] = nullptr;
    j["H_over_sigma"] = nullptr;
  }
  j["abscissae"] = summary.abscissae;
  j["ordinates"] = summary.ordinates;
  j["config"] = config;
  return j;
}

GraphSummary summary_from_json(const nlohmann::json& j) {
  GraphSummary s;
  s.kind = j.at("config").value("kind", "full");
  s.population = j.at("m").get<std::size_t>();
  s.points = j.at("n").get<std::size_t>();
  s.ks = j.at("G").get<double>();
  s.kuiper = j.at("H").get<double>();
  s.sigma = j.at("sigma").get<double>();
  s.abscissae = j.at("abscissae").get<std::vector<double>>();
  s.ordinates = j.at("ordinates").get<std::vector<double>>();
  return s;
}

nlohmann::json render_config_to_json(const RenderConfig& config) {
  return {{"title", config.title},
          {"triangle_multiplier", config.triangle_multiplier},
          {"width", config.width},
          {"height", config.height}};
}

RenderConfig render_config_from_json(const nlohmann::json& config) {
  RenderConfig out;
  out.title = config.value("title", std::string{});
  out.triangle_multiplier =
      config.value("triangle_multiplier", out.triangle_multiplier);
  out.width = config.value("width", out.width);
  out.height = config.value("height", out.height);
  if (out.triangle_multiplier <= 0.0) {
    throw std::invalid_argument("triangle multiplier must be positive");
  }
  return out;
}

ScoreVector score_dataset(const Dataset& data, const AnalysisOptions& options) {
  data.validate();
  CovariateMatrix covariates = options.reverse_order
                                   ? data.covariates.with_reversed_order()
                                   : data.covariates;
  if (options.jitter_rel > 0.0) {
    covariates = apply_jitter(covariates, options.jitter_seed,
                              options.jitter_rel, options.jitter_columns);
  }
  covariates = normalize(covariates, options.normalization);
  return hilbert_scores(covariates, options.bits_per_dim);
}

GraphSummary compare_full_pipeline(const Dataset& data,
                                   const std::vector<std::size_t>& subpop,
                                   const AnalysisOptions& options) {
  const ScoreVector sv = score_dataset(data, options);
  const std::size_t m = data.size();

  std::vector<std::size_t> rank(m);  // row -> position in score order
  for (std::size_t k = 0; k < m; ++k) rank[sv.permutation[k]] = k;

  FullComparisonInput input;
  input.scores.resize(m);
  input.responses.resize(m);
  input.weights.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t row = sv.permutation[k];
    input.scores[k] = sv.scores[row];
    input.responses[k] = data.responses[row];
    input.weights[k] = data.weights[row];
  }
  for (const std::size_t row : subpop) {
    if (row >= m) throw std::invalid_argument("subpopulation row out of range");
    input.subpop.push_back(rank[row]);
  }
  std::sort(input.subpop.begin(), input.subpop.end());
  for (std::size_t k = 1; k < input.subpop.size(); ++k) {
    if (input.subpop[k] == input.subpop[k - 1]) {
      throw std::invalid_argument("duplicate subpopulation row");
    }
  }
  return summarize(cumulative_graph_full(input), m);
}

GraphSummary compare_two_pipeline(const Dataset& data,
                                  const AnalysisOptions& options) {
  if (!data.labels) {
    throw std::invalid_argument("two-subpopulation comparison needs labels");
  }
  const ScoreVector sv = score_dataset(data, options);
  const std::size_t m = data.size();

  std::vector<LabeledSample> samples(m);
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t row = sv.permutation[k];
    samples[k] = {sv.scores[row], data.responses[row], data.weights[row],
                  (*data.labels)[row]};
  }
  const std::vector<Block> blocks = build_blocks(samples);
  const PairedDifferences diffs = pair_differences(blocks);
  return summarize(cumulative_graph_two(diffs, blocks), m);
}

}  // namespace hilbertcd
