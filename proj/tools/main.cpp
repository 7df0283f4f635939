// Command-line front end: score covariate files along the Hilbert curve,
// compare subpopulations via cumulative-difference graphs, generate the
// synthetic benchmark populations, and run the synthetic reproduction suite.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hilbertcd/ingest.hpp"
#include "hilbertcd/report.hpp"
#include "hilbertcd/synth.hpp"

namespace {

using nlohmann::json;

struct CommonFlags {
  std::string input;
  std::vector<std::string> covariates;
  std::string response_col = "response";
  std::string weights_col;
  std::string normalize = "minmax";
  unsigned bits_per_dim = 0;
  std::uint64_t jitter_seed = 0;
  double jitter_rel = 0.0;
  std::vector<std::string> jitter_cols;
  std::vector<std::string> order;
  bool reverse = false;
  char delimiter = ',';
};

// --order names the covariates in the order the curve should cycle through
// them, overriding the --covariates order; --reverse applies afterwards.
void apply_order_flag(hilbertcd::Dataset& data,
                      const std::vector<std::string>& order) {
  if (order.empty()) return;
  const auto& names = data.covariates.column_names;
  if (order.size() != names.size()) {
    throw std::runtime_error("--order must list every covariate exactly once");
  }
  std::vector<std::size_t> permutation;
  for (const std::string& name : order) {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw std::runtime_error("--order names unknown covariate '" + name +
                               "'");
    }
    permutation.push_back(static_cast<std::size_t>(it - names.begin()));
  }
  std::vector<bool> seen(names.size(), false);
  for (const std::size_t c : permutation) {
    if (seen[c]) {
      throw std::runtime_error("--order repeats a covariate");
    }
    seen[c] = true;
  }
  data.covariates.column_order = std::move(permutation);
}

void add_common_flags(CLI::App* cmd, CommonFlags& flags, bool with_response) {
  cmd->add_option("input", flags.input, "input CSV file")->required();
  cmd->add_option("--covariates", flags.covariates,
                  "ordered covariate column names (the curve order)")
      ->required()
      ->delimiter(',');
  if (with_response) {
    cmd->add_option("--response-col", flags.response_col,
                    "response column name");
    cmd->add_option("--weights-col", flags.weights_col,
                    "sampling weight column (default: all weights 1)");
  }
  cmd->add_option("--normalize", flags.normalize,
                  "normalization: minmax (affine) or maxdiv (divide by max)")
      ->check(CLI::IsMember({"minmax", "maxdiv"}));
  cmd->add_option("--bits-per-dim", flags.bits_per_dim,
                  "bits of curve resolution per covariate (0: auto)");
  cmd->add_option("--jitter-seed", flags.jitter_seed, "jitter RNG seed");
  cmd->add_option("--jitter-rel", flags.jitter_rel,
                  "relative jitter magnitude (e.g. 1e-8; 0 disables)");
  cmd->add_option("--jitter-cols", flags.jitter_cols,
                  "columns to jitter (default: all)")
      ->delimiter(',');
  cmd->add_option("--order", flags.order,
                  "curve order of the covariates (default: as listed)")
      ->delimiter(',');
  cmd->add_flag("--reverse", flags.reverse, "reverse the covariate order");
  cmd->add_option("--delimiter", flags.delimiter, "field delimiter");
}

hilbertcd::AnalysisOptions to_options(const CommonFlags& flags,
                                      const hilbertcd::Dataset& data) {
  hilbertcd::AnalysisOptions opt;
  opt.normalization = flags.normalize == "maxdiv"
                          ? hilbertcd::NormalizationMode::divide_by_max
                          : hilbertcd::NormalizationMode::affine_minmax;
  opt.bits_per_dim = flags.bits_per_dim;
  opt.jitter_seed = flags.jitter_seed;
  opt.jitter_rel = flags.jitter_rel;
  opt.reverse_order = flags.reverse;
  for (const std::string& name : flags.jitter_cols) {
    const auto& names = data.covariates.column_names;
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw std::runtime_error("unknown jitter column '" + name + "'");
    }
    opt.jitter_columns.push_back(
        static_cast<std::size_t>(it - names.begin()));
  }
  return opt;
}

json flags_to_json(const CommonFlags& flags) {
  return {{"input", flags.input},
          {"covariates", flags.covariates},
          {"normalize", flags.normalize},
          {"bits_per_dim", flags.bits_per_dim},
          {"jitter_seed", flags.jitter_seed},
          {"jitter_rel", flags.jitter_rel},
          {"reverse", flags.reverse}};
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out || !(out << contents)) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
}

std::string reversed_svg_path(const std::string& path) {
  const auto dot = path.rfind('.');
  if (dot == std::string::npos) return path + ".reversed";
  return path.substr(0, dot) + ".reversed" + path.substr(dot);
}

void emit_outputs(const hilbertcd::GraphSummary& summary,
                  const hilbertcd::GraphSummary* reversed,
                  const hilbertcd::RenderConfig& render, const json& config,
                  const std::string& json_out, const std::string& svg_out) {
  json body;
  if (reversed) {
    body["schema"] = "hilbertcd/summary-pair/v1";
    body["forward"] = hilbertcd::summary_to_json(summary, config);
    json rev_config = config;
    rev_config["reverse"] = !config.value("reverse", false);
    body["reversed"] = hilbertcd::summary_to_json(*reversed, rev_config);
  } else {
    body = hilbertcd::summary_to_json(summary, config);
  }
  if (!json_out.empty()) {
    write_file(json_out, body.dump(2) + "\n");
  } else {
    std::cout << body.dump(2) << "\n";
  }
  if (!svg_out.empty()) {
    write_file(svg_out, hilbertcd::render_graph(summary, render));
    if (reversed) {
      write_file(reversed_svg_path(svg_out),
                 hilbertcd::render_graph(*reversed, render));
    }
  }
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int run(int argc, char** argv) {
  CLI::App app{
      "Compare subpopulation responses while conditioning on multiple "
      "covariates, using Hilbert-curve scores and cumulative-difference "
      "graphs"};
  app.require_subcommand(1);

  // ---- scores ----------------------------------------------------------
  CommonFlags score_flags;
  std::string score_out;
  auto* scores_cmd =
      app.add_subcommand("scores", "score a covariate CSV along the curve");
  add_common_flags(scores_cmd, score_flags, /*with_response=*/false);
  scores_cmd->add_option("--output", score_out, "output CSV (default stdout)");

  // ---- compare-full ----------------------------------------------------
  CommonFlags full_flags;
  std::string full_subpop_col = "label";
  double full_subpop_value = 1.0;
  std::string full_json_out, full_svg_out, full_title;
  bool full_both_orders = false;
  auto* full_cmd = app.add_subcommand(
      "compare-full", "compare a subpopulation against the full population");
  add_common_flags(full_cmd, full_flags, /*with_response=*/true);
  full_cmd->add_option("--subpop-col", full_subpop_col,
                       "column flagging subpopulation membership");
  full_cmd->add_option("--subpop-value", full_subpop_value,
                       "value marking a subpopulation row");
  full_cmd->add_flag("--both-orders", full_both_orders,
                     "also analyze with the covariate order reversed");
  full_cmd->add_option("--json-out", full_json_out, "summary JSON path");
  full_cmd->add_option("--svg-out", full_svg_out, "graph SVG path");
  full_cmd->add_option("--title", full_title, "graph title");

  // ---- compare-two -----------------------------------------------------
  CommonFlags two_flags;
  std::string two_label_col = "label";
  std::string two_json_out, two_svg_out, two_title;
  bool two_both_orders = false;
  auto* two_cmd = app.add_subcommand(
      "compare-two", "compare two disjoint labeled subpopulations");
  add_common_flags(two_cmd, two_flags, /*with_response=*/true);
  two_cmd->add_option("--label-col", two_label_col,
                      "column holding the 0/1 subpopulation labels");
  two_cmd->add_flag("--both-orders", two_both_orders,
                    "also analyze with the covariate order reversed");
  two_cmd->add_option("--json-out", two_json_out, "summary JSON path");
  two_cmd->add_option("--svg-out", two_svg_out, "graph SVG path");
  two_cmd->add_option("--title", two_title, "graph title");

  // ---- scatter ---------------------------------------------------------
  CommonFlags scatter_flags;
  std::string scatter_label_col, scatter_out, scatter_title;
  auto* scatter_cmd = app.add_subcommand(
      "scatter", "plot two covariates shaded by their curve ordering");
  add_common_flags(scatter_cmd, scatter_flags, /*with_response=*/false);
  scatter_cmd->add_option("--label-col", scatter_label_col,
                          "subpopulation flag column (larger markers)");
  scatter_cmd->add_option("--title", scatter_title, "plot title");
  scatter_cmd->add_option("--svg-out", scatter_out, "scatter SVG path")
      ->required();

  // ---- synth -----------------------------------------------------------
  hilbertcd::SynthConfig synth_cfg{1000, 100, 2, 1, false};
  std::string synth_out;
  auto* synth_cmd =
      app.add_subcommand("synth", "generate a synthetic benchmark population");
  synth_cmd->add_option("--m", synth_cfg.population, "population size");
  synth_cmd->add_option("--n", synth_cfg.subpop_size, "subpopulation size");
  synth_cmd->add_option("--p", synth_cfg.covariates, "covariate count");
  synth_cmd->add_option("--seed", synth_cfg.seed, "RNG seed");
  synth_cmd->add_flag("--force-ones", synth_cfg.force_subpop_ones,
                      "set every subpopulation response to 1");
  synth_cmd->add_option("--output", synth_out, "output CSV (default stdout)");

  // ---- reproduce-synthetic ----------------------------------------------
  std::vector<std::size_t> rep_p{2, 4, 8, 16, 32, 64};
  std::size_t rep_seeds = 20, rep_m = 1000, rep_n = 100;
  bool rep_null = false;
  std::string rep_out;
  auto* rep_cmd = app.add_subcommand(
      "reproduce-synthetic",
      "run the synthetic suite across covariate counts and seeds");
  rep_cmd->add_option("--p-list", rep_p, "covariate counts")->delimiter(',');
  rep_cmd->add_option("--seeds", rep_seeds, "number of seeds per case");
  rep_cmd->add_option("--m", rep_m, "population size");
  rep_cmd->add_option("--n", rep_n, "subpopulation size");
  rep_cmd->add_flag("--null", rep_null,
                    "null variant: do not force subpopulation responses");
  rep_cmd->add_option("--output", rep_out, "summary CSV (default stdout)");

  // ---- filter-kdd ------------------------------------------------------
  hilbertcd::KddConfig kdd_cfg;
  std::string kdd_in, kdd_out, kdd_subpop = "folding_only";
  char kdd_delim = ',';
  auto* kdd_cmd = app.add_subcommand(
      "filter-kdd", "apply the direct-mail experiment recipe to a raw CSV");
  kdd_cmd->add_option("input", kdd_in, "raw CSV file")->required();
  kdd_cmd->add_option("--age-col", kdd_cfg.age_column, "age column");
  kdd_cmd->add_option("--married-col", kdd_cfg.married_column,
                      "percent-married column");
  kdd_cmd->add_option("--income-col", kdd_cfg.income_column,
                      "household income column");
  kdd_cmd->add_option("--folding-col", kdd_cfg.folding_column,
                      "folding-cards mailing flag column")
      ->required();
  kdd_cmd->add_option("--normal-col", kdd_cfg.normal_column,
                      "normal-cards mailing flag column")
      ->required();
  kdd_cmd->add_option("--response-col", kdd_cfg.response_column,
                      "responded flag column")
      ->required();
  kdd_cmd
      ->add_option("--subpop", kdd_subpop,
                   "label rows in: folding_only, normal_only, both, "
                   "folding_vs_normal")
      ->check(CLI::IsMember(
          {"folding_only", "normal_only", "both", "folding_vs_normal"}));
  kdd_cmd->add_option("--delimiter", kdd_delim, "field delimiter");
  kdd_cmd->add_option("--output", kdd_out, "filtered CSV path")->required();

  // ---- filter-acs ------------------------------------------------------
  hilbertcd::AcsConfig acs_cfg;
  std::string acs_in, acs_out, acs_region_value;
  char acs_delim = ',';
  auto* acs_cmd = app.add_subcommand(
      "filter-acs", "apply the household survey recipe to a raw CSV");
  acs_cmd->add_option("input", acs_in, "raw CSV file")->required();
  acs_cmd->add_option("--weight-col", acs_cfg.weight_column,
                      "sampling weight column");
  acs_cmd->add_option("--income-col", acs_cfg.income_column, "income column");
  acs_cmd->add_option("--adjustment-col", acs_cfg.adjustment_column,
                      "income adjustment factor column");
  acs_cmd->add_option("--covariates", acs_cfg.covariate_columns,
                      "extra covariate columns after the log income")
      ->delimiter(',');
  acs_cmd->add_option("--response-col", acs_cfg.response_column,
                      "response column")
      ->required();
  acs_cmd->add_option("--region-col", acs_cfg.region_column,
                      "region column used for the subpopulation label");
  acs_cmd->add_option("--subpop-region", acs_region_value,
                      "region value labeling subpopulation rows");
  acs_cmd->add_option("--delimiter", acs_delim, "field delimiter");
  acs_cmd->add_option("--output", acs_out, "filtered CSV path")->required();

  CLI11_PARSE(app, argc, argv);

  if (scores_cmd->parsed()) {
    hilbertcd::ColumnSpec spec;
    spec.covariate_columns = score_flags.covariates;
    spec.delimiter = score_flags.delimiter;
    // Scores need covariates only; reuse the loader with a stand-in response.
    const hilbertcd::RawTable table = hilbertcd::read_table(
        score_flags.input, score_flags.delimiter, score_flags.covariates);
    hilbertcd::Dataset data;
    std::vector<double> values;
    std::vector<std::size_t> cov_idx;
    for (const std::string& name : score_flags.covariates) {
      cov_idx.push_back(table.column(name));
    }
    for (const auto& row : table.rows) {
      for (const std::size_t j : cov_idx) {
        values.push_back(std::stod(row[j]));
      }
    }
    data.covariates = hilbertcd::CovariateMatrix::create(
        table.rows.size(), cov_idx.size(), std::move(values),
        score_flags.covariates);
    data.responses.assign(table.rows.size(), 0.0);
    data.weights.assign(table.rows.size(), 1.0);
    apply_order_flag(data, score_flags.order);
    const hilbertcd::ScoreVector sv =
        hilbertcd::score_dataset(data, to_options(score_flags, data));

    std::string csv = "row,score\n";
    char buf[64];
    for (std::size_t i = 0; i < sv.scores.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%zu,%.17g\n", i, sv.scores[i]);
      csv += buf;
    }
    if (score_out.empty()) {
      std::cout << csv;
    } else {
      write_file(score_out, csv);
    }
    return 0;
  }

  if (full_cmd->parsed()) {
    hilbertcd::ColumnSpec spec;
    spec.covariate_columns = full_flags.covariates;
    spec.response_column = full_flags.response_col;
    spec.weight_column = full_flags.weights_col;
    spec.label_column = full_subpop_col;
    spec.delimiter = full_flags.delimiter;
    hilbertcd::Dataset data = hilbertcd::load_csv(full_flags.input, spec);
    apply_order_flag(data, full_flags.order);
    std::vector<std::size_t> subpop;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if ((*data.labels)[i] == static_cast<int>(full_subpop_value)) {
        subpop.push_back(i);
      }
    }
    const auto options = to_options(full_flags, data);
    const auto summary =
        hilbertcd::compare_full_pipeline(data, subpop, options);
    std::optional<hilbertcd::GraphSummary> reversed;
    if (full_both_orders) {
      auto rev = options;
      rev.reverse_order = !options.reverse_order;
      reversed = hilbertcd::compare_full_pipeline(data, subpop, rev);
    }
    hilbertcd::RenderConfig render;
    render.title = full_title.empty()
                       ? "subpop. deviation is the slope as a function of "
                         "cumulative weight"
                       : full_title;
    json config = hilbertcd::render_config_to_json(render);
    config["kind"] = "full";
    config["flags"] = flags_to_json(full_flags);
    emit_outputs(summary, reversed ? &*reversed : nullptr, render, config,
                 full_json_out, full_svg_out);
    return 0;
  }

  if (two_cmd->parsed()) {
    hilbertcd::ColumnSpec spec;
    spec.covariate_columns = two_flags.covariates;
    spec.response_column = two_flags.response_col;
    spec.weight_column = two_flags.weights_col;
    spec.label_column = two_label_col;
    spec.delimiter = two_flags.delimiter;
    hilbertcd::Dataset data = hilbertcd::load_csv(two_flags.input, spec);
    apply_order_flag(data, two_flags.order);
    const auto options = to_options(two_flags, data);
    const auto summary = hilbertcd::compare_two_pipeline(data, options);
    std::optional<hilbertcd::GraphSummary> reversed;
    if (two_both_orders) {
      auto rev = options;
      rev.reverse_order = !options.reverse_order;
      reversed = hilbertcd::compare_two_pipeline(data, rev);
    }
    hilbertcd::RenderConfig render;
    render.title = two_title.empty()
                       ? "subpop. deviation is the slope as a function of "
                         "cumulative weight"
                       : two_title;
    json config = hilbertcd::render_config_to_json(render);
    config["kind"] = "two";
    config["flags"] = flags_to_json(two_flags);
    emit_outputs(summary, reversed ? &*reversed : nullptr, render, config,
                 two_json_out, two_svg_out);
    return 0;
  }

  if (scatter_cmd->parsed()) {
    if (scatter_flags.covariates.size() != 2) {
      throw std::runtime_error("scatter needs exactly two covariate columns");
    }
    hilbertcd::ColumnSpec spec;
    spec.covariate_columns = scatter_flags.covariates;
    spec.delimiter = scatter_flags.delimiter;
    std::vector<std::string> keep = scatter_flags.covariates;
    if (!scatter_label_col.empty()) keep.push_back(scatter_label_col);
    const hilbertcd::RawTable table =
        hilbertcd::read_table(scatter_flags.input, scatter_flags.delimiter, keep);
    hilbertcd::Dataset data;
    std::vector<double> values;
    std::vector<int> labels;
    const std::size_t cx = table.column(scatter_flags.covariates[0]);
    const std::size_t cy = table.column(scatter_flags.covariates[1]);
    const std::size_t cl =
        scatter_label_col.empty() ? 0 : table.column(scatter_label_col);
    for (const auto& row : table.rows) {
      values.push_back(std::stod(row[cx]));
      values.push_back(std::stod(row[cy]));
      if (!scatter_label_col.empty()) {
        labels.push_back(static_cast<int>(std::stod(row[cl])));
      }
    }
    data.covariates = hilbertcd::CovariateMatrix::create(
        table.rows.size(), 2, std::move(values), scatter_flags.covariates);
    data.responses.assign(table.rows.size(), 0.0);
    data.weights.assign(table.rows.size(), 1.0);
    apply_order_flag(data, scatter_flags.order);
    const hilbertcd::ScoreVector sv =
        hilbertcd::score_dataset(data, to_options(scatter_flags, data));
    hilbertcd::RenderConfig render;
    render.title = scatter_title;
    write_file(scatter_out, hilbertcd::render_ordering_scatter(
                                data.covariates, 0, 1, sv,
                                labels.empty() ? nullptr : &labels, render));
    return 0;
  }

  if (synth_cmd->parsed()) {
    const hilbertcd::SynthResult result = hilbertcd::generate(synth_cfg);
    if (synth_out.empty()) {
      const auto tmp = std::filesystem::temp_directory_path() /
                       "hilbertcd_synth_stdout.csv";
      hilbertcd::write_dataset_csv(result.data, tmp);
      std::ifstream in(tmp);
      std::cout << in.rdbuf();
      std::filesystem::remove(tmp);
    } else {
      hilbertcd::write_dataset_csv(result.data, synth_out);
    }
    return 0;
  }

  if (rep_cmd->parsed()) {
    std::string csv =
        "p,seeds,median_G,median_H,median_G_over_sigma,"
        "median_G_over_sigma_reversed,median_rel_order_diff\n";
    char buf[256];
    for (const std::size_t p : rep_p) {
      std::vector<double> gs, hs, ratios, ratios_rev, rel;
      for (std::uint64_t seed = 1; seed <= rep_seeds; ++seed) {
        const hilbertcd::SynthResult r = hilbertcd::generate(
            {rep_m, rep_n, p, seed, !rep_null});
        const auto fwd =
            hilbertcd::compare_full_pipeline(r.data, r.subpop, {});
        hilbertcd::AnalysisOptions rev_opt;
        rev_opt.reverse_order = true;
        const auto rev =
            hilbertcd::compare_full_pipeline(r.data, r.subpop, rev_opt);
        gs.push_back(fwd.ks);
        hs.push_back(fwd.kuiper);
        if (fwd.sigma > 0 && rev.sigma > 0) {
          const double a = fwd.ks / fwd.sigma;
          const double b = rev.ks / rev.sigma;
          ratios.push_back(a);
          ratios_rev.push_back(b);
          rel.push_back(std::abs(a - b) / a);
        }
      }
      std::snprintf(buf, sizeof buf, "%zu,%zu,%.6g,%.6g,%.6g,%.6g,%.6g\n", p,
                    rep_seeds, median(gs), median(hs), median(ratios),
                    median(ratios_rev), median(rel));
      csv += buf;
    }
    if (rep_out.empty()) {
      std::cout << csv;
    } else {
      write_file(rep_out, csv);
    }
    return 0;
  }

  if (kdd_cmd->parsed()) {
    const hilbertcd::RawTable raw = hilbertcd::read_table(
        kdd_in, kdd_delim,
        {kdd_cfg.age_column, kdd_cfg.married_column, kdd_cfg.income_column,
         kdd_cfg.folding_column, kdd_cfg.normal_column,
         kdd_cfg.response_column});
    hilbertcd::KddData kdd = hilbertcd::kdd_filter(raw, kdd_cfg);
    std::vector<int> labels(kdd.data.size(), 0);
    if (kdd_subpop == "folding_vs_normal") {
      // Two-subpopulation export: folding-only rows get label 0, normal-only
      // rows label 1, everything else is dropped.
      hilbertcd::Dataset pair;
      std::vector<double> values, responses, weights;
      std::vector<int> pair_labels;
      for (std::size_t i = 0; i < kdd.data.size(); ++i) {
        const bool fold = kdd.got_folding[i] && !kdd.got_normal[i];
        const bool norm = !kdd.got_folding[i] && kdd.got_normal[i];
        if (!fold && !norm) continue;
        for (std::size_t j = 0; j < 3; ++j) {
          values.push_back(kdd.data.covariates.at(i, j));
        }
        responses.push_back(kdd.data.responses[i]);
        weights.push_back(1.0);
        pair_labels.push_back(fold ? 0 : 1);
      }
      pair.covariates = hilbertcd::CovariateMatrix::create(
          pair_labels.size(), 3, std::move(values),
          kdd.data.covariates.column_names);
      pair.responses = std::move(responses);
      pair.weights = std::move(weights);
      pair.labels = std::move(pair_labels);
      hilbertcd::write_dataset_csv(pair, kdd_out);
      std::cerr << "kept " << pair.size() << " of " << raw.rows.size()
                << " rows\n";
      return 0;
    }
    const auto subpop = kdd_subpop == "folding_only" ? kdd.folding_only()
                        : kdd_subpop == "normal_only" ? kdd.normal_only()
                                                      : kdd.both_mailings();
    for (const std::size_t i : subpop) labels[i] = 1;
    kdd.data.labels = std::move(labels);
    hilbertcd::write_dataset_csv(kdd.data, kdd_out);
    std::cerr << "kept " << kdd.data.size() << " of " << raw.rows.size()
              << " rows; subpopulation " << kdd_subpop << " has "
              << subpop.size() << " rows\n";
    return 0;
  }

  if (acs_cmd->parsed()) {
    std::vector<std::string> keep{acs_cfg.weight_column, acs_cfg.income_column,
                                  acs_cfg.adjustment_column,
                                  acs_cfg.response_column};
    keep.insert(keep.end(), acs_cfg.covariate_columns.begin(),
                acs_cfg.covariate_columns.end());
    if (!acs_cfg.region_column.empty()) keep.push_back(acs_cfg.region_column);
    const hilbertcd::RawTable raw =
        hilbertcd::read_table(acs_in, acs_delim, keep);
    hilbertcd::AcsData acs = hilbertcd::acs_filter(raw, acs_cfg);
    if (!acs_region_value.empty()) {
      if (acs_cfg.region_column.empty()) {
        throw std::runtime_error("--subpop-region needs --region-col");
      }
      std::vector<int> labels(acs.data.size(), 0);
      std::size_t count = 0;
      for (std::size_t i = 0; i < acs.data.size(); ++i) {
        if (acs.region[i] == acs_region_value) {
          labels[i] = 1;
          ++count;
        }
      }
      acs.data.labels = std::move(labels);
      std::cerr << "subpopulation region " << acs_region_value << " has "
                << count << " rows\n";
    }
    hilbertcd::write_dataset_csv(acs.data, acs_out);
    std::cerr << "kept " << acs.data.size() << " of " << raw.rows.size()
              << " rows\n";
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    const json err{{"error", {{"type", "validation"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
