#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "hilbertcd/scores.hpp"

namespace hilbertcd {

/// Covariates, responses, sampling weights and (optionally) per-row
/// subpopulation labels, aligned by row.
struct Dataset {
  CovariateMatrix covariates;
  std::vector<double> responses;
  std::vector<double> weights;              // all > 0; defaults to 1
  std::optional<std::vector<int>> labels;   // 0/1 designations when present

  std::size_t size() const { return covariates.rows; }
  void validate() const;  // throws std::invalid_argument
};

/// Canonical round-trippable CSV: covariate columns (original order), then
/// "response", "weight" and, when labels are present, "label"; values are
/// written with enough digits to reproduce the doubles exactly.
void write_dataset_csv(const Dataset& data, const std::filesystem::path& path);

}  // namespace hilbertcd
