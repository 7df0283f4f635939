#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hilbertcd/dataset.hpp"

namespace hilbertcd {

/// Raw delimited file contents; cells are kept as trimmed strings.
struct RawTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t column(const std::string& name) const;  // throws if absent
  RawTable subset(const std::vector<std::size_t>& row_indices) const;
};

/// Reads a UTF-8 file with a header row.  Quoted fields may contain the
/// delimiter; a row with the wrong cell count raises with its line number.
/// keep_columns, when non-empty, restricts the table to those columns (in
/// file order), which keeps wide survey extracts affordable.
RawTable read_table(const std::filesystem::path& path, char delimiter = ',',
                    const std::vector<std::string>& keep_columns = {});

/// Mapping from file columns to Dataset roles.
struct ColumnSpec {
  std::vector<std::string> covariate_columns;  // ordered; also the curve order
  std::string response_column;
  std::string weight_column;  // empty: every weight is 1
  std::string label_column;   // empty: no labels
  std::map<std::string, int> label_values;  // empty: parse labels as 0/1
  char delimiter = ',';
  std::vector<std::string> missing_sentinels{""};
};

/// Strict typed load: any missing or unparseable required field, or a
/// non-positive weight, raises naming the row.
Dataset load_csv(const std::filesystem::path& path, const ColumnSpec& spec);
Dataset dataset_from_table(const RawTable& table, const ColumnSpec& spec);

/// Direct-mail experiment recipe: drops rows missing any of the three
/// covariates, keeps age / percent-married / block-income as covariates (in
/// that order), reads the response flag, and records which mailings each
/// surviving prospect received.  Flag cells count as set unless missing or
/// equal to "0".
struct KddConfig {
  std::string age_column = "AGE";
  std::string married_column = "MARR1";
  std::string income_column = "IC3";
  std::string folding_column;   // received a mailing of folding cards
  std::string normal_column;    // received a mailing of normal cards
  std::string response_column;  // responded to the solicitation
  std::vector<std::string> missing_sentinels{"", ".", "NA"};
};

struct KddData {
  Dataset data;  // weights all 1
  std::vector<bool> got_folding, got_normal;
  std::vector<std::size_t> kept_rows;  // original row indices, in order

  std::vector<std::size_t> folding_only() const;
  std::vector<std::size_t> normal_only() const;
  std::vector<std::size_t> both_mailings() const;
};

KddData kdd_filter(const RawTable& raw, const KddConfig& config);

/// Household survey recipe: keeps rows with strictly positive sampling
/// weight, nonzero income and a present adjustment factor; the first
/// covariate is log(income * adjustment), where an adjustment written
/// without its decimal point is divided by one million.  Rows whose adjusted
/// income is non-positive or whose response is missing are dropped too.
struct AcsConfig {
  std::string weight_column = "WGTP";
  std::string income_column = "HINCP";
  std::string adjustment_column = "ADJINC";
  std::vector<std::string> covariate_columns{"MV", "NOC"};
  std::string response_column;
  std::string region_column;  // optional; kept per row for subpop selection
  std::vector<std::string> missing_sentinels{""};
};

struct AcsData {
  Dataset data;  // covariates: log adjusted income, then config covariates
  std::vector<std::string> region;     // aligned with rows when configured
  std::vector<std::size_t> kept_rows;  // original row indices, in order
};

AcsData acs_filter(const RawTable& raw, const AcsConfig& config);

}  // namespace hilbertcd
