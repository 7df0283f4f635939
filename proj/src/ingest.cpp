#include "hilbertcd/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <stdexcept>

namespace hilbertcd {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_line(const std::string& line, char delimiter,
                                    std::size_t line_no) {
  std::vector<std::string> cells;
  std::string cell;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cell += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cell += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delimiter) {
      cells.push_back(trim(cell));
      cell.clear();
    } else {
      cell += c;
    }
  }
  if (quoted) {
    throw std::runtime_error("line " + std::to_string(line_no) +
                             ": unterminated quote");
  }
  cells.push_back(trim(cell));
  return cells;
}

bool is_missing(const std::string& cell,
                const std::vector<std::string>& sentinels) {
  return std::find(sentinels.begin(), sentinels.end(), cell) != sentinels.end();
}

std::optional<double> try_parse_double(const std::string& cell) {
  double value = 0.0;
  const char* begin = cell.data();
  const char* end = begin + cell.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || cell.empty()) return std::nullopt;
  return value;
}

double parse_double(const std::string& cell, const std::string& column,
                    std::size_t row) {
  const auto v = try_parse_double(cell);
  if (!v) {
    throw std::runtime_error("row " + std::to_string(row) + ": cannot parse '" +
                             cell + "' in column '" + column + "'");
  }
  return *v;
}

}  // namespace

void Dataset::validate() const {
  const std::size_t m = covariates.rows;
  if (responses.size() != m || weights.size() != m) {
    throw std::invalid_argument("dataset columns must align");
  }
  if (labels && labels->size() != m) {
    throw std::invalid_argument("dataset labels must align");
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!(weights[i] > 0.0)) {
      throw std::invalid_argument("weight at row " + std::to_string(i) +
                                  " must be positive");
    }
  }
}

std::size_t RawTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) {
    throw std::runtime_error("missing column '" + name + "'");
  }
  return static_cast<std::size_t>(it - header.begin());
}

RawTable RawTable::subset(const std::vector<std::size_t>& row_indices) const {
  RawTable out;
  out.header = header;
  for (const std::size_t i : row_indices) out.rows.push_back(rows[i]);
  return out;
}

RawTable read_table(const std::filesystem::path& path, char delimiter,
                    const std::vector<std::string>& keep_columns) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path.string() + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw std::runtime_error("'" + path.string() + "' is empty");
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const std::vector<std::string> full_header = split_line(line, delimiter, 1);

  std::vector<std::size_t> keep;
  RawTable table;
  if (keep_columns.empty()) {
    table.header = full_header;
    keep.resize(full_header.size());
    for (std::size_t j = 0; j < keep.size(); ++j) keep[j] = j;
  } else {
    for (std::size_t j = 0; j < full_header.size(); ++j) {
      if (std::find(keep_columns.begin(), keep_columns.end(),
                    full_header[j]) != keep_columns.end()) {
        keep.push_back(j);
        table.header.push_back(full_header[j]);
      }
    }
    for (const std::string& want : keep_columns) {
      if (std::find(table.header.begin(), table.header.end(), want) ==
          table.header.end()) {
        throw std::runtime_error("missing column '" + want + "' in '" +
                                 path.string() + "'");
      }
    }
  }

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::vector<std::string> cells = split_line(line, delimiter, line_no);
    if (cells.size() != full_header.size()) {
      throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                               std::to_string(cells.size()) + " cells, header has " +
                               std::to_string(full_header.size()));
    }
    std::vector<std::string> kept;
    kept.reserve(keep.size());
    for (const std::size_t j : keep) kept.push_back(cells[j]);
    table.rows.push_back(std::move(kept));
  }
  return table;
}

Dataset dataset_from_table(const RawTable& table, const ColumnSpec& spec) {
  if (spec.covariate_columns.empty()) {
    throw std::runtime_error("no covariate columns specified");
  }
  std::vector<std::size_t> cov_idx;
  for (const std::string& name : spec.covariate_columns) {
    cov_idx.push_back(table.column(name));
  }
  const std::size_t resp_idx = table.column(spec.response_column);
  const std::size_t weight_idx =
      spec.weight_column.empty() ? 0 : table.column(spec.weight_column);
  const std::size_t label_idx =
      spec.label_column.empty() ? 0 : table.column(spec.label_column);

  const std::size_t m = table.rows.size();
  const std::size_t p = cov_idx.size();
  std::vector<double> values;
  values.reserve(m * p);
  std::vector<double> responses, weights;
  std::vector<int> labels;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& row = table.rows[i];
    for (std::size_t j = 0; j < p; ++j) {
      values.push_back(
          parse_double(row[cov_idx[j]], spec.covariate_columns[j], i + 1));
    }
    responses.push_back(
        parse_double(row[resp_idx], spec.response_column, i + 1));
    if (spec.weight_column.empty()) {
      weights.push_back(1.0);
    } else {
      const double w = parse_double(row[weight_idx], spec.weight_column, i + 1);
      if (!(w > 0.0)) {
        throw std::runtime_error("row " + std::to_string(i + 1) +
                                 ": weight must be positive, got " +
                                 row[weight_idx]);
      }
      weights.push_back(w);
    }
    if (!spec.label_column.empty()) {
      const std::string& cell = row[label_idx];
      int label;
      if (!spec.label_values.empty()) {
        const auto it = spec.label_values.find(cell);
        if (it == spec.label_values.end()) {
          throw std::runtime_error("row " + std::to_string(i + 1) +
                                   ": unmapped label '" + cell + "'");
        }
        label = it->second;
      } else {
        label = static_cast<int>(
            parse_double(cell, spec.label_column, i + 1));
      }
      labels.push_back(label);
    }
  }

  Dataset out;
  out.covariates =
      CovariateMatrix::create(m, p, std::move(values), spec.covariate_columns);
  out.responses = std::move(responses);
  out.weights = std::move(weights);
  if (!spec.label_column.empty()) out.labels = std::move(labels);
  out.validate();
  return out;
}

Dataset load_csv(const std::filesystem::path& path, const ColumnSpec& spec) {
  std::vector<std::string> keep = spec.covariate_columns;
  keep.push_back(spec.response_column);
  if (!spec.weight_column.empty()) keep.push_back(spec.weight_column);
  if (!spec.label_column.empty()) keep.push_back(spec.label_column);
  return dataset_from_table(read_table(path, spec.delimiter, keep), spec);
}

namespace {

bool parse_flag(const std::string& cell,
                const std::vector<std::string>& sentinels) {
  if (is_missing(cell, sentinels)) return false;
  const auto v = try_parse_double(cell);
  return v ? *v != 0.0 : true;  // non-numeric marks like "X" count as set
}

}  // namespace

std::vector<std::size_t> KddData::folding_only() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < got_folding.size(); ++i) {
    if (got_folding[i] && !got_normal[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> KddData::normal_only() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < got_folding.size(); ++i) {
    if (!got_folding[i] && got_normal[i]) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> KddData::both_mailings() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < got_folding.size(); ++i) {
    if (got_folding[i] && got_normal[i]) out.push_back(i);
  }
  return out;
}

KddData kdd_filter(const RawTable& raw, const KddConfig& config) {
  for (const std::string* name :
       {&config.folding_column, &config.normal_column, &config.response_column}) {
    if (name->empty()) {
      throw std::runtime_error("kdd recipe: mailing and response columns "
                               "must be configured");
    }
  }
  const std::size_t age = raw.column(config.age_column);
  const std::size_t married = raw.column(config.married_column);
  const std::size_t income = raw.column(config.income_column);
  const std::size_t folding = raw.column(config.folding_column);
  const std::size_t normal = raw.column(config.normal_column);
  const std::size_t response = raw.column(config.response_column);

  KddData out;
  std::vector<double> values, responses;
  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    const auto& row = raw.rows[i];
    std::optional<double> vals[3];
    const std::size_t cols[3] = {age, married, income};
    bool keep = true;
    for (int j = 0; j < 3; ++j) {
      if (is_missing(row[cols[j]], config.missing_sentinels)) {
        keep = false;
        break;
      }
      vals[j] = try_parse_double(row[cols[j]]);
      if (!vals[j]) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    for (int j = 0; j < 3; ++j) values.push_back(*vals[j]);
    responses.push_back(
        parse_flag(row[response], config.missing_sentinels) ? 1.0 : 0.0);
    out.got_folding.push_back(parse_flag(row[folding], config.missing_sentinels));
    out.got_normal.push_back(parse_flag(row[normal], config.missing_sentinels));
    out.kept_rows.push_back(i);
  }

  const std::size_t m = out.kept_rows.size();
  out.data.covariates = CovariateMatrix::create(
      m, 3, std::move(values),
      {config.age_column, config.married_column, config.income_column});
  out.data.responses = std::move(responses);
  out.data.weights.assign(m, 1.0);
  out.data.validate();
  return out;
}

AcsData acs_filter(const RawTable& raw, const AcsConfig& config) {
  if (config.response_column.empty()) {
    throw std::runtime_error("acs recipe: response column must be configured");
  }
  const std::size_t weight = raw.column(config.weight_column);
  const std::size_t income = raw.column(config.income_column);
  const std::size_t adjustment = raw.column(config.adjustment_column);
  const std::size_t response = raw.column(config.response_column);
  std::vector<std::size_t> cov_idx;
  for (const std::string& name : config.covariate_columns) {
    cov_idx.push_back(raw.column(name));
  }
  const bool with_region = !config.region_column.empty();
  const std::size_t region = with_region ? raw.column(config.region_column) : 0;

  AcsData out;
  std::vector<double> values, responses, weights;
  for (std::size_t i = 0; i < raw.rows.size(); ++i) {
    const auto& row = raw.rows[i];
    const auto w = try_parse_double(row[weight]);
    if (!w || *w <= 0.0) continue;  // also removes group quarters
    const auto hincp = try_parse_double(row[income]);
    if (!hincp || *hincp == 0.0) continue;  // also removes vacant addresses
    if (is_missing(row[adjustment], config.missing_sentinels)) continue;
    const auto adj = try_parse_double(row[adjustment]);
    if (!adj) continue;
    // Integer-coded adjustment factors omit the decimal point.
    const double factor =
        row[adjustment].find('.') == std::string::npos ? *adj / 1e6 : *adj;
    const double adjusted = *hincp * factor;
    if (!(adjusted > 0.0)) continue;  // logarithm undefined
    if (is_missing(row[response], config.missing_sentinels)) continue;
    const auto resp = try_parse_double(row[response]);
    if (!resp) continue;

    bool covariates_ok = true;
    std::vector<double> cov_vals{std::log(adjusted)};
    for (const std::size_t c : cov_idx) {
      const auto v = try_parse_double(row[c]);
      if (!v) {
        covariates_ok = false;
        break;
      }
      cov_vals.push_back(*v);
    }
    if (!covariates_ok) continue;

    values.insert(values.end(), cov_vals.begin(), cov_vals.end());
    responses.push_back(*resp);
    weights.push_back(*w);
    if (with_region) out.region.push_back(row[region]);
    out.kept_rows.push_back(i);
  }

  std::vector<std::string> names{"log_adjusted_income"};
  names.insert(names.end(), config.covariate_columns.begin(),
               config.covariate_columns.end());
  const std::size_t m = out.kept_rows.size();
  out.data.covariates =
      CovariateMatrix::create(m, names.size(), std::move(values), names);
  out.data.responses = std::move(responses);
  out.data.weights = std::move(weights);
  out.data.validate();
  return out;
}

void write_dataset_csv(const Dataset& data, const std::filesystem::path& path) {
  data.validate();
  std::ofstream outfile(path);
  if (!outfile) {
    throw std::runtime_error("cannot write '" + path.string() + "'");
  }
  for (const std::string& name : data.covariates.column_names) {
    outfile << name << ',';
  }
  outfile << "response,weight";
  if (data.labels) outfile << ",label";
  outfile << '\n';

  char buf[64];
  const auto emit = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.17g", v);
    outfile << buf;
  };
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = 0; j < data.covariates.cols; ++j) {
      emit(data.covariates.at(i, j));
      outfile << ',';
    }
    emit(data.responses[i]);
    outfile << ',';
    emit(data.weights[i]);
    if (data.labels) outfile << ',' << (*data.labels)[i];
    outfile << '\n';
  }
  if (!outfile) {
    throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

}  // namespace hilbertcd
