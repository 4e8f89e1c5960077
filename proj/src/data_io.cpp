#include "nbnn/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <cfenv>
#include <cmath>
#include <fstream>
#include <map>

#include "nbnn/errors.hpp"
#include "nbnn/random.hpp"

namespace nbnn {
namespace {

struct CsvRow {
  std::size_t line = 0;  // 1-based line number in the file
  std::vector<std::string> fields;
};

struct CsvFile {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_line(const std::string& line, std::size_t line_no) {
  std::vector<std::string> out;
  std::string field;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
      was_quoted = true;
    } else if (ch == ',') {
      out.push_back(was_quoted ? field : trim(field));
      field.clear();
      was_quoted = false;
    } else {
      field.push_back(ch);
    }
  }
  if (quoted) throw DataError("line " + std::to_string(line_no) + ": unterminated quoted field");
  out.push_back(was_quoted ? field : trim(field));
  return out;
}

CsvFile read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  CsvFile csv;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (trim(line).empty()) continue;
    auto fields = split_line(line, line_no);
    if (!have_header) {
      csv.header = std::move(fields);
      have_header = true;
      continue;
    }
    if (fields.size() != csv.header.size()) {
      throw DataError("line " + std::to_string(line_no) + ": expected " +
                      std::to_string(csv.header.size()) + " fields, found " +
                      std::to_string(fields.size()));
    }
    csv.rows.push_back({line_no, std::move(fields)});
  }
  if (!have_header) throw DataError("'" + path.string() + "' is empty");
  if (csv.rows.empty()) throw DataError("'" + path.string() + "' has a header but no data rows");
  return csv;
}

std::string join_names(std::span<const std::string> names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += ", ";
    out += n;
  }
  return out;
}

double parse_number(const CsvRow& row, std::size_t data_row, const std::string& field,
                    const std::string& column) {
  double v = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw DataError("row " + std::to_string(data_row) + " (line " + std::to_string(row.line) +
                    "), column '" + column + "': cannot parse '" + field + "' as a number");
  }
  if (!std::isfinite(v)) {
    throw DataError("row " + std::to_string(data_row) + " (line " + std::to_string(row.line) +
                    "), column '" + column + "': non-finite value '" + field + "'");
  }
  return v;
}

}  // namespace

LoadedDataset load_csv(const std::filesystem::path& path, const std::string& label_column) {
  const CsvFile csv = read_csv(path);
  const auto label_it = std::find(csv.header.begin(), csv.header.end(), label_column);
  if (label_it == csv.header.end()) {
    throw DataError("label column '" + label_column + "' not found; available columns: " +
                    join_names(csv.header));
  }
  const auto label_pos = static_cast<std::size_t>(label_it - csv.header.begin());
  if (csv.header.size() < 2) throw DataError("'" + path.string() + "' has no feature columns");

  LoadedDataset out;
  out.label_column = label_column;
  for (std::size_t c = 0; c < csv.header.size(); ++c) {
    if (c != label_pos) out.feature_names.push_back(csv.header[c]);
  }

  // Class ids by descending count, ties by first appearance.
  std::vector<std::string> first_seen;
  std::map<std::string, std::size_t> counts;
  for (const auto& row : csv.rows) {
    const std::string& name = row.fields[label_pos];
    if (name.empty()) {
      throw DataError("line " + std::to_string(row.line) + ": empty label in column '" +
                      label_column + "'");
    }
    if (counts[name]++ == 0) first_seen.push_back(name);
  }
  out.class_names = first_seen;
  std::stable_sort(out.class_names.begin(), out.class_names.end(),
                   [&](const std::string& a, const std::string& b) { return counts[a] > counts[b]; });
  std::map<std::string, int> id_of;
  for (std::size_t i = 0; i < out.class_names.size(); ++i) {
    id_of[out.class_names[i]] = static_cast<int>(i) + 1;
  }

  const std::size_t dim = out.feature_names.size();
  std::vector<double> values;
  values.reserve(csv.rows.size() * dim);
  std::vector<int> labels;
  labels.reserve(csv.rows.size());
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    const auto& row = csv.rows[r];
    for (std::size_t c = 0; c < row.fields.size(); ++c) {
      if (c == label_pos) continue;
      values.push_back(parse_number(row, r + 1, row.fields[c], csv.header[c]));
    }
    labels.push_back(id_of.at(row.fields[label_pos]));
  }
  out.data = LabeledDataset(std::move(values), dim, std::move(labels),
                            static_cast<int>(out.class_names.size()));
  return out;
}

FeatureTable load_features_csv(const std::filesystem::path& path,
                               std::span<const std::string> feature_names,
                               const std::string& ignored_column) {
  const CsvFile csv = read_csv(path);
  std::vector<std::string> extra;
  for (const auto& h : csv.header) {
    if (h != ignored_column && std::find(feature_names.begin(), feature_names.end(), h) == feature_names.end()) {
      extra.push_back(h);
    }
  }
  std::vector<std::string> missing;
  std::vector<std::size_t> source;
  for (const auto& f : feature_names) {
    const auto it = std::find(csv.header.begin(), csv.header.end(), f);
    if (it == csv.header.end()) {
      missing.push_back(f);
    } else {
      source.push_back(static_cast<std::size_t>(it - csv.header.begin()));
    }
  }
  if (!extra.empty() || !missing.empty()) {
    std::string msg = "query columns do not match training features;";
    if (!extra.empty()) msg += " unexpected: " + join_names(extra) + ";";
    if (!missing.empty()) msg += " missing: " + join_names(missing) + ";";
    msg.pop_back();
    throw DataError(msg);
  }
  FeatureTable out;
  out.rows = csv.rows.size();
  out.dim = feature_names.size();
  out.values.reserve(out.rows * out.dim);
  for (std::size_t r = 0; r < csv.rows.size(); ++r) {
    for (std::size_t j = 0; j < source.size(); ++j) {
      out.values.push_back(parse_number(csv.rows[r], r + 1, csv.rows[r].fields[source[j]],
                                        csv.header[source[j]]));
    }
  }
  return out;
}

std::vector<double> StandardizationParams::transform_row(std::span<const double> row) const {
  if (row.size() != input_dim) {
    throw DomainError("row has dimension " + std::to_string(row.size()) + ", expected " +
                      std::to_string(input_dim));
  }
  std::vector<double> out(kept.size());
  for (std::size_t j = 0; j < kept.size(); ++j) out[j] = (row[kept[j]] - mean[j]) / sd[j];
  return out;
}

LabeledDataset StandardizationParams::apply(const LabeledDataset& data) const {
  std::vector<double> values;
  values.reserve(data.size() * kept.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto z = transform_row(data.row(i));
    values.insert(values.end(), z.begin(), z.end());
  }
  return LabeledDataset(std::move(values), kept.size(),
                        std::vector<int>(data.labels().begin(), data.labels().end()),
                        data.num_classes());
}

StandardizationParams fit_standardization(const LabeledDataset& train) {
  if (train.empty()) throw DomainError("cannot standardize an empty training set");
  const std::size_t n = train.size();
  const std::size_t p = train.dim();
  StandardizationParams params;
  params.input_dim = p;
  for (std::size_t j = 0; j < p; ++j) {
    double mean = 0.0;
    for (std::size_t i = 0; i < n; ++i) mean += train.row(i)[j];
    mean /= static_cast<double>(n);
    double ss = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double d = train.row(i)[j] - mean;
      ss += d * d;
    }
    const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
    if (sd > 0.0) {
      params.kept.push_back(j);
      params.mean.push_back(mean);
      params.sd.push_back(sd);
    } else {
      params.dropped.push_back(j);
    }
  }
  if (params.kept.empty()) throw DomainError("every feature is constant on the training set");
  return params;
}

Standardized standardize(const LabeledDataset& train, std::span<const LabeledDataset> others) {
  Standardized out;
  out.params = fit_standardization(train);
  out.train = out.params.apply(train);
  for (const auto& d : others) out.others.push_back(out.params.apply(d));
  return out;
}

std::int64_t round_half_even(double x) {
  const int saved = std::fegetround();
  std::fesetround(FE_TONEAREST);
  const double r = std::nearbyint(x);
  std::fesetround(saved);
  return static_cast<std::int64_t>(r);
}

SplitIndices balanced_split_indices(const LabeledDataset& data, const SplitSpec& spec, int trial) {
  if (!(spec.minority_test_fraction > 0.0 && spec.minority_test_fraction < 1.0)) {
    throw DomainError("test fraction must lie in (0, 1)");
  }
  const int j = data.num_classes();
  std::size_t n_min = data.size();
  for (int c = 1; c <= j; ++c) n_min = std::min(n_min, data.class_count(c));
  if (n_min < 4) {
    throw DomainError("smallest class has " + std::to_string(n_min) + " rows; at least 4 needed");
  }
  const auto m = round_half_even(spec.minority_test_fraction * static_cast<double>(n_min));
  if (m <= 0) throw DomainError("test fraction leaves no test rows per class");

  Rng rng(derive_seed(spec.seed, {static_cast<std::uint64_t>(trial),
                                  static_cast<std::uint64_t>(Stream::split)}));
  SplitIndices out;
  for (int c = 1; c <= j; ++c) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < data.size(); ++i) {
      if (data.label(i) == c) rows.push_back(i);
    }
    rng.shuffle(std::span(rows));
    const auto cut = static_cast<std::size_t>(m);
    out.test.insert(out.test.end(), rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(cut));
    out.train.insert(out.train.end(), rows.begin() + static_cast<std::ptrdiff_t>(cut), rows.end());
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

TrainTest balanced_split(const LabeledDataset& data, const SplitSpec& spec, int trial) {
  const SplitIndices idx = balanced_split_indices(data, spec, trial);
  return {data.subset(idx.train), data.subset(idx.test)};
}

}  // namespace nbnn
