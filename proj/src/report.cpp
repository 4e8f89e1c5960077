#include "nbnn/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace nbnn {

using nlohmann::json;

json to_json(const MetricSummary& s) { return json{{"mean", s.mean}, {"se", s.se}}; }

json to_json(const TrialReport& r) {
  json j;
  j["name"] = r.method;
  j["trials"] = r.trials.size();
  j["precision"] = to_json(r.precision);
  j["recall"] = to_json(r.recall);
  j["f1"] = to_json(r.f1);
  return j;
}

namespace {

json reports_json(std::span<const TrialReport> reports) {
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

}  // namespace

json simulation_document(std::string_view design, std::optional<ScaleMinority> minority,
                         const ExperimentConfig& cfg, std::span<const TrialReport> reports) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "simulate";
  doc["design"] = design;
  if (minority) doc["minority"] = *minority == ScaleMinority::narrow ? "narrow" : "wide";
  doc["alpha"] = cfg.alpha;
  doc["trials"] = cfg.trials;
  doc["seed"] = cfg.seed;
  doc["k_max"] = cfg.k_max;
  doc["train_size"] = cfg.train_size;
  doc["test_size"] = cfg.test_size;
  doc["methods"] = reports_json(reports);
  return doc;
}

json benchmark_document(const LoadedDataset& input, const BenchmarkConfig& cfg,
                        const BenchmarkResult& result) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "benchmark";
  doc["label_column"] = input.label_column;
  doc["rows"] = input.data.size();
  doc["features"] = input.feature_names;
  json classes = json::array();
  for (std::size_t c = 0; c < input.class_names.size(); ++c) {
    classes.push_back({{"id", c + 1},
                       {"name", input.class_names[c]},
                       {"count", input.data.class_count(static_cast<int>(c) + 1)},
                       {"train", result.train_counts[c]},
                       {"test", result.test_counts[c]}});
  }
  doc["classes"] = classes;
  doc["trials"] = cfg.split.trials;
  doc["seed"] = cfg.split.seed;
  doc["minority_test_fraction"] = cfg.split.minority_test_fraction;
  doc["k_max"] = cfg.k_max;
  doc["methods"] = reports_json(result.reports);
  doc["efficiency"] = result.efficiency;
  return doc;
}

json split_manifest(const LoadedDataset& input, const SplitSpec& spec) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["command"] = "split";
  doc["label_column"] = input.label_column;
  doc["rows"] = input.data.size();
  doc["seed"] = spec.seed;
  doc["minority_test_fraction"] = spec.minority_test_fraction;
  json trials = json::array();
  for (int t = 0; t < spec.trials; ++t) {
    const SplitIndices idx = balanced_split_indices(input.data, spec, t);
    trials.push_back({{"trial", t}, {"train", idx.train}, {"test", idx.test}});
  }
  doc["trials"] = trials;
  return doc;
}

std::string format_percent(const MetricSummary& s) {
  char mean[32];
  char se[32];
  std::snprintf(mean, sizeof mean, "%.2f", 100.0 * s.mean);
  std::snprintf(se, sizeof se, "%.3f", 100.0 * s.se);
  std::string se_text = se;
  if (se_text.rfind("0.", 0) == 0) se_text.erase(0, 1);
  return std::string(mean) + " (" + se_text + ")";
}

std::string format_table(std::span<const TrialReport> reports) {
  std::size_t name_width = 6;
  for (const auto& r : reports) name_width = std::max(name_width, r.method.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
  };
  constexpr std::size_t kCol = 16;
  out << pad("method", name_width) << "  " << pad("P", kCol) << pad("R", kCol) << "F1\n";
  for (const auto& r : reports) {
    out << pad(r.method, name_width) << "  " << pad(format_percent(r.precision), kCol)
        << pad(format_percent(r.recall), kCol) << format_percent(r.f1) << "\n";
  }
  return out.str();
}

}  // namespace nbnn
