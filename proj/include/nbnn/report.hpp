#pragma once

#include <optional>
#include <span>
#include <string>

#include <json.hpp>

#include "nbnn/benchmark.hpp"
#include "nbnn/data_io.hpp"
#include "nbnn/metrics.hpp"
#include "nbnn/simulation.hpp"

namespace nbnn {

/// Version of every JSON document written by the tool.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const MetricSummary& s);
/// {name, trials, precision:{mean,se}, recall:{...}, f1:{...}}; values are
/// fractions in [0, 1] at full precision.
nlohmann::json to_json(const TrialReport& r);

nlohmann::json simulation_document(std::string_view design, std::optional<ScaleMinority> minority,
                                   const ExperimentConfig& cfg,
                                   std::span<const TrialReport> reports);

nlohmann::json benchmark_document(const LoadedDataset& input, const BenchmarkConfig& cfg,
                                  const BenchmarkResult& result);

/// Per-trial train/test row indices (0-based data rows of the CSV).
nlohmann::json split_manifest(const LoadedDataset& input, const SplitSpec& spec);

/// "74.59 (.053)": percent with two decimals, SE in percent with three.
std::string format_percent(const MetricSummary& s);

/// Aligned human-readable table, one row per method.
std::string format_table(std::span<const TrialReport> reports);

}  // namespace nbnn
