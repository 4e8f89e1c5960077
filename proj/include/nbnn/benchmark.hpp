#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nbnn/binary_classifier.hpp"
#include "nbnn/data_io.hpp"
#include "nbnn/dataset.hpp"
#include "nbnn/metrics.hpp"
#include "nbnn/simulation.hpp"

namespace nbnn {

struct BenchmarkConfig {
  SplitSpec split;
  std::vector<Method> methods;  // empty: default_benchmark_methods(J)
  std::int64_t k_max = kDefaultKMax;
  int jobs = 1;
  int cv_folds = 5;
  std::vector<int> k_grid = default_k_grid();
};

/// {proposed, knn, wnn} for two classes, {ovo_plus, ovr_plus, knn, wnn} otherwise.
std::vector<Method> default_benchmark_methods(int num_classes);

struct BenchmarkResult {
  std::vector<Method> methods;
  std::vector<TrialReport> reports;  // one per method, same order
  std::vector<std::size_t> train_counts;  // per class, identical in every trial
  std::vector<std::size_t> test_counts;
  /// metric name ("precision", "recall", "f1") -> method -> efficiency
  std::map<std::string, std::map<std::string, double>> efficiency;
};

/// Repeated random partitioning: per trial, split, standardize with training
/// statistics, pick k for the k-NN baselines by cross-validation on the
/// training part, and score every method on the balanced test part.
BenchmarkResult run_benchmark(const LabeledDataset& data, const BenchmarkConfig& cfg);

}  // namespace nbnn
