#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace nbnn {

/// J x J allocation matrix: rows are actual classes, columns predictions.
/// Class ids are 1-based.
class ConfusionMatrix {
 public:
  explicit ConfusionMatrix(int num_classes);

  int num_classes() const noexcept { return j_; }
  std::int64_t at(int actual, int predicted) const {
    return cells_[index(actual, predicted)];
  }
  void add(int actual, int predicted, std::int64_t count = 1);

  std::int64_t row_total(int actual) const;       // n_i0
  std::int64_t column_total(int predicted) const;  // n_0i
  std::int64_t total() const noexcept { return total_; }  // n_00

 private:
  std::size_t index(int actual, int predicted) const;

  int j_;
  std::vector<std::int64_t> cells_;
  std::int64_t total_ = 0;
};

ConfusionMatrix confusion(std::span<const int> actual, std::span<const int> predicted,
                          int num_classes);

struct Prf {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct PrfReport {
  std::vector<Prf> per_class;  // index c-1 for class c
  Prf macro;
};

/// Per-class precision n_ii/n_0i, recall n_ii/n_i0 and F1 2n_ii/(n_i0+n_0i),
/// with macro averages. An empty margin yields 0 for the affected ratio.
PrfReport prf(const ConfusionMatrix& cm);

struct MetricSummary {
  double mean = 0.0;
  double se = 0.0;  // sample SD (n-1) / sqrt(trials); 0 for a single trial
};

struct TrialReport {
  std::string method;
  std::vector<Prf> trials;  // macro values per trial
  MetricSummary precision;
  MetricSummary recall;
  MetricSummary f1;
};

TrialReport aggregate_trials(std::span<const PrfReport> reports, std::string method);

/// Each value divided by the largest one. Throws DomainError on an empty map
/// or a non-positive value.
std::map<std::string, double> efficiency_scores(const std::map<std::string, double>& values);

}  // namespace nbnn
