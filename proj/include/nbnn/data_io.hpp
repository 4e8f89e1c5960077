#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nbnn/dataset.hpp"

namespace nbnn {

/// A CSV file loaded as a labelled dataset. Class ids are assigned by
/// descending class size (ties by first appearance); class_names[c-1] is the
/// original label string of class c.
struct LoadedDataset {
  LabeledDataset data;
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;
  std::string label_column;
};

/// Comma-separated, header row, UTF-8. Every column except `label_column`
/// must be numeric. Throws DataError with row/column context.
LoadedDataset load_csv(const std::filesystem::path& path, const std::string& label_column);

/// Feature rows for prediction. Columns are matched to `feature_names` by
/// name; `ignored_column` (typically the label) may be present and is
/// skipped. Any other extra or missing column is a DataError.
struct FeatureTable {
  std::vector<double> values;  // row-major
  std::size_t rows = 0;
  std::size_t dim = 0;
};
FeatureTable load_features_csv(const std::filesystem::path& path,
                               std::span<const std::string> feature_names,
                               const std::string& ignored_column);

/// Z-score parameters fitted on training data (SD with n-1 denominator).
/// Features with zero spread are dropped.
struct StandardizationParams {
  std::size_t input_dim = 0;
  std::vector<std::size_t> kept;
  std::vector<double> mean;  // per kept feature
  std::vector<double> sd;    // per kept feature
  std::vector<std::size_t> dropped;

  std::vector<double> transform_row(std::span<const double> row) const;
  LabeledDataset apply(const LabeledDataset& data) const;
};

/// Throws DomainError if the training set is empty or every feature is constant.
StandardizationParams fit_standardization(const LabeledDataset& train);

struct Standardized {
  LabeledDataset train;
  std::vector<LabeledDataset> others;
  StandardizationParams params;
};

/// Fits on `train` only and applies the same parameters to every dataset.
Standardized standardize(const LabeledDataset& train, std::span<const LabeledDataset> others);

struct SplitSpec {
  double minority_test_fraction = 0.25;
  std::uint64_t seed = 0;
  int trials = 1;
};

/// Row indices (ascending) of one train/test partition.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};

/// Round half to even.
std::int64_t round_half_even(double x);

/// m = round(fraction * smallest class size) rows of every class go to the
/// test set, the rest to training. Deterministic in (spec.seed, trial).
/// Throws DomainError when the smallest class has fewer than 4 rows, m == 0,
/// or the fraction is outside (0, 1).
SplitIndices balanced_split_indices(const LabeledDataset& data, const SplitSpec& spec, int trial);

struct TrainTest {
  LabeledDataset train;
  LabeledDataset test;
};
TrainTest balanced_split(const LabeledDataset& data, const SplitSpec& spec, int trial);

}  // namespace nbnn
