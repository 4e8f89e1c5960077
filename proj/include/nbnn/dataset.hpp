#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nbnn {

/// Feature matrix (row-major, n x p) with integer class labels in 1..J.
/// Immutable after construction.
class LabeledDataset {
 public:
  LabeledDataset() = default;

  /// Throws DomainError when shapes disagree, a value is non-finite or a
  /// label falls outside 1..num_classes.
  LabeledDataset(std::vector<double> values, std::size_t dim, std::vector<int> labels,
                 int num_classes);

  std::size_t size() const noexcept { return labels_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  bool empty() const noexcept { return labels_.empty(); }
  int num_classes() const noexcept { return num_classes_; }

  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * dim_, dim_};
  }
  int label(std::size_t i) const { return labels_[i]; }
  std::span<const int> labels() const noexcept { return labels_; }
  std::span<const double> values() const noexcept { return values_; }

  /// Number of rows carrying class id c (1-based).
  std::size_t class_count(int c) const { return class_counts_.at(static_cast<std::size_t>(c - 1)); }
  std::span<const std::size_t> class_counts() const noexcept { return class_counts_; }

  /// Rows listed in `rows`, in that order. Keeps the class count J.
  LabeledDataset subset(std::span<const std::size_t> rows) const;

 private:
  std::vector<double> values_;
  std::size_t dim_ = 0;
  std::vector<int> labels_;
  int num_classes_ = 0;
  std::vector<std::size_t> class_counts_;
};

}  // namespace nbnn
