#include "nbnn/dataset.hpp"

#include <cmath>
#include <string>

#include "nbnn/errors.hpp"

namespace nbnn {

LabeledDataset::LabeledDataset(std::vector<double> values, std::size_t dim,
                               std::vector<int> labels, int num_classes)
    : values_(std::move(values)),
      dim_(dim),
      labels_(std::move(labels)),
      num_classes_(num_classes),
      class_counts_(num_classes > 0 ? static_cast<std::size_t>(num_classes) : 0, 0) {
  if (num_classes < 1) throw DomainError("dataset needs at least one class");
  if (dim == 0 && !labels_.empty()) throw DomainError("dataset rows must have dimension >= 1");
  if (values_.size() != labels_.size() * dim_) {
    throw DomainError("dataset holds " + std::to_string(values_.size()) + " values for " +
                      std::to_string(labels_.size()) + " rows of dimension " +
                      std::to_string(dim_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw DomainError("non-finite feature value in row " + std::to_string(i / dim_));
    }
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    const int c = labels_[i];
    if (c < 1 || c > num_classes_) {
      throw DomainError("label " + std::to_string(c) + " in row " + std::to_string(i) +
                        " outside 1.." + std::to_string(num_classes_));
    }
    ++class_counts_[static_cast<std::size_t>(c - 1)];
  }
}

LabeledDataset LabeledDataset::subset(std::span<const std::size_t> rows) const {
  std::vector<double> values;
  values.reserve(rows.size() * dim_);
  std::vector<int> labels;
  labels.reserve(rows.size());
  for (const std::size_t r : rows) {
    if (r >= size()) throw DomainError("subset row " + std::to_string(r) + " out of range");
    const auto x = row(r);
    values.insert(values.end(), x.begin(), x.end());
    labels.push_back(labels_[r]);
  }
  return LabeledDataset(std::move(values), dim_, std::move(labels), num_classes_);
}

}  // namespace nbnn
