#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nbnn/binary_classifier.hpp"
#include "nbnn/dataset.hpp"
#include "nbnn/neighbors.hpp"

namespace nbnn {

/// Outcome of one reduction round.
struct WinnerSet {
  std::vector<int> active;          // classes taking part in the round
  std::vector<int> classes;         // winners, ascending id
  std::map<int, double> evidences;  // evidence in favour of each examined class
};

struct MulticlassDecision {
  int label = 0;
  std::vector<WinnerSet> rounds;
};

/// Argmax of the recorded evidence; ties go to the smaller class id.
/// Throws DomainError on an empty map.
int resolve_by_max_evidence(const std::map<int, double>& per_class_evidence);

/// Ordered one-vs-one reduction: the smallest active class plays every larger
/// one and the set of classes beating it recurses.
MulticlassDecision ovo_plus_decision(const LabeledDataset& train, const NeighborOrdering& ordering,
                                     std::int64_t k_max);

/// One-vs-rest reduction: each active class plays the pooled remainder; the
/// set of winners recurses, falling back to maximum evidence when it does not
/// shrink or is empty.
MulticlassDecision ovr_plus_decision(const LabeledDataset& train, const NeighborOrdering& ordering,
                                     std::int64_t k_max);

int classify_ovo_plus(const LabeledDataset& train, std::span<const double> query,
                      std::int64_t k_max = kDefaultKMax);
int classify_ovr_plus(const LabeledDataset& train, std::span<const double> query,
                      std::int64_t k_max = kDefaultKMax);

inline int classify_ovo_plus(const LabeledDataset& train, const NeighborOrdering& ordering,
                             std::int64_t k_max = kDefaultKMax) {
  return ovo_plus_decision(train, ordering, k_max).label;
}
inline int classify_ovr_plus(const LabeledDataset& train, const NeighborOrdering& ordering,
                             std::int64_t k_max = kDefaultKMax) {
  return ovr_plus_decision(train, ordering, k_max).label;
}

}  // namespace nbnn
