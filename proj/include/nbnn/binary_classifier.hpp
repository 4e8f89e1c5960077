#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbnn/dataset.hpp"
#include "nbnn/neighbors.hpp"

namespace nbnn {

inline constexpr std::int64_t kDefaultKMax = 45;

/// Role of a training row in one two-group contest.
enum class Role : std::uint8_t { excluded, majority, minority };

struct EvidenceTrace {
  std::int64_t k = 0;
  std::int64_t n_obs = 0;
  double e = 0.0;
};

/// Strongest evidence for each side over k = 1..k_max.
/// e1 = max(0.5, max_k e_k) favours the majority side,
/// e2 = 1 - min(0.5, min_k e_k) favours the minority side.
struct EvidencePair {
  double e1 = 0.5;
  double e2 = 0.5;
  std::vector<EvidenceTrace> per_k;  // filled only when tracing is requested
};

enum class BinaryOutcome { majority, minority };

/// Minority wins only on strict e2 > e1; equality goes to the majority.
inline BinaryOutcome decide(const EvidencePair& ev) noexcept {
  return ev.e1 < ev.e2 ? BinaryOutcome::minority : BinaryOutcome::majority;
}

/// Walks `ordering` once, skipping excluded rows, and evaluates the mid-p
/// value of N_k for every k up to k_max. `roles` is indexed by training row.
/// Throws CapacityError if the ordering runs out of minority rows first.
EvidencePair sweep_evidence(const NeighborOrdering& ordering, std::span<const Role> roles,
                            double p0, std::int64_t k_max, bool keep_trace = false);

/// Result of classifying a query between two disjoint groups of classes.
struct ContestResult {
  EvidencePair evidence;
  bool first_is_minority = false;
  bool first_wins = false;
  double first_evidence = 0.5;   // evidence in favour of the first group
  double second_evidence = 0.5;  // evidence in favour of the second group
};

/// Two-group contest over a J-class training set. The group with fewer
/// training rows plays the minority; on equal counts the group whose lowest
/// class id is larger does. p0 and the k_max cap use the restricted counts.
ContestResult contest(const LabeledDataset& train, const NeighborOrdering& ordering,
                      std::span<const int> first, std::span<const int> second,
                      std::int64_t k_max, bool keep_trace = false);

/// The two-class evidence classifier. Class roles are assigned by training
/// count; with equal counts class 2 is the minority.
class BinaryEvidenceClassifier {
 public:
  /// Throws DomainError unless `train` has exactly two non-empty classes and
  /// k_max >= 1.
  explicit BinaryEvidenceClassifier(LabeledDataset train, std::int64_t k_max = kDefaultKMax,
                                    bool keep_trace = false);

  int majority_label() const noexcept { return majority_; }
  int minority_label() const noexcept { return minority_; }
  double p0() const noexcept { return p0_; }
  std::int64_t k_max_config() const noexcept { return k_max_config_; }
  std::int64_t k_max_eff() const noexcept { return k_max_eff_; }
  const LabeledDataset& train() const noexcept { return train_; }

  EvidencePair evidence(std::span<const double> query) const;
  /// Same as above for a precomputed ordering over train().
  EvidencePair evidence(const NeighborOrdering& ordering) const;

  /// Predicted original class label.
  int classify(std::span<const double> query) const;
  int classify(const NeighborOrdering& ordering) const;

 private:
  LabeledDataset train_;
  int majority_ = 1;
  int minority_ = 2;
  double p0_ = 0.5;
  std::int64_t k_max_config_ = kDefaultKMax;
  std::int64_t k_max_eff_ = 1;
  bool keep_trace_ = false;
  std::vector<Role> roles_;
};

BinaryEvidenceClassifier fit_binary(LabeledDataset train, std::int64_t k_max = kDefaultKMax);

inline int classify_binary(const BinaryEvidenceClassifier& clf, std::span<const double> query) {
  return clf.classify(query);
}

}  // namespace nbnn
