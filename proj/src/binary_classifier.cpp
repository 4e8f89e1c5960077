#include "nbnn/binary_classifier.hpp"

#include <algorithm>
#include <string>

#include "nbnn/errors.hpp"
#include "nbnn/negbin.hpp"

namespace nbnn {

EvidencePair sweep_evidence(const NeighborOrdering& ordering, std::span<const Role> roles,
                            double p0, std::int64_t k_max, bool keep_trace) {
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  EvidencePair out;
  double e_min = 0.5;
  double e_max = 0.5;
  std::int64_t position = 0;
  std::int64_t found = 0;
  for (const std::size_t idx : ordering.order) {
    const Role role = roles[idx];
    if (role == Role::excluded) continue;
    ++position;
    if (role != Role::minority) continue;
    ++found;
    const double e = adjusted_pvalue(NegBinParams(found, p0), position);
    e_min = std::min(e_min, e);
    e_max = std::max(e_max, e);
    if (keep_trace) out.per_k.push_back({found, position, e});
    if (found == k_max) break;
  }
  if (found < k_max) {
    throw CapacityError("ordering exhausted after " + std::to_string(found) +
                        " minority neighbours, k_max = " + std::to_string(k_max));
  }
  out.e1 = e_max;
  out.e2 = 1.0 - e_min;
  return out;
}

namespace {

std::size_t group_count(const LabeledDataset& train, std::span<const int> group) {
  std::size_t n = 0;
  for (const int c : group) n += train.class_count(c);
  return n;
}

int lowest_id(std::span<const int> group) { return *std::min_element(group.begin(), group.end()); }

}  // namespace

ContestResult contest(const LabeledDataset& train, const NeighborOrdering& ordering,
                      std::span<const int> first, std::span<const int> second,
                      std::int64_t k_max, bool keep_trace) {
  if (first.empty() || second.empty()) throw DomainError("contest groups must be non-empty");
  const std::size_t n_first = group_count(train, first);
  const std::size_t n_second = group_count(train, second);
  if (n_first == 0 || n_second == 0) throw DomainError("contest group has no training rows");

  ContestResult out;
  out.first_is_minority =
      n_first < n_second || (n_first == n_second && lowest_id(first) > lowest_id(second));
  const std::size_t n_min = out.first_is_minority ? n_first : n_second;
  const double p0 = static_cast<double>(n_min) / static_cast<double>(n_first + n_second);

  std::vector<Role> class_role(static_cast<std::size_t>(train.num_classes()) + 1, Role::excluded);
  for (const int c : first) {
    class_role[static_cast<std::size_t>(c)] = out.first_is_minority ? Role::minority : Role::majority;
  }
  for (const int c : second) {
    class_role[static_cast<std::size_t>(c)] = out.first_is_minority ? Role::majority : Role::minority;
  }
  std::vector<Role> roles(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    roles[i] = class_role[static_cast<std::size_t>(train.label(i))];
  }

  const std::int64_t k_eff = std::min<std::int64_t>(k_max, static_cast<std::int64_t>(n_min));
  out.evidence = sweep_evidence(ordering, roles, p0, k_eff, keep_trace);
  const bool minority_wins = decide(out.evidence) == BinaryOutcome::minority;
  out.first_wins = minority_wins == out.first_is_minority;
  out.first_evidence = out.first_is_minority ? out.evidence.e2 : out.evidence.e1;
  out.second_evidence = out.first_is_minority ? out.evidence.e1 : out.evidence.e2;
  return out;
}

BinaryEvidenceClassifier::BinaryEvidenceClassifier(LabeledDataset train, std::int64_t k_max,
                                                   bool keep_trace)
    : train_(std::move(train)), k_max_config_(k_max), keep_trace_(keep_trace) {
  if (train_.num_classes() != 2) {
    throw DomainError("binary classifier needs exactly 2 classes, got " +
                      std::to_string(train_.num_classes()));
  }
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  const std::size_t n1 = train_.class_count(1);
  const std::size_t n2 = train_.class_count(2);
  if (n1 == 0 || n2 == 0) throw DomainError("binary classifier needs both classes non-empty");

  majority_ = n2 > n1 ? 2 : 1;
  minority_ = 3 - majority_;
  const std::size_t n_min = train_.class_count(minority_);
  p0_ = static_cast<double>(n_min) / static_cast<double>(n1 + n2);
  k_max_eff_ = std::min<std::int64_t>(k_max, static_cast<std::int64_t>(n_min));

  roles_.resize(train_.size());
  for (std::size_t i = 0; i < train_.size(); ++i) {
    roles_[i] = train_.label(i) == minority_ ? Role::minority : Role::majority;
  }
}

EvidencePair BinaryEvidenceClassifier::evidence(std::span<const double> query) const {
  return evidence(neighbor_order(train_, query));
}

EvidencePair BinaryEvidenceClassifier::evidence(const NeighborOrdering& ordering) const {
  return sweep_evidence(ordering, roles_, p0_, k_max_eff_, keep_trace_);
}

int BinaryEvidenceClassifier::classify(std::span<const double> query) const {
  return classify(neighbor_order(train_, query));
}

int BinaryEvidenceClassifier::classify(const NeighborOrdering& ordering) const {
  return decide(evidence(ordering)) == BinaryOutcome::minority ? minority_ : majority_;
}

BinaryEvidenceClassifier fit_binary(LabeledDataset train, std::int64_t k_max) {
  return BinaryEvidenceClassifier(std::move(train), k_max);
}

}  // namespace nbnn
