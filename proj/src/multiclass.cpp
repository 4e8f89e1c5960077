#include "nbnn/multiclass.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nbnn/errors.hpp"

namespace nbnn {
namespace {

std::vector<int> all_classes(const LabeledDataset& train, std::int64_t k_max) {
  if (train.num_classes() < 2) throw DomainError("multiclass reduction needs J >= 2");
  if (k_max < 1) throw DomainError("k_max must be >= 1");
  std::vector<int> classes(static_cast<std::size_t>(train.num_classes()));
  std::iota(classes.begin(), classes.end(), 1);
  for (const int c : classes) {
    if (train.class_count(c) == 0) {
      throw DomainError("class " + std::to_string(c) + " has no training rows");
    }
  }
  return classes;
}

}  // namespace

int resolve_by_max_evidence(const std::map<int, double>& per_class_evidence) {
  if (per_class_evidence.empty()) throw DomainError("no evidence to resolve");
  auto best = per_class_evidence.begin();
  for (auto it = std::next(best); it != per_class_evidence.end(); ++it) {
    if (it->second > best->second) best = it;
  }
  return best->first;
}

MulticlassDecision ovo_plus_decision(const LabeledDataset& train, const NeighborOrdering& ordering,
                                     std::int64_t k_max) {
  std::vector<int> active = all_classes(train, k_max);
  MulticlassDecision out;
  while (active.size() > 1) {
    std::stable_sort(active.begin(), active.end(), [&](int a, int b) {
      return train.class_count(a) > train.class_count(b);
    });
    const int smallest = active.back();
    WinnerSet round;
    round.active = active;
    double smallest_best = 0.5;
    for (std::size_t i = 0; i + 1 < active.size(); ++i) {
      const int larger = active[i];
      const ContestResult r = contest(train, ordering, std::span(&larger, 1),
                                      std::span(&smallest, 1), k_max);
      round.evidences[larger] = r.first_evidence;
      smallest_best = std::max(smallest_best, r.second_evidence);
      if (r.first_wins) round.classes.push_back(larger);
    }
    round.evidences[smallest] = smallest_best;
    std::sort(round.classes.begin(), round.classes.end());
    std::sort(round.active.begin(), round.active.end());
    std::vector<int> winners = round.classes;
    out.rounds.push_back(std::move(round));
    if (winners.empty()) {
      out.label = smallest;
      return out;
    }
    active = std::move(winners);
  }
  out.label = active.front();
  return out;
}

MulticlassDecision ovr_plus_decision(const LabeledDataset& train, const NeighborOrdering& ordering,
                                     std::int64_t k_max) {
  std::vector<int> active = all_classes(train, k_max);
  MulticlassDecision out;
  while (active.size() > 1) {
    WinnerSet round;
    round.active = active;
    for (const int candidate : active) {
      std::vector<int> rest;
      rest.reserve(active.size() - 1);
      for (const int c : active) {
        if (c != candidate) rest.push_back(c);
      }
      const ContestResult r = contest(train, ordering, std::span(&candidate, 1), rest, k_max);
      round.evidences[candidate] = r.first_evidence;
      if (r.first_wins) round.classes.push_back(candidate);
    }
    const std::vector<int> winners = round.classes;
    const std::map<int, double> evidences = round.evidences;
    out.rounds.push_back(std::move(round));
    if (winners.size() == 1) {
      out.label = winners.front();
      return out;
    }
    if (winners.empty() || winners.size() == active.size()) {
      out.label = resolve_by_max_evidence(evidences);
      return out;
    }
    active = winners;
  }
  out.label = active.front();
  return out;
}

int classify_ovo_plus(const LabeledDataset& train, std::span<const double> query,
                      std::int64_t k_max) {
  return classify_ovo_plus(train, neighbor_order(train, query), k_max);
}

int classify_ovr_plus(const LabeledDataset& train, std::span<const double> query,
                      std::int64_t k_max) {
  return classify_ovr_plus(train, neighbor_order(train, query), k_max);
}

}  // namespace nbnn
