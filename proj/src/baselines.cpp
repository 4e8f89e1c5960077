#include "nbnn/baselines.hpp"

#include <algorithm>
#include <string>

#include "nbnn/errors.hpp"
#include "nbnn/metrics.hpp"
#include "nbnn/random.hpp"

namespace nbnn {
namespace {

// Running vote tally along an ordering. Masses are count_c / n_c for WNN, so
// two classes are compared by cross-multiplying integers.
class VoteTally {
 public:
  VoteTally(const LabeledDataset& train, Weighting weighting)
      : train_(train), weighting_(weighting), votes_(static_cast<std::size_t>(train.num_classes()), 0) {}

  void add(int label) { ++votes_[static_cast<std::size_t>(label - 1)]; }

  int winner() const {
    int best = 1;
    for (int c = 2; c <= train_.num_classes(); ++c) {
      if (beats(c, best)) best = c;
    }
    return best;
  }

 private:
  bool beats(int a, int b) const {
    const auto va = votes_[static_cast<std::size_t>(a - 1)];
    const auto vb = votes_[static_cast<std::size_t>(b - 1)];
    if (weighting_ == Weighting::uniform) return va > vb;
    const auto na = train_.class_count(a);
    const auto nb = train_.class_count(b);
    return static_cast<std::uint64_t>(va) * nb > static_cast<std::uint64_t>(vb) * na;
  }

  const LabeledDataset& train_;
  Weighting weighting_;
  std::vector<std::size_t> votes_;
};

}  // namespace

std::vector<int> default_k_grid() {
  std::vector<int> grid;
  for (int k = 1; k <= 31; k += 2) grid.push_back(k);
  return grid;
}

int knn_vote(const LabeledDataset& train, const NeighborOrdering& ordering, std::int64_t k,
             Weighting weighting) {
  if (k < 1 || static_cast<std::size_t>(k) > ordering.size()) {
    throw DomainError("k = " + std::to_string(k) + " outside 1.." + std::to_string(ordering.size()));
  }
  VoteTally tally(train, weighting);
  for (std::int64_t i = 0; i < k; ++i) tally.add(train.label(ordering.order[static_cast<std::size_t>(i)]));
  return tally.winner();
}

int knn_classify(const LabeledDataset& train, std::span<const double> query, const KnnConfig& cfg) {
  if (cfg.k < 1 || static_cast<std::size_t>(cfg.k) > train.size()) {
    throw DomainError("k = " + std::to_string(cfg.k) + " outside 1.." + std::to_string(train.size()));
  }
  return knn_vote(train, neighbor_order(train, query), cfg.k, cfg.weighting);
}

std::int64_t select_k_cv(const LabeledDataset& train, const KnnConfig& cfg, std::uint64_t seed) {
  if (cfg.k_grid.empty()) throw DomainError("k grid is empty");
  if (cfg.cv_folds < 2) throw DomainError("cross-validation needs at least 2 folds");
  const auto folds = static_cast<std::size_t>(cfg.cv_folds);
  const int j = train.num_classes();
  for (int c = 1; c <= j; ++c) {
    if (train.class_count(c) < folds) {
      throw DomainError("class " + std::to_string(c) + " has " +
                        std::to_string(train.class_count(c)) + " rows, fewer than " +
                        std::to_string(folds) + " folds");
    }
  }
  std::vector<int> grid = cfg.k_grid;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  if (grid.front() < 1) throw DomainError("k grid values must be >= 1");

  // Stratified assignment: each class is shuffled and dealt round-robin.
  std::vector<std::size_t> fold_of(train.size());
  Rng rng(seed);
  for (int c = 1; c <= j; ++c) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < train.size(); ++i) {
      if (train.label(i) == c) rows.push_back(i);
    }
    rng.shuffle(std::span(rows));
    for (std::size_t p = 0; p < rows.size(); ++p) fold_of[rows[p]] = p % folds;
  }

  std::vector<double> score(grid.size(), 0.0);
  std::vector<bool> usable(grid.size(), true);
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> fit_rows, held_rows;
    for (std::size_t i = 0; i < train.size(); ++i) (fold_of[i] == f ? held_rows : fit_rows).push_back(i);
    const LabeledDataset fit = train.subset(fit_rows);
    std::vector<int> actual;
    std::vector<std::vector<int>> predicted(grid.size());
    for (const std::size_t h : held_rows) {
      actual.push_back(train.label(h));
      const NeighborOrdering ord = neighbor_order(fit, train.row(h));
      VoteTally tally(fit, cfg.weighting);
      std::size_t next = 0;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto k = static_cast<std::size_t>(grid[g]);
        if (k > ord.size()) {
          usable[g] = false;
          continue;
        }
        while (next < k) tally.add(fit.label(ord.order[next++]));
        predicted[g].push_back(tally.winner());
      }
    }
    for (std::size_t g = 0; g < grid.size(); ++g) {
      if (usable[g]) score[g] += prf(confusion(actual, predicted[g], j)).macro.f1;
    }
  }

  std::int64_t best_k = 0;
  double best = -1.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    if (!usable[g]) continue;
    const double mean = score[g] / static_cast<double>(folds);
    if (mean > best) {
      best = mean;
      best_k = grid[g];
    }
  }
  if (best_k == 0) throw DomainError("no k in the grid fits the cross-validation folds");
  return best_k;
}

}  // namespace nbnn
