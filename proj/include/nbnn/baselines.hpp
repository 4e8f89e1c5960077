#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nbnn/dataset.hpp"
#include "nbnn/neighbors.hpp"

namespace nbnn {

enum class Weighting {
  uniform,             // plain k-NN
  inverse_class_size,  // WNN: each neighbour of class i votes 1/n_i
};

std::vector<int> default_k_grid();  // odd values 1..31

struct KnnConfig {
  std::int64_t k = 1;
  Weighting weighting = Weighting::uniform;
  int cv_folds = 5;
  std::vector<int> k_grid = default_k_grid();
};

/// Vote among the first k entries of `ordering` (an ordering over `train`).
/// Vote ties go to the smaller class id; weighted votes are compared exactly.
int knn_vote(const LabeledDataset& train, const NeighborOrdering& ordering, std::int64_t k,
             Weighting weighting);

/// Throws DomainError if cfg.k is outside 1..train.size().
int knn_classify(const LabeledDataset& train, std::span<const double> query, const KnnConfig& cfg);

/// Picks the grid value with the best mean macro F1 over stratified folds.
/// Ties go to the smaller k. Folds are drawn from a stream seeded by `seed`.
std::int64_t select_k_cv(const LabeledDataset& train, const KnnConfig& cfg, std::uint64_t seed);

}  // namespace nbnn
