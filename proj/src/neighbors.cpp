#include "nbnn/neighbors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "nbnn/errors.hpp"

namespace nbnn {
namespace detail {

void check_query(const LabeledDataset& train, std::span<const double> query) {
  if (train.empty()) throw DomainError("cannot order neighbours of an empty training set");
  if (query.size() != train.dim()) {
    throw DomainError("query has dimension " + std::to_string(query.size()) +
                      ", training data has " + std::to_string(train.dim()));
  }
}

void sort_ordering(NeighborOrdering& ordering) {
  const auto& dist = ordering.distances;
  std::vector<std::size_t> idx(dist.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return dist[a] < dist[b] || (dist[a] == dist[b] && a < b);
  });
  std::vector<double> sorted(dist.size());
  for (std::size_t i = 0; i < idx.size(); ++i) sorted[i] = dist[idx[i]];
  ordering.order = std::move(idx);
  ordering.distances = std::move(sorted);
}

}  // namespace detail

NeighborOrdering neighbor_order(const LabeledDataset& train, std::span<const double> query) {
  return neighbor_order(train, query, EuclideanDistance{});
}

MinorityCountStat count_to_kth_minority(const NeighborOrdering& ordering,
                                        std::span<const int> labels, int minority,
                                        std::int64_t k) {
  if (k < 1) throw DomainError("k must be >= 1");
  std::int64_t found = 0;
  for (std::size_t pos = 0; pos < ordering.order.size(); ++pos) {
    if (labels[ordering.order[pos]] == minority && ++found == k) {
      return {k, static_cast<std::int64_t>(pos) + 1};
    }
  }
  throw CapacityError("only " + std::to_string(found) + " points of class " +
                      std::to_string(minority) + " available, k = " + std::to_string(k));
}

}  // namespace nbnn
