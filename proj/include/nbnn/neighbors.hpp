#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nbnn/dataset.hpp"

namespace nbnn {

/// Training indices sorted by ascending distance to a query. Equal distances
/// are ordered by ascending training index, so the order is a total order.
struct NeighborOrdering {
  std::vector<std::size_t> order;
  std::vector<double> distances;

  std::size_t size() const noexcept { return order.size(); }
};

struct EuclideanDistance {
  double operator()(std::span<const double> a, std::span<const double> b) const noexcept {
    double acc = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      const double d = a[j] - b[j];
      acc += d * d;
    }
    return std::sqrt(acc);
  }
};

/// Exact full sort of the training set by distance to `query`.
NeighborOrdering neighbor_order(const LabeledDataset& train, std::span<const double> query);

template <class Metric>
NeighborOrdering neighbor_order(const LabeledDataset& train, std::span<const double> query,
                                Metric metric);

/// N_k: the realized number of neighbours needed to reach k minority points.
struct MinorityCountStat {
  std::int64_t k = 0;
  std::int64_t n_obs = 0;
};

/// 1-based position in `ordering` of the k-th point whose label is `minority`.
/// Throws CapacityError if fewer than k such points exist.
MinorityCountStat count_to_kth_minority(const NeighborOrdering& ordering,
                                        std::span<const int> labels, int minority,
                                        std::int64_t k);

namespace detail {
void check_query(const LabeledDataset& train, std::span<const double> query);
void sort_ordering(NeighborOrdering& ordering);
}  // namespace detail

template <class Metric>
NeighborOrdering neighbor_order(const LabeledDataset& train, std::span<const double> query,
                                Metric metric) {
  detail::check_query(train, query);
  NeighborOrdering out;
  out.order.resize(train.size());
  out.distances.resize(train.size());
  for (std::size_t i = 0; i < train.size(); ++i) {
    out.order[i] = i;
    out.distances[i] = metric(train.row(i), query);
  }
  detail::sort_ordering(out);
  return out;
}

}  // namespace nbnn
