#include <algorithm>
#include <numeric>
#include <vector>

#include <gtest/gtest.h>

#include "nbnn/errors.hpp"
#include "nbnn/neighbors.hpp"
#include "nbnn/random.hpp"

namespace {

using nbnn::LabeledDataset;

LabeledDataset line(std::vector<double> xs, std::vector<int> labels, int j = 2) {
  return LabeledDataset(std::move(xs), 1, std::move(labels), j);
}

nbnn::NeighborOrdering ordering_of(std::vector<std::size_t> order) {
  nbnn::NeighborOrdering o;
  o.distances.resize(order.size());
  std::iota(o.distances.begin(), o.distances.end(), 0.0);
  o.order = std::move(order);
  return o;
}

TEST(LabeledDataset, Validation) {
  EXPECT_THROW(LabeledDataset({1.0, 2.0}, 2, {1, 2}, 2), nbnn::DomainError);
  EXPECT_THROW(LabeledDataset({1.0, 2.0}, 1, {1, 3}, 2), nbnn::DomainError);
  EXPECT_THROW(LabeledDataset({1.0, std::nan("")}, 1, {1, 2}, 2), nbnn::DomainError);
  const LabeledDataset d({1.0, 2.0, 3.0}, 1, {1, 2, 2}, 2);
  EXPECT_EQ(d.class_count(1), 1u);
  EXPECT_EQ(d.class_count(2), 2u);
}

TEST(NeighborOrder, EquidistantTieBrokenByIndex) {
  const auto train = line({0.0, 2.0, 5.0}, {1, 1, 2});
  const double q[] = {1.0};
  const auto o = nbnn::neighbor_order(train, q);
  EXPECT_EQ(o.order, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(o.distances, (std::vector<double>{1.0, 1.0, 4.0}));
}

TEST(NeighborOrder, SelfDistanceFirst) {
  const auto train = line({3.0, -1.0, 7.0, 2.5}, {1, 1, 2, 2});
  const double q[] = {7.0};
  const auto o = nbnn::neighbor_order(train, q);
  EXPECT_EQ(o.order.front(), 2u);
  EXPECT_EQ(o.distances.front(), 0.0);
}

TEST(NeighborOrder, PythagoreanTriple) {
  const LabeledDataset train({0.0, 0.0, 3.0, 4.0}, 2, {1, 2}, 2);
  const double q[] = {0.0, 0.0};
  const auto o = nbnn::neighbor_order(train, q);
  EXPECT_EQ(o.distances, (std::vector<double>{0.0, 5.0}));
}

TEST(NeighborOrder, Errors) {
  const auto train = line({0.0, 1.0}, {1, 2});
  const double q2[] = {0.0, 0.0};
  EXPECT_THROW(nbnn::neighbor_order(train, q2), nbnn::DomainError);
  const LabeledDataset empty;
  const double q1[] = {0.0};
  EXPECT_THROW(nbnn::neighbor_order(empty, q1), nbnn::DomainError);
}

TEST(NeighborOrder, InvariantsAndShuffleInvariance) {
  nbnn::Rng rng(11);
  const std::size_t n = 200;
  std::vector<double> xs(n * 3);
  for (auto& v : xs) v = rng.normal();
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = 1 + static_cast<int>(i % 2);
  const LabeledDataset train(xs, 3, labels, 2);
  const double q[] = {0.1, -0.2, 0.3};
  const auto o = nbnn::neighbor_order(train, q);

  ASSERT_EQ(o.size(), n);
  EXPECT_TRUE(std::is_sorted(o.distances.begin(), o.distances.end()));
  auto sorted = o.order;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(std::span(perm));
  const auto shuffled = train.subset(perm);
  const auto o2 = nbnn::neighbor_order(shuffled, q);
  for (std::size_t r = 0; r < n; ++r) {
    EXPECT_EQ(perm[o2.order[r]], o.order[r]);
    EXPECT_EQ(o2.distances[r], o.distances[r]);
  }
}

TEST(CountToKthMinority, Examples) {
  const std::vector<int> labels{1, 2, 1, 2};
  const auto o = ordering_of({0, 1, 2, 3});
  EXPECT_EQ(nbnn::count_to_kth_minority(o, labels, 2, 1).n_obs, 2);
  EXPECT_EQ(nbnn::count_to_kth_minority(o, labels, 2, 2).n_obs, 4);
  const std::vector<int> all_min{2, 2, 2, 2};
  EXPECT_EQ(nbnn::count_to_kth_minority(o, all_min, 2, 3).n_obs, 3);
}

TEST(CountToKthMinority, CapacityError) {
  const std::vector<int> labels{1, 2, 1, 2};
  const auto o = ordering_of({0, 1, 2, 3});
  EXPECT_THROW(nbnn::count_to_kth_minority(o, labels, 2, 3), nbnn::CapacityError);
}

TEST(CountToKthMinority, StrictlyIncreasingAndAtLeastK) {
  nbnn::Rng rng(5);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 60;
    std::vector<int> labels(n);
    for (auto& l : labels) l = rng.uniform01() < 0.3 ? 2 : 1;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(std::span(order));
    const auto o = ordering_of(order);
    const auto n_min = std::count(labels.begin(), labels.end(), 2);
    std::int64_t prev = 0;
    for (std::int64_t k = 1; k <= n_min; ++k) {
      const auto s = nbnn::count_to_kth_minority(o, labels, 2, k);
      EXPECT_GE(s.n_obs, k);
      EXPECT_GT(s.n_obs, prev);
      bool prefix_all_minority = true;
      for (std::int64_t i = 0; i < k; ++i) prefix_all_minority &= labels[order[static_cast<std::size_t>(i)]] == 2;
      EXPECT_EQ(s.n_obs == k, prefix_all_minority);
      prev = s.n_obs;
    }
  }
}

}  // namespace
