#include "nbnn/benchmark.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "nbnn/baselines.hpp"
#include "nbnn/errors.hpp"
#include "nbnn/multiclass.hpp"
#include "nbnn/neighbors.hpp"
#include "nbnn/parallel.hpp"
#include "nbnn/random.hpp"

namespace nbnn {

std::vector<Method> default_benchmark_methods(int num_classes) {
  if (num_classes == 2) return {Method::proposed, Method::knn, Method::wnn};
  return {Method::ovo_plus, Method::ovr_plus, Method::knn, Method::wnn};
}

BenchmarkResult run_benchmark(const LabeledDataset& data, const BenchmarkConfig& cfg) {
  const int j = data.num_classes();
  if (j < 2) throw DomainError("benchmark needs at least two classes");
  if (cfg.split.trials < 1) throw DomainError("trials must be >= 1");
  if (cfg.k_max < 1) throw DomainError("k_max must be >= 1");

  BenchmarkResult result;
  result.methods = cfg.methods.empty() ? default_benchmark_methods(j) : cfg.methods;
  for (const Method m : result.methods) {
    if (m == Method::bayes) throw DomainError("the Bayes oracle needs known class densities");
    if (m == Method::proposed && j != 2) {
      throw DomainError("'proposed' is the two-class rule; use ovo_plus or ovr_plus for " +
                        std::to_string(j) + " classes");
    }
  }

  {
    const SplitIndices first = balanced_split_indices(data, cfg.split, 0);
    result.train_counts.assign(static_cast<std::size_t>(j), 0);
    result.test_counts.assign(static_cast<std::size_t>(j), 0);
    for (const auto i : first.train) ++result.train_counts[static_cast<std::size_t>(data.label(i) - 1)];
    for (const auto i : first.test) ++result.test_counts[static_cast<std::size_t>(data.label(i) - 1)];
  }

  const auto trials = static_cast<std::size_t>(cfg.split.trials);
  const std::size_t n_methods = result.methods.size();
  std::vector<std::vector<PrfReport>> per_trial(trials);

  parallel_for(trials, cfg.jobs, [&](std::size_t t) {
    const TrainTest raw = balanced_split(data, cfg.split, static_cast<int>(t));
    const std::vector<LabeledDataset> others{raw.test};
    const Standardized z = standardize(raw.train, others);
    const LabeledDataset& train = z.train;
    const LabeledDataset& test = z.others.front();

    std::size_t smallest = train.size();
    for (int c = 1; c <= j; ++c) smallest = std::min(smallest, train.class_count(c));
    const std::uint64_t cv_seed = derive_seed(
        cfg.split.seed, {static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(Stream::cv_folds)});

    std::vector<std::int64_t> chosen_k(n_methods, 0);
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      const Method m = result.methods[mi];
      if (m != Method::knn && m != Method::wnn) continue;
      KnnConfig kc;
      kc.weighting = m == Method::knn ? Weighting::uniform : Weighting::inverse_class_size;
      kc.cv_folds = std::max(2, std::min<int>(cfg.cv_folds, static_cast<int>(smallest)));
      kc.k_grid = cfg.k_grid;
      chosen_k[mi] = select_k_cv(train, kc, cv_seed);
    }

    std::optional<BinaryEvidenceClassifier> binary;
    if (std::find(result.methods.begin(), result.methods.end(), Method::proposed) != result.methods.end()) {
      binary.emplace(train, cfg.k_max);
    }

    std::vector<std::vector<int>> predicted(n_methods);
    for (std::size_t q = 0; q < test.size(); ++q) {
      const NeighborOrdering ord = neighbor_order(train, test.row(q));
      for (std::size_t mi = 0; mi < n_methods; ++mi) {
        int label = 0;
        switch (result.methods[mi]) {
          case Method::proposed: label = binary->classify(ord); break;
          case Method::ovo_plus: label = classify_ovo_plus(train, ord, cfg.k_max); break;
          case Method::ovr_plus: label = classify_ovr_plus(train, ord, cfg.k_max); break;
          case Method::knn: label = knn_vote(train, ord, chosen_k[mi], Weighting::uniform); break;
          case Method::wnn: label = knn_vote(train, ord, chosen_k[mi], Weighting::inverse_class_size); break;
          case Method::bayes: break;
        }
        predicted[mi].push_back(label);
      }
    }
    for (std::size_t mi = 0; mi < n_methods; ++mi) {
      per_trial[t].push_back(prf(confusion(test.labels(), predicted[mi], j)));
    }
  });

  std::map<std::string, double> p_means, r_means, f_means;
  for (std::size_t mi = 0; mi < n_methods; ++mi) {
    std::vector<PrfReport> series;
    series.reserve(trials);
    for (const auto& row : per_trial) series.push_back(row[mi]);
    const std::string name(method_name(result.methods[mi]));
    result.reports.push_back(aggregate_trials(series, name));
    p_means[name] = result.reports.back().precision.mean;
    r_means[name] = result.reports.back().recall.mean;
    f_means[name] = result.reports.back().f1.mean;
  }
  result.efficiency["precision"] = efficiency_scores(p_means);
  result.efficiency["recall"] = efficiency_scores(r_means);
  result.efficiency["f1"] = efficiency_scores(f_means);
  return result;
}

}  // namespace nbnn
