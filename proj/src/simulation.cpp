#include "nbnn/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nbnn/data_io.hpp"
#include "nbnn/errors.hpp"
#include "nbnn/neighbors.hpp"
#include "nbnn/parallel.hpp"
#include "nbnn/random.hpp"

namespace nbnn {

std::vector<std::size_t> mixture_counts(std::span<const double> proportions, std::size_t n) {
  if (proportions.empty()) throw DomainError("no class proportions given");
  double sum = 0.0;
  std::size_t largest = 0;
  for (std::size_t c = 0; c < proportions.size(); ++c) {
    if (!(proportions[c] > 0.0)) throw DomainError("class proportions must be positive");
    sum += proportions[c];
    if (proportions[c] > proportions[largest]) largest = c;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("class proportions must sum to 1");
  std::vector<std::size_t> counts(proportions.size(), 0);
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < proportions.size(); ++c) {
    if (c == largest) continue;
    counts[c] = static_cast<std::size_t>(round_half_even(proportions[c] * static_cast<double>(n)));
    assigned += counts[c];
  }
  if (assigned > n) throw DomainError("class proportions exceed the sample size");
  counts[largest] = n - assigned;
  return counts;
}

LabeledDataset sample_mixture(std::span<const GaussianClassSpec> specs, std::size_t n,
                              std::span<const double> proportions, std::uint64_t seed,
                              std::uint64_t stream) {
  if (specs.empty() || specs.size() != proportions.size()) {
    throw DomainError("need one proportion per Gaussian class");
  }
  const std::size_t dim = specs.front().mean.size();
  for (const auto& s : specs) {
    if (s.mean.size() != dim || dim == 0) throw DomainError("Gaussian classes differ in dimension");
    if (!(s.variance > 0.0)) throw DomainError("Gaussian variance must be positive");
  }
  const auto counts = mixture_counts(proportions, n);
  Rng rng(derive_seed(seed, {stream}));
  std::vector<double> values;
  values.reserve(n * dim);
  std::vector<int> labels;
  labels.reserve(n);
  for (std::size_t c = 0; c < specs.size(); ++c) {
    const double scale = std::sqrt(specs[c].variance);
    for (std::size_t i = 0; i < counts[c]; ++i) {
      for (std::size_t j = 0; j < dim; ++j) values.push_back(specs[c].mean[j] + scale * rng.normal());
      labels.push_back(static_cast<int>(c) + 1);
    }
  }
  return LabeledDataset(std::move(values), dim, std::move(labels), static_cast<int>(specs.size()));
}

int bayes_classify(std::span<const GaussianClassSpec> specs, std::span<const double> query) {
  int best = 0;
  double best_score = -INFINITY;
  for (std::size_t c = 0; c < specs.size(); ++c) {
    const auto& s = specs[c];
    if (s.mean.size() != query.size()) throw DomainError("query dimension mismatch");
    double sq = 0.0;
    for (std::size_t j = 0; j < query.size(); ++j) {
      const double d = query[j] - s.mean[j];
      sq += d * d;
    }
    const double score = std::log(s.prior) - 0.5 * sq / s.variance -
                         0.5 * static_cast<double>(query.size()) *
                             std::log(2.0 * std::numbers::pi * s.variance);
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(c) + 1;
    }
  }
  return best;
}

namespace {

constexpr Method kAllMethods[] = {Method::proposed, Method::knn,      Method::wnn,
                                  Method::bayes,    Method::ovo_plus, Method::ovr_plus};

}  // namespace

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::proposed: return "proposed";
    case Method::knn: return "knn";
    case Method::wnn: return "wnn";
    case Method::bayes: return "bayes";
    case Method::ovo_plus: return "ovo_plus";
    case Method::ovr_plus: return "ovr_plus";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (const Method m : kAllMethods) {
    if (method_name(m) == name) return m;
  }
  std::string valid;
  for (const Method m : kAllMethods) {
    if (!valid.empty()) valid += ", ";
    valid += method_name(m);
  }
  throw DomainError("unknown method '" + std::string(name) + "'; valid methods: " + valid);
}

std::vector<Method> parse_methods(std::string_view comma_list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    const auto end = std::min(comma_list.find(',', start), comma_list.size());
    const auto item = comma_list.substr(start, end - start);
    if (!item.empty()) {
      const Method m = parse_method(item);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    start = end + 1;
  }
  if (out.empty()) throw DomainError("no methods requested");
  return out;
}

std::vector<GaussianClassSpec> location_design() {
  return {{{0.0, 0.0}, 1.0, 0.5}, {{1.0, 1.0}, 1.0, 0.5}};
}

std::vector<GaussianClassSpec> scale_design(ScaleMinority minority) {
  const GaussianClassSpec narrow{{0.0, 0.0}, 1.0, 0.5};
  const GaussianClassSpec wide{{0.0, 0.0}, 2.0, 0.5};
  if (minority == ScaleMinority::narrow) return {wide, narrow};
  return {narrow, wide};
}

std::vector<TrialReport> run_experiment(std::span<const GaussianClassSpec> design,
                                        const ExperimentConfig& cfg) {
  if (design.size() != 2) throw DomainError("simulation designs have exactly two classes");
  if (!(cfg.alpha > 0.0 && cfg.alpha <= 0.5)) throw DomainError("alpha must lie in (0, 0.5]");
  if (cfg.trials < 1) throw DomainError("trials must be >= 1");
  if (cfg.methods.empty()) throw DomainError("no methods requested");
  bool needs_neighbors = false;
  for (const Method m : cfg.methods) {
    if (m == Method::ovo_plus || m == Method::ovr_plus) {
      throw DomainError("method '" + std::string(method_name(m)) +
                        "' is not available in two-class simulations; use 'proposed'");
    }
    needs_neighbors = needs_neighbors || m != Method::bayes;
  }

  const std::vector<double> train_mix{1.0 - cfg.alpha, cfg.alpha};
  const std::vector<double> test_mix{0.5, 0.5};
  const auto trials = static_cast<std::size_t>(cfg.trials);
  // per_trial[t][method] = macro report of trial t
  std::vector<std::vector<PrfReport>> per_trial(trials);

  parallel_for(trials, cfg.jobs, [&](std::size_t t) {
    const std::uint64_t trial_seed = derive_seed(cfg.seed, {static_cast<std::uint64_t>(t)});
    const LabeledDataset test = sample_mixture(design, cfg.test_size, test_mix, trial_seed,
                                               static_cast<std::uint64_t>(Stream::test_sample));
    std::vector<std::vector<int>> predicted(cfg.methods.size());
    for (auto& p : predicted) p.reserve(test.size());

    if (needs_neighbors) {
      const LabeledDataset train = sample_mixture(design, cfg.train_size, train_mix, trial_seed,
                                                  static_cast<std::uint64_t>(Stream::train_sample));
      const BinaryEvidenceClassifier clf(train, cfg.k_max);
      std::vector<std::int64_t> chosen_k(cfg.methods.size(), 0);
      for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
        const Method m = cfg.methods[mi];
        if (m != Method::knn && m != Method::wnn) continue;
        KnnConfig kc;
        kc.weighting = m == Method::knn ? Weighting::uniform : Weighting::inverse_class_size;
        kc.cv_folds = cfg.cv_folds;
        kc.k_grid = cfg.k_grid;
        chosen_k[mi] = select_k_cv(train, kc, derive_seed(trial_seed, {static_cast<std::uint64_t>(Stream::cv_folds)}));
      }
      for (std::size_t q = 0; q < test.size(); ++q) {
        const NeighborOrdering ord = neighbor_order(train, test.row(q));
        for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
          switch (cfg.methods[mi]) {
            case Method::proposed: predicted[mi].push_back(clf.classify(ord)); break;
            case Method::knn: predicted[mi].push_back(knn_vote(train, ord, chosen_k[mi], Weighting::uniform)); break;
            case Method::wnn: predicted[mi].push_back(knn_vote(train, ord, chosen_k[mi], Weighting::inverse_class_size)); break;
            case Method::bayes: predicted[mi].push_back(bayes_classify(design, test.row(q))); break;
            default: break;
          }
        }
      }
    } else {
      for (std::size_t q = 0; q < test.size(); ++q) {
        const int label = bayes_classify(design, test.row(q));
        for (auto& p : predicted) p.push_back(label);
      }
    }

    auto& reports = per_trial[t];
    for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
      reports.push_back(prf(confusion(test.labels(), predicted[mi], 2)));
    }
  });

  std::vector<TrialReport> out;
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    std::vector<PrfReport> series;
    series.reserve(trials);
    for (const auto& row : per_trial) series.push_back(row[mi]);
    out.push_back(aggregate_trials(series, std::string(method_name(cfg.methods[mi]))));
  }
  return out;
}

std::vector<TrialReport> run_location_experiment(const ExperimentConfig& cfg) {
  const auto design = location_design();
  return run_experiment(design, cfg);
}

std::vector<TrialReport> run_scale_experiment(const ExperimentConfig& cfg, ScaleMinority minority) {
  const auto design = scale_design(minority);
  return run_experiment(design, cfg);
}

}  // namespace nbnn
