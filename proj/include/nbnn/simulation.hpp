#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nbnn/baselines.hpp"
#include "nbnn/binary_classifier.hpp"
#include "nbnn/dataset.hpp"
#include "nbnn/metrics.hpp"

namespace nbnn {

/// Isotropic Gaussian class: N(mean, variance * I) with a prior weight.
struct GaussianClassSpec {
  std::vector<double> mean;
  double variance = 1.0;
  double prior = 1.0;
};

/// Per-class counts round(p_c * n) (half to even); the class with the largest
/// proportion absorbs the remainder. Throws DomainError unless the
/// proportions are positive and sum to 1.
std::vector<std::size_t> mixture_counts(std::span<const double> proportions, std::size_t n);

/// Rows grouped by class (class 1 first). Deterministic in (seed, stream).
LabeledDataset sample_mixture(std::span<const GaussianClassSpec> specs, std::size_t n,
                              std::span<const double> proportions, std::uint64_t seed,
                              std::uint64_t stream);

/// argmax_c log(prior_c) + log N(query; mean_c, variance_c I); ties to the
/// smaller class id. Priors need not be normalized.
int bayes_classify(std::span<const GaussianClassSpec> specs, std::span<const double> query);

enum class Method { proposed, knn, wnn, bayes, ovo_plus, ovr_plus };

std::string_view method_name(Method m) noexcept;
/// Throws DomainError listing the valid names.
Method parse_method(std::string_view name);
std::vector<Method> parse_methods(std::string_view comma_list);

struct ExperimentConfig {
  double alpha = 0.1;  // minority share of the training sample, in (0, 0.5]
  int trials = 100;
  std::uint64_t seed = 0;
  std::vector<Method> methods{Method::proposed};
  std::int64_t k_max = kDefaultKMax;
  std::size_t train_size = 1000;
  std::size_t test_size = 1000;  // balanced between the two classes
  int jobs = 1;
  int cv_folds = 5;
  std::vector<int> k_grid = default_k_grid();
};

enum class ScaleMinority {
  narrow,  // minority N(0, I), majority N(0, 2I)
  wide,    // minority N(0, 2I), majority N(0, I)
};

/// Class 1 = majority N(0, I), class 2 = minority N((1,1), I). Equal priors.
std::vector<GaussianClassSpec> location_design();
/// Class 1 = majority, class 2 = minority, roles per `minority`. Equal priors.
std::vector<GaussianClassSpec> scale_design(ScaleMinority minority);

/// One report per requested method, in request order. Trials run on
/// cfg.jobs threads; the result does not depend on cfg.jobs.
std::vector<TrialReport> run_experiment(std::span<const GaussianClassSpec> design,
                                        const ExperimentConfig& cfg);

std::vector<TrialReport> run_location_experiment(const ExperimentConfig& cfg);
std::vector<TrialReport> run_scale_experiment(const ExperimentConfig& cfg, ScaleMinority minority);

}  // namespace nbnn
