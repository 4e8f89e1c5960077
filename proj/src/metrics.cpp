#include "nbnn/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nbnn/errors.hpp"

namespace nbnn {

ConfusionMatrix::ConfusionMatrix(int num_classes)
    : j_(num_classes),
      cells_(num_classes > 0 ? static_cast<std::size_t>(num_classes * num_classes) : 0, 0) {
  if (num_classes < 1) throw DomainError("confusion matrix needs J >= 1");
}

std::size_t ConfusionMatrix::index(int actual, int predicted) const {
  if (actual < 1 || actual > j_ || predicted < 1 || predicted > j_) {
    throw DomainError("class pair (" + std::to_string(actual) + ", " + std::to_string(predicted) +
                      ") outside 1.." + std::to_string(j_));
  }
  return static_cast<std::size_t>((actual - 1) * j_ + (predicted - 1));
}

void ConfusionMatrix::add(int actual, int predicted, std::int64_t count) {
  if (count < 0) throw DomainError("confusion counts must be non-negative");
  cells_[index(actual, predicted)] += count;
  total_ += count;
}

std::int64_t ConfusionMatrix::row_total(int actual) const {
  std::int64_t s = 0;
  for (int c = 1; c <= j_; ++c) s += at(actual, c);
  return s;
}

std::int64_t ConfusionMatrix::column_total(int predicted) const {
  std::int64_t s = 0;
  for (int r = 1; r <= j_; ++r) s += at(r, predicted);
  return s;
}

ConfusionMatrix confusion(std::span<const int> actual, std::span<const int> predicted,
                          int num_classes) {
  if (actual.size() != predicted.size()) {
    throw DomainError("actual has " + std::to_string(actual.size()) + " labels, predicted has " +
                      std::to_string(predicted.size()));
  }
  ConfusionMatrix cm(num_classes);
  for (std::size_t t = 0; t < actual.size(); ++t) cm.add(actual[t], predicted[t]);
  return cm;
}

PrfReport prf(const ConfusionMatrix& cm) {
  PrfReport out;
  const int j = cm.num_classes();
  out.per_class.resize(static_cast<std::size_t>(j));
  for (int c = 1; c <= j; ++c) {
    const double hit = static_cast<double>(cm.at(c, c));
    const std::int64_t n_i0 = cm.row_total(c);
    const std::int64_t n_0i = cm.column_total(c);
    Prf& v = out.per_class[static_cast<std::size_t>(c - 1)];
    v.precision = n_0i > 0 ? hit / static_cast<double>(n_0i) : 0.0;
    v.recall = n_i0 > 0 ? hit / static_cast<double>(n_i0) : 0.0;
    v.f1 = n_i0 + n_0i > 0 ? 2.0 * hit / static_cast<double>(n_i0 + n_0i) : 0.0;
    out.macro.precision += v.precision;
    out.macro.recall += v.recall;
    out.macro.f1 += v.f1;
  }
  out.macro.precision /= j;
  out.macro.recall /= j;
  out.macro.f1 /= j;
  return out;
}

namespace {

MetricSummary summarize(const std::vector<double>& xs) {
  MetricSummary s;
  const double n = static_cast<double>(xs.size());
  for (const double x : xs) s.mean += x;
  s.mean /= n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (const double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.se = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
  }
  return s;
}

}  // namespace

TrialReport aggregate_trials(std::span<const PrfReport> reports, std::string method) {
  if (reports.empty()) throw DomainError("cannot aggregate zero trials");
  TrialReport out;
  out.method = std::move(method);
  std::vector<double> p, r, f;
  for (const auto& rep : reports) {
    out.trials.push_back(rep.macro);
    p.push_back(rep.macro.precision);
    r.push_back(rep.macro.recall);
    f.push_back(rep.macro.f1);
  }
  out.precision = summarize(p);
  out.recall = summarize(r);
  out.f1 = summarize(f);
  return out;
}

std::map<std::string, double> efficiency_scores(const std::map<std::string, double>& values) {
  if (values.empty()) throw DomainError("efficiency scores need at least one method");
  double best = 0.0;
  for (const auto& [name, v] : values) {
    if (!(v > 0.0)) throw DomainError("efficiency input for '" + name + "' must be positive");
    best = std::max(best, v);
  }
  std::map<std::string, double> out;
  for (const auto& [name, v] : values) out[name] = v / best;
  return out;
}

}  // namespace nbnn
