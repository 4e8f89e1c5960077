#pragma once

// Brute-force evidence pair for a two-class training set: explicit distance
// sort and direct exact summation of the negative binomial pmf. Test-only.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "exact_negbin.hpp"

namespace nbnn::testing {

struct OraclePoint {
  std::vector<double> x;
  bool minority = false;
};

struct OracleEvidence {
  double e1 = 0.5;
  double e2 = 0.5;
  std::vector<double> e_per_k;
};

inline OracleEvidence oracle_evidence(const std::vector<OraclePoint>& train,
                                      const std::vector<double>& query, std::int64_t k_max) {
  const std::size_t n = train.size();
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0;
    for (std::size_t j = 0; j < query.size(); ++j) s += (train[i].x[j] - query[j]) * (train[i].x[j] - query[j]);
    d2[i] = s;
  }
  // Selection sort on (squared distance, index).
  std::vector<std::size_t> order;
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t best = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!used[i] && (best == n || d2[i] < d2[best])) best = i;
    }
    used[best] = true;
    order.push_back(best);
  }
  std::int64_t n_min = 0;
  for (const auto& p : train) n_min += p.minority ? 1 : 0;
  const std::int64_t total = static_cast<std::int64_t>(n);

  OracleEvidence out;
  double lo = 0.5;
  double hi = 0.5;
  for (std::int64_t k = 1; k <= k_max; ++k) {
    std::int64_t seen = 0;
    std::int64_t n_obs = 0;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if (train[order[pos]].minority && ++seen == k) {
        n_obs = static_cast<std::int64_t>(pos) + 1;
        break;
      }
    }
    cpp_rational below = 0;
    for (std::int64_t m = k; m < n_obs; ++m) below += exact_pmf(k, n_min, total, m);
    const double e = to_double(below + exact_pmf(k, n_min, total, n_obs) / 2);
    out.e_per_k.push_back(e);
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  out.e1 = hi;
  out.e2 = 1.0 - lo;
  return out;
}

}  // namespace nbnn::testing
