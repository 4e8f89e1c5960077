#pragma once

#include <cstdint>

namespace nbnn {

/// Parameters of the null negative binomial law of N_k, the number of
/// neighbours that must be scanned to collect k minority points when each
/// neighbour is a minority point with probability p0.
class NegBinParams {
 public:
  /// Throws DomainError unless k >= 1 and 0 < p0 < 1.
  NegBinParams(std::int64_t k, double p0);

  std::int64_t k() const noexcept { return k_; }
  double p0() const noexcept { return p0_; }

 private:
  std::int64_t k_;
  double p0_;
};

/// Below this many terms (n - k) tail sums are accumulated directly in log
/// space; above it the regularized incomplete beta identity is used.
inline constexpr std::int64_t kDirectSumLimit = 64;

/// ln f_k(n), with f_k(n) = C(n-1, k-1) p0^k (1-p0)^(n-k), n >= k.
double log_pmf(const NegBinParams& params, std::int64_t n);

/// f_k(n) on the linear scale, clamped to [1e-300, 1].
double pmf(const NegBinParams& params, std::int64_t n);

/// P(N < n) = sum_{m=k}^{n-1} f_k(m). Exactly 0 at n == k.
double cdf_below(const NegBinParams& params, std::int64_t n);

/// P(N > n), evaluated as an upper tail (no 1 - x cancellation).
double cdf_above(const NegBinParams& params, std::int64_t n);

/// Mid-p value e = P(N < n_obs) + f_k(n_obs) / 2. Small values favour the
/// minority class, values above 1/2 favour the majority class.
double adjusted_pvalue(const NegBinParams& params, std::int64_t n_obs);

/// The complementary mid-p value P(N > n_obs) + f_k(n_obs) / 2, computed from
/// the upper tail. Equals 1 - adjusted_pvalue up to rounding.
double upper_adjusted_pvalue(const NegBinParams& params, std::int64_t n_obs);

}  // namespace nbnn
