#include "nbnn/negbin.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "nbnn/errors.hpp"

namespace nbnn {
namespace {

constexpr double kProbFloor = 1e-300;

double clamp_prob(double p) { return std::clamp(p, kProbFloor, 1.0); }

void require_support(const NegBinParams& params, std::int64_t n) {
  if (n < params.k()) {
    throw DomainError("negative binomial support starts at n = k = " + std::to_string(params.k()) +
                      ", got n = " + std::to_string(n));
  }
}

// ln C(n-1, k-1). Short products are summed exactly term by term; long ones go
// through the beta density, which avoids lgamma cancellation for large n.
double log_choose_nm1_km1(std::int64_t n, std::int64_t k) {
  const std::int64_t top = n - 1;
  const std::int64_t m = std::min(k - 1, n - k);
  if (m <= kDirectSumLimit) {
    double acc = 0.0;
    for (std::int64_t i = 1; i <= m; ++i) {
      acc += std::log(static_cast<double>(top - m + i) / static_cast<double>(i));
    }
    return acc;
  }
  // C(n-1, k-1) = 1 / (n B(k, n-k+1))
  const double a = static_cast<double>(k);
  const double b = static_cast<double>(n - k + 1);
  const double log_beta =
      boost::math::lgamma(a) + boost::math::lgamma(b) - boost::math::lgamma(a + b);
  return -std::log(static_cast<double>(n)) - log_beta;
}

double log_sum_exp(const double* first, const double* last) {
  const double hi = *std::max_element(first, last);
  if (!std::isfinite(hi)) return hi;
  double acc = 0.0;
  for (const double* it = first; it != last; ++it) acc += std::exp(*it - hi);
  return hi + std::log(acc);
}

}  // namespace

NegBinParams::NegBinParams(std::int64_t k, double p0) : k_(k), p0_(p0) {
  if (k < 1) throw DomainError("negative binomial k must be >= 1, got " + std::to_string(k));
  if (!(p0 > 0.0 && p0 < 1.0)) {
    throw DomainError("negative binomial p0 must lie in (0, 1), got " + std::to_string(p0));
  }
}

double log_pmf(const NegBinParams& params, std::int64_t n) {
  require_support(params, n);
  const std::int64_t k = params.k();
  const double p0 = params.p0();
  const double m = static_cast<double>(n - k);
  const double log_fail = m == 0.0 ? 0.0 : m * std::log1p(-p0);
  const double log_succ = static_cast<double>(k) * std::log(p0);
  if (std::min(k - 1, n - k) <= kDirectSumLimit) {
    return log_choose_nm1_km1(n, k) + log_succ + log_fail;
  }
  // f_k(n) = p0 * d/dx I_x(k, n-k+1) at x = p0, divided by n
  const double density = boost::math::ibeta_derivative(static_cast<double>(k), m + 1.0, p0);
  if (density > 1e-280 && std::isfinite(density)) {
    return std::log(p0) + std::log(density) - std::log(static_cast<double>(n));
  }
  return log_choose_nm1_km1(n, k) + log_succ + log_fail;
}

double pmf(const NegBinParams& params, std::int64_t n) {
  return clamp_prob(std::exp(log_pmf(params, n)));
}

double cdf_below(const NegBinParams& params, std::int64_t n) {
  require_support(params, n);
  const std::int64_t k = params.k();
  const std::int64_t gap = n - k;
  if (gap == 0) return 0.0;
  const double p0 = params.p0();
  if (gap <= kDirectSumLimit) {
    std::array<double, kDirectSumLimit> terms{};
    const double log_fail = std::log1p(-p0);
    double term = static_cast<double>(k) * std::log(p0);  // ln f_k(k)
    for (std::int64_t i = 0; i < gap; ++i) {
      terms[static_cast<std::size_t>(i)] = term;
      const std::int64_t m = k + i;
      // f_k(m+1) / f_k(m) = m / (m-k+1) * (1-p0)
      term += std::log(static_cast<double>(m) / static_cast<double>(m - k + 1)) + log_fail;
    }
    return clamp_prob(std::exp(log_sum_exp(terms.data(), terms.data() + gap)));
  }
  // P(N <= n-1) = P(Binomial(n-1, p0) >= k) = I_{p0}(k, n-k)
  return clamp_prob(
      boost::math::ibeta(static_cast<double>(k), static_cast<double>(gap), p0));
}

double cdf_above(const NegBinParams& params, std::int64_t n) {
  require_support(params, n);
  const double k = static_cast<double>(params.k());
  const double b = static_cast<double>(n - params.k() + 1);
  return clamp_prob(boost::math::ibetac(k, b, params.p0()));
}

double adjusted_pvalue(const NegBinParams& params, std::int64_t n_obs) {
  const double below = cdf_below(params, n_obs);
  const double mass = std::exp(log_pmf(params, n_obs));
  return clamp_prob(below + 0.5 * mass);
}

double upper_adjusted_pvalue(const NegBinParams& params, std::int64_t n_obs) {
  const double above = cdf_above(params, n_obs);
  const double mass = std::exp(log_pmf(params, n_obs));
  return clamp_prob(above + 0.5 * mass);
}

}  // namespace nbnn
