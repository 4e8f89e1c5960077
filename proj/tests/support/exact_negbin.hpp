#pragma once

// Exact rational reference values for the negative binomial law with a
// rational success probability a/b. Test-only; shares no code with the
// library.

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nbnn::testing {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;

inline double to_double(const cpp_rational& r) {
  const cpp_int num = boost::multiprecision::numerator(r);
  const cpp_int den = boost::multiprecision::denominator(r);
  if (num == 0) return 0.0;
  const auto shift = static_cast<long>(boost::multiprecision::msb(den)) -
                     static_cast<long>(boost::multiprecision::msb(num)) + 64;
  const cpp_int q = shift >= 0 ? cpp_int(num << shift) / den : num / cpp_int(den << -shift);
  return std::ldexp(static_cast<double>(q), static_cast<int>(-shift));
}

/// For fixed k and p0 = a/b: exact f_k(n) and P(N < n) for n = k..n_max,
/// stored at index n - k, each rounded once to double at the end.
struct ExactNegBinTable {
  std::int64_t k = 0;
  std::vector<double> pmf;
  std::vector<double> below;
  std::vector<cpp_rational> pmf_exact;
  std::vector<cpp_rational> below_exact;

  double adjusted(std::int64_t n) const {
    const auto i = static_cast<std::size_t>(n - k);
    return to_double(below_exact[i] + pmf_exact[i] / 2);
  }
};

inline ExactNegBinTable exact_negbin_table(std::int64_t k, std::int64_t a, std::int64_t b,
                                           std::int64_t n_max) {
  ExactNegBinTable t;
  t.k = k;
  cpp_rational f = 1;
  for (std::int64_t i = 0; i < k; ++i) f *= cpp_rational(a, b);  // f_k(k) = p^k
  cpp_rational below = 0;
  for (std::int64_t n = k; n <= n_max; ++n) {
    t.pmf_exact.push_back(f);
    t.below_exact.push_back(below);
    t.pmf.push_back(to_double(f));
    t.below.push_back(to_double(below));
    below += f;
    // f_k(n+1) = f_k(n) * n / (n-k+1) * (b-a)/b
    f *= cpp_rational(cpp_int(n) * (b - a), cpp_int(n - k + 1) * b);
  }
  return t;
}

/// Exact C(n, r) * p^k * q^(n-k) style pmf straight from the formula.
inline cpp_rational exact_pmf(std::int64_t k, std::int64_t a, std::int64_t b, std::int64_t n) {
  cpp_int choose = 1;
  for (std::int64_t i = 1; i <= k - 1; ++i) choose = choose * (n - k + i) / i;
  cpp_rational p(a, b);
  cpp_rational q(b - a, b);
  cpp_rational out = choose;
  for (std::int64_t i = 0; i < k; ++i) out *= p;
  for (std::int64_t i = 0; i < n - k; ++i) out *= q;
  return out;
}

}  // namespace nbnn::testing
