#ifndef HANGAR_TESTS_BINOMIAL_HPP
#define HANGAR_TESTS_BINOMIAL_HPP

#include <cmath>
#include <utility>

namespace hangar::testing {

// Central interval [lo, hi] of Binomial(n, p) in counts, holding at least
// `level` of the mass, from the exact CDF.
inline std::pair<double, double> binomial_interval(int n, double p, double level) {
  const double tail = (1.0 - level) / 2.0;
  auto pmf = [&](int k) {
    return std::exp(std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                    k * std::log(p) + (n - k) * std::log1p(-p));
  };
  double cdf = 0.0;
  int lo = -1;
  int hi = n;
  for (int k = 0; k <= n; ++k) {
    cdf += pmf(k);
    if (lo < 0 && cdf > tail) lo = k;
    if (cdf >= 1.0 - tail) {
      hi = k;
      break;
    }
  }
  return {static_cast<double>(lo), static_cast<double>(hi)};
}

}  // namespace hangar::testing

#endif  // HANGAR_TESTS_BINOMIAL_HPP
