#pragma once

#include <cstdint>

namespace starconf {

/// Binomial coefficient; zero when k < 0, n < 0 or k > n.
constexpr std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::int64_t result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    // exact at every step: result * (n-k+i) is divisible by i
    result = result * (n - k + i) / i;
  }
  return result;
}

}  // namespace starconf
