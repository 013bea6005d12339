#pragma once

// Brute-force reference computations for tests. Deliberately naive and
// independent of the library code paths they check.

#include <cstdint>
#include <vector>

namespace oracle {

inline std::vector<bool> sieve(std::uint64_t limit) {
  std::vector<bool> prime(limit + 1, true);
  prime[0] = false;
  if (limit >= 1) prime[1] = false;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!prime[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) prime[j] = false;
  }
  return prime;
}

inline bool naive_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::uint64_t naive_ceil_sqrt(std::uint64_t n) {
  std::uint64_t s = 0;
  while (s * s < n) ++s;
  return s;
}

// Least prime p with p - (ceil(sqrt p) + floor(p / ceil(sqrt p)) - 1) >= n.
inline std::uint64_t scan_general_prime(std::uint64_t n) {
  for (std::uint64_t p = 2;; ++p) {
    if (!naive_prime(p)) continue;
    const std::uint64_t s = naive_ceil_sqrt(p);
    if (p - (s + p / s - 1) >= n) return p;
  }
}

// Dense correlation of a 0/1 matrix given as a dot-row-per-column table.
inline std::uint64_t dense_correlation(const std::vector<std::vector<int>>& m,
                                       std::uint64_t delta, std::uint64_t tau) {
  const std::uint64_t p = m.size();
  std::uint64_t sum = 0;
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      sum += static_cast<std::uint64_t>(m[(i + delta) % p][(j + tau) % p] * m[i][j]);
    }
  }
  return sum;
}

// Channel k realised as a coincidence between row-major grids a and b
// shifted by (delta, tau); quadruple loop, no bitmaps.
inline bool grid_has_coincidence(const std::vector<std::vector<std::uint32_t>>& a,
                                 const std::vector<std::vector<std::uint32_t>>& b,
                                 std::uint64_t delta, std::uint64_t tau, std::uint32_t k) {
  const std::uint64_t p = a.size();
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      if (a[i][j] == k && b[(i + delta) % p][(j + tau) % p] == k) return true;
    }
  }
  return false;
}

}  // namespace oracle
