#include "machhop/numtheory.hpp"

#include <bit>
#include <limits>

#include "machhop/error.hpp"

namespace machhop {

Modulus::Modulus(std::uint64_t p) : p_(p), prime_(machhop::is_prime(p)) {
  require(p >= 2, "modulus must be at least 2");
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n < 2) return n;
  // Newton from an upper bound converges monotonically down to floor(sqrt(n)).
  std::uint64_t x = std::uint64_t{1} << ((std::bit_width(n) + 1) / 2);
  while (true) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  const std::uint64_t r = isqrt(n);
  return r * r == n ? r : r + 1;
}

namespace {

// base^exp, or nullopt past `limit`.
std::optional<std::uint64_t> bounded_pow(std::uint64_t base, unsigned exp, std::uint64_t limit) {
  std::uint64_t acc = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (acc > limit / base) return std::nullopt;
    acc *= base;
  }
  return acc;
}

// floor(n^(1/e)) by bisection on exact integer powers.
std::uint64_t integer_root(std::uint64_t n, unsigned e) {
  if (e == 1) return n;
  std::uint64_t lo = 1;
  std::uint64_t hi = std::uint64_t{1} << ((std::bit_width(n) + e - 1) / e);
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo + 1) / 2;
    if (bounded_pow(mid, e, n)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  return lo;
}

}  // namespace

std::optional<PrimePower> is_prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  for (unsigned e = static_cast<unsigned>(std::bit_width(n)) - 1; e >= 1; --e) {
    const std::uint64_t root = integer_root(n, e);
    if (root < 2) continue;
    if (bounded_pow(root, e, n) == n && is_prime(root)) return PrimePower{root, e};
  }
  return std::nullopt;
}

std::uint64_t smallest_prime_geq(std::uint64_t n) {
  require(n >= 2, "smallest_prime_geq requires n >= 2");
  while (!is_prime(n)) ++n;
  return n;
}

std::uint64_t spacing_rds_size(std::uint64_t p) {
  require(p >= 2, "spacing_rds_size requires p >= 2");
  const std::uint64_t spacing = ceil_sqrt(p);
  return spacing + p / spacing - 1;
}

std::uint64_t general_prime_for(std::uint64_t n_channels) {
  require(n_channels >= 1, "general_prime_for requires N >= 1");
  for (std::uint64_t p = 2;; p = smallest_prime_geq(p + 1)) {
    if (p - spacing_rds_size(p) >= n_channels) return p;
  }
}

bool is_valid_ideal_L(std::uint64_t L) {
  if (L < 2 || L > (std::uint64_t{1} << 31)) return false;
  return is_prime_power(L).has_value() && is_prime(L * L + L + 1);
}

std::vector<std::uint64_t> valid_ideal_L_list(std::uint64_t limit) {
  require(limit >= 2, "valid_ideal_L_list requires limit >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t L = 2; L <= limit; ++L) {
    if (is_valid_ideal_L(L)) out.push_back(L);
  }
  return out;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mod_mul(result, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  require(is_prime(p), "mod_inverse requires a prime modulus");
  require(a % p != 0, "zero has no inverse");
  return mod_pow(a, p - 2, p);
}

std::uint64_t mod_signed(std::int64_t a, std::uint64_t m) {
  const auto sm = static_cast<std::int64_t>(m);
  const std::int64_t r = a % sm;
  return static_cast<std::uint64_t>(r < 0 ? r + sm : r);
}

}  // namespace machhop
