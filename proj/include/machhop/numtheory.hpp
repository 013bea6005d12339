#pragma once

// Integer helpers used by the sequence constructions. Everything here is
// exact integer arithmetic; no floating point is involved anywhere.

#include <cstdint>
#include <optional>
#include <vector>

namespace machhop {

/// A sequence period parameter, p >= 2.
class Modulus {
 public:
  explicit Modulus(std::uint64_t p);

  std::uint64_t value() const noexcept { return p_; }
  bool is_prime() const noexcept { return prime_; }

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::uint64_t p_;
  bool prime_;
};

struct PrimePower {
  std::uint64_t base;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Deterministic trial division.
bool is_prime(std::uint64_t n);

/// Returns (q, e) with q prime and q^e == n; the largest such e is reported.
std::optional<PrimePower> is_prime_power(std::uint64_t n);

/// floor(sqrt(n)) by integer Newton iteration.
std::uint64_t isqrt(std::uint64_t n);
/// ceil(sqrt(n)).
std::uint64_t ceil_sqrt(std::uint64_t n);

std::uint64_t smallest_prime_geq(std::uint64_t n);

/// Size of the spacing-based relaxed difference set in Z_p with spacing
/// ceil(sqrt(p)): ceil(sqrt(p)) + floor(p / ceil(sqrt(p))) - 1.
std::uint64_t spacing_rds_size(std::uint64_t p);

/// Least prime p with p - spacing_rds_size(p) >= n_channels.
std::uint64_t general_prime_for(std::uint64_t n_channels);

/// All L <= limit that are prime powers with L^2 + L + 1 prime, ascending.
std::vector<std::uint64_t> valid_ideal_L_list(std::uint64_t limit);

/// True iff L is a prime power and L^2 + L + 1 is prime.
bool is_valid_ideal_L(std::uint64_t L);

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
/// Inverse of a modulo prime p (a not divisible by p).
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
/// Canonical residue of a signed value.
std::uint64_t mod_signed(std::int64_t a, std::uint64_t m);

}  // namespace machhop
