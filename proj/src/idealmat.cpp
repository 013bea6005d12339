#include "machhop/idealmat.hpp"

#include <string>

#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

namespace machhop {

QuadraticCoefficients preset_coefficients(std::uint64_t p, IdealPreset preset) {
  require(is_prime(p) && p >= 3, "ideal matrix presets need an odd prime, got " +
                                     std::to_string(p));
  const std::uint64_t half = mod_inverse(2, p);
  switch (preset) {
    case IdealPreset::triangular:
      return {half, half, 0};
    case IdealPreset::pentagonal:
      return {mod_mul(3, half, p), p - half, 0};
  }
  fail(ErrorKind::precondition, "unknown ideal matrix preset");
}

IdealMatrix IdealMatrix::from_table(std::uint64_t p, std::vector<std::uint32_t> f) {
  require(p >= 2, "ideal matrix size must be at least 2");
  require(f.size() == p, "f-table length must equal p");
  for (const auto v : f) {
    if (v >= p) fail(ErrorKind::malformed_input, "f-table value out of range");
  }
  return IdealMatrix(p, std::move(f), std::nullopt);
}

IdealMatrix build_ideal_matrix(std::uint64_t p, QuadraticCoefficients coeffs) {
  require(is_prime(p), "Elliot-Butson construction needs a prime p, got " + std::to_string(p));
  require(coeffs.c2 >= 1 && coeffs.c2 <= p - 1, "c2 must lie in [1, p-1]");
  coeffs.c1 %= p;
  coeffs.c0 %= p;
  std::vector<std::uint32_t> f(p);
  for (std::uint64_t j = 0; j < p; ++j) {
    const std::uint64_t quad = mod_mul(coeffs.c2, mod_mul(j, j, p), p);
    f[j] = static_cast<std::uint32_t>((quad + mod_mul(coeffs.c1, j, p) + coeffs.c0) % p);
  }
  return IdealMatrix(p, std::move(f), coeffs);
}

IdealMatrix build_ideal_matrix(std::uint64_t p, IdealPreset preset) {
  return build_ideal_matrix(p, preset_coefficients(p, preset));
}

std::uint64_t correlation(const IdealMatrix& m, std::uint64_t delta, std::uint64_t tau) {
  const std::uint64_t p = m.size();
  delta %= p;
  tau %= p;
  // Dot (r, j) meets the shifted copy iff (r + delta, j + tau) is also a dot.
  std::uint64_t count = 0;
  for (std::uint64_t j = 0; j < p; ++j) {
    if ((m.dot_row(j) + delta) % p == m.dot_row((j + tau) % p)) ++count;
  }
  return count;
}

IdealCertificate verify_ideal(const IdealMatrix& m) {
  const std::uint64_t p = m.size();
  IdealCertificate cert;
  for (std::uint64_t delta = 0; delta < p; ++delta) {
    for (std::uint64_t tau = 0; tau < p; ++tau) {
      const std::uint64_t rho = correlation(m, delta, tau);
      cert.correlation_sum += rho;
      std::uint64_t expected = 1;
      if (tau == 0) expected = delta == 0 ? p : 0;
      if (rho != expected && !cert.violation) {
        cert.violation = {delta, tau};
        cert.violation_value = rho;
      }
    }
  }
  cert.passed = !cert.violation.has_value();
  return cert;
}

std::string render_dense(const IdealMatrix& m) {
  const std::uint64_t p = m.size();
  std::string out;
  out.reserve(2 * p * p);
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      if (j) out += ' ';
      out += m.at(i, j) ? '1' : '0';
    }
    out += '\n';
  }
  return out;
}

}  // namespace machhop
