#pragma once

// Ideal matrices: p x p binary dot patterns with exactly one dot per column
// whose doubly periodic autocorrelation is 1 for every shift that moves
// columns. Stored as the column -> f(j) table; row i holds the dot of
// column j iff p - 1 - i == f(j) (row 0 is the top row).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace machhop {

enum class IdealPreset {
  triangular,  // f(j) = j(j+1)/2
  pentagonal,  // f(j) = j(3j-1)/2
};

struct QuadraticCoefficients {
  std::uint64_t c2 = 1;
  std::uint64_t c1 = 0;
  std::uint64_t c0 = 0;

  friend bool operator==(const QuadraticCoefficients&, const QuadraticCoefficients&) = default;
};

/// Coefficients realizing a preset modulo the odd prime p.
QuadraticCoefficients preset_coefficients(std::uint64_t p, IdealPreset preset);

class IdealMatrix {
 public:
  /// Wraps an arbitrary f-table without certifying it. Used for negative
  /// controls; values must lie in [0, p-1].
  static IdealMatrix from_table(std::uint64_t p, std::vector<std::uint32_t> f);

  std::uint64_t size() const noexcept { return p_; }
  std::uint32_t f(std::uint64_t column) const { return f_.at(column); }
  const std::vector<std::uint32_t>& table() const noexcept { return f_; }
  std::uint64_t dot_row(std::uint64_t column) const { return p_ - 1 - f_.at(column); }
  bool at(std::uint64_t row, std::uint64_t column) const { return dot_row(column) == row; }
  const std::optional<QuadraticCoefficients>& coefficients() const noexcept { return coeffs_; }

 private:
  friend IdealMatrix build_ideal_matrix(std::uint64_t, QuadraticCoefficients);
  IdealMatrix(std::uint64_t p, std::vector<std::uint32_t> f,
              std::optional<QuadraticCoefficients> coeffs)
      : p_(p), f_(std::move(f)), coeffs_(coeffs) {}

  std::uint64_t p_;
  std::vector<std::uint32_t> f_;
  std::optional<QuadraticCoefficients> coeffs_;
};

/// Elliot-Butson construction, f(j) = (c2 j^2 + c1 j + c0) mod p.
/// Requires p prime and c2 in [1, p-1]; c1 and c0 are reduced mod p.
IdealMatrix build_ideal_matrix(std::uint64_t p, QuadraticCoefficients coeffs);
IdealMatrix build_ideal_matrix(std::uint64_t p, IdealPreset preset);

/// rho(delta, tau) = sum_{i,j} m[i+delta][j+tau] * m[i][j], indices mod p.
std::uint64_t correlation(const IdealMatrix& m, std::uint64_t delta, std::uint64_t tau);

struct IdealCertificate {
  bool passed = false;
  /// First (delta, tau) in row-major order breaking the correlation law.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> violation;
  std::uint64_t violation_value = 0;
  /// Sum of rho over all p^2 shifts.
  std::uint64_t correlation_sum = 0;
};

IdealCertificate verify_ideal(const IdealMatrix& m);

/// Dense 0/1 rendering, one row per line, space separated.
std::string render_dense(const IdealMatrix& m);

}  // namespace machhop
