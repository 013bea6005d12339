#pragma once

// Channel matrices and channel-hopping sequences with maximum rendezvous
// diversity (MRD), plus exhaustive MRD verifiers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "machhop/idealmat.hpp"

namespace machhop {

using Channel = std::uint32_t;

enum class MatrixRole { semi_mach, mach, ortho_member, ortho_extended };

const char* to_string(MatrixRole role) noexcept;

class ChMatrix {
 public:
  /// Throws Error(malformed_input) if a cell is outside [0, universe).
  ChMatrix(std::size_t rows, std::size_t cols, std::vector<Channel> cells,
           std::uint32_t channel_universe, MatrixRole role);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  std::uint32_t channel_universe() const noexcept { return universe_; }
  MatrixRole role() const noexcept { return role_; }

  Channel at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  std::span<const Channel> row(std::size_t i) const {
    return std::span<const Channel>(cells_).subspan(i * cols_, cols_);
  }
  std::span<const Channel> cells() const noexcept { return cells_; }

  friend bool operator==(const ChMatrix&, const ChMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Channel> cells_;
  std::uint32_t universe_;
  MatrixRole role_;
};

class ChSequence {
 public:
  /// Throws Error(malformed_input) if empty or a value is outside
  /// [0, universe). `row_width` is a display hint for export (0 = none).
  ChSequence(std::vector<Channel> values, std::uint32_t channel_universe,
             std::string provenance, std::size_t row_width = 0);

  std::size_t period() const noexcept { return values_.size(); }
  std::uint32_t channel_universe() const noexcept { return universe_; }
  const std::string& provenance() const noexcept { return provenance_; }
  std::size_t row_width() const noexcept { return row_width_; }

  Channel operator[](std::size_t t) const { return values_[t]; }
  /// Value at t, wrapping modulo the period.
  Channel at(std::uint64_t t) const { return values_[t % values_.size()]; }
  std::span<const Channel> values() const noexcept { return values_; }

  friend bool operator==(const ChSequence&, const ChSequence&) = default;

 private:
  std::vector<Channel> values_;
  std::uint32_t universe_;
  std::string provenance_;
  std::size_t row_width_;
};

/// Column j becomes the rotation that puts channel 0 on column j's dot:
/// out[i][j] = (i - dot_row(j)) mod p.
ChMatrix build_semi_mach(const IdealMatrix& ideal);

/// (L^2, p)-MACH matrix with p = L^2+L+1, embedding the canonical perfect
/// difference set. Requires is_valid_ideal_L(L).
ChMatrix build_mach_matrix(std::uint64_t L, IdealPreset preset = IdealPreset::triangular);

/// (N, p)-MACH matrix for any N >= 1, embedding the spacing relaxed
/// difference set with p = general_prime_for(N).
ChMatrix build_general_mach_matrix(std::uint64_t n_channels,
                                   IdealPreset preset = IdealPreset::triangular);

struct Shift2d {
  std::uint64_t delta;
  std::uint64_t tau;
  Channel channel;

  friend bool operator==(const Shift2d&, const Shift2d&) = default;
};

struct Mrd2dCertificate {
  bool passed = false;
  std::uint64_t shifts_checked = 0;
  /// Lexicographically least (delta, tau, k) with no coincidence.
  std::optional<Shift2d> missing;
};

/// Checks that for every (delta, tau) and channel k < N some cell has
/// a[i][j] == b[i+delta][j+tau] == k (indices mod p). Both matrices must be
/// square and the same size.
Mrd2dCertificate verify_cross_mrd(const ChMatrix& a, const ChMatrix& b,
                                  std::uint32_t n_channels, bool skip_tau_zero);

/// verify_cross_mrd(c, c, ...). Throws Error(precondition) on non-square input.
Mrd2dCertificate verify_2d_mrd(const ChMatrix& c, std::uint32_t n_channels,
                               bool skip_tau_zero = false);

/// c(t) = C[floor(t / 2p)][t mod p], period 2p^2.
ChSequence mach_matrix_to_sequence(const ChMatrix& c, std::string provenance = "mach-matrix");

struct Shift1d {
  std::uint64_t shift;
  Channel channel;

  friend bool operator==(const Shift1d&, const Shift1d&) = default;
};

struct Mrd1dCertificate {
  bool passed = false;
  std::uint64_t shifts_checked = 0;
  std::optional<Shift1d> missing;
};

/// For every shift d and channel k < N, some t has s(t) == s(t+d) == k.
Mrd1dCertificate verify_1d_mrd(const ChSequence& s, std::uint32_t n_channels);

/// Cross-check of a (C|C) sequence against its matrix: for every drift d,
/// the p x p box that lines up with an intact copy of C (the first box when
/// d mod 2p <= p, the second otherwise) must by itself realise every
/// channel k < N as a coincidence.
struct CaseSplitReport {
  bool passed = false;
  std::uint64_t first_box_cases = 0;
  std::uint64_t second_box_cases = 0;
  std::optional<Shift1d> missing;
  /// Set when the aligned box is not the expected shifted copy of C.
  bool box_mismatch = false;
};

CaseSplitReport verify_case_split(const ChMatrix& c, const ChSequence& s,
                                  std::uint32_t n_channels);

/// IDEAL-CH: build_mach_matrix(L) read out as a period 2(L^2+L+1)^2 sequence.
ChSequence ideal_ch(std::uint64_t L);

/// General construction read out as a period 2p^2 sequence over N channels.
ChSequence general_mach_sequence(std::uint64_t n_channels);

struct ApproximationRatio {
  std::uint64_t p = 0;
  std::uint64_t rds_size = 0;
  std::uint64_t usable_channels = 0;  // p - |D|
  /// 2p^2 / (p - |D|)^2 in lowest terms.
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  double value = 0.0;
};

ApproximationRatio approximation_ratio(std::uint64_t n_channels);

}  // namespace machhop
