#include "machhop/machseq.hpp"

#include <numeric>
#include <string>
#include <unordered_map>

#include "machhop/diffsets.hpp"
#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

namespace machhop {

const char* to_string(MatrixRole role) noexcept {
  switch (role) {
    case MatrixRole::semi_mach: return "semi_mach";
    case MatrixRole::mach: return "mach";
    case MatrixRole::ortho_member: return "ortho_member";
    case MatrixRole::ortho_extended: return "ortho_extended";
  }
  return "unknown";
}

ChMatrix::ChMatrix(std::size_t rows, std::size_t cols, std::vector<Channel> cells,
                   std::uint32_t channel_universe, MatrixRole role)
    : rows_(rows), cols_(cols), cells_(std::move(cells)), universe_(channel_universe), role_(role) {
  if (rows_ == 0 || cols_ == 0 || cells_.size() != rows_ * cols_) {
    fail(ErrorKind::malformed_input, "matrix cell count does not match its shape");
  }
  for (const auto c : cells_) {
    if (c >= universe_) {
      fail(ErrorKind::malformed_input, "matrix cell " + std::to_string(c) +
                                           " outside channel universe " +
                                           std::to_string(universe_));
    }
  }
}

ChSequence::ChSequence(std::vector<Channel> values, std::uint32_t channel_universe,
                       std::string provenance, std::size_t row_width)
    : values_(std::move(values)),
      universe_(channel_universe),
      provenance_(std::move(provenance)),
      row_width_(row_width) {
  if (values_.empty()) fail(ErrorKind::malformed_input, "sequence must be nonempty");
  for (const auto c : values_) {
    if (c >= universe_) {
      fail(ErrorKind::malformed_input, "sequence value " + std::to_string(c) +
                                           " outside channel universe " +
                                           std::to_string(universe_));
    }
  }
}

ChMatrix build_semi_mach(const IdealMatrix& ideal) {
  const std::uint64_t p = ideal.size();
  std::vector<Channel> cells(p * p);
  for (std::uint64_t j = 0; j < p; ++j) {
    const std::uint64_t anchor = ideal.dot_row(j);
    for (std::uint64_t i = 0; i < p; ++i) {
      cells[i * p + j] = static_cast<Channel>((i + p - anchor) % p);
    }
  }
  return ChMatrix(p, p, std::move(cells), static_cast<std::uint32_t>(p), MatrixRole::semi_mach);
}

namespace {

// Cells in D become (j mod N); the l-th complement element b_l becomes
// (l mod N).
ChMatrix embed_difference_set(const ChMatrix& semi, const DifferenceSet& d,
                              std::uint32_t n_channels) {
  const std::size_t p = semi.rows();
  const auto complement = d.complement();
  std::vector<Channel> remap(p, 0);
  std::vector<bool> in_d(p, false);
  for (const auto a : d.elements()) in_d[a] = true;
  for (std::size_t l = 0; l < complement.size(); ++l) {
    remap[complement[l]] = static_cast<Channel>(l % n_channels);
  }

  std::vector<Channel> cells(p * p);
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      const Channel v = semi.at(i, j);
      cells[i * p + j] = in_d[v] ? static_cast<Channel>(j % n_channels) : remap[v];
    }
  }
  return ChMatrix(p, p, std::move(cells), n_channels, MatrixRole::mach);
}

}  // namespace

ChMatrix build_mach_matrix(std::uint64_t L, IdealPreset preset) {
  require(is_valid_ideal_L(L),
          "L=" + std::to_string(L) + " is not a prime power with L^2+L+1 prime");
  const std::uint64_t p = L * L + L + 1;
  const auto semi = build_semi_mach(build_ideal_matrix(p, preset));
  const auto pds = find_perfect_difference_set(L);
  return embed_difference_set(semi, pds, static_cast<std::uint32_t>(L * L));
}

ChMatrix build_general_mach_matrix(std::uint64_t n_channels, IdealPreset preset) {
  require(n_channels >= 1, "general construction needs at least one channel");
  require(n_channels <= (1u << 20), "general construction limited to 2^20 channels");
  const std::uint64_t p = general_prime_for(n_channels);
  const auto semi = build_semi_mach(build_ideal_matrix(p, preset));
  const auto rds = build_rds(p, ceil_sqrt(p));
  return embed_difference_set(semi, rds, static_cast<std::uint32_t>(n_channels));
}

Mrd2dCertificate verify_cross_mrd(const ChMatrix& a, const ChMatrix& b,
                                  std::uint32_t n_channels, bool skip_tau_zero) {
  require(a.square() && b.square(), "2D-MRD verification needs square matrices");
  require(a.rows() == b.rows(), "2D-MRD verification needs matrices of equal size");
  const std::size_t p = a.rows();

  Mrd2dCertificate cert;
  std::vector<std::uint8_t> seen(n_channels);
  for (std::size_t delta = 0; delta < p; ++delta) {
    for (std::size_t tau = 0; tau < p; ++tau) {
      if (skip_tau_zero && tau == 0) continue;
      ++cert.shifts_checked;
      std::fill(seen.begin(), seen.end(), 0);
      std::uint32_t covered = 0;
      for (std::size_t i = 0; i < p && covered < n_channels; ++i) {
        const auto lhs = a.row(i);
        const auto rhs = b.row((i + delta) % p);
        for (std::size_t j = 0; j < p; ++j) {
          const Channel k = lhs[j];
          if (k < n_channels && !seen[k] && rhs[(j + tau) % p] == k) {
            seen[k] = 1;
            ++covered;
          }
        }
      }
      if (covered < n_channels) {
        Channel k = 0;
        while (seen[k]) ++k;
        cert.missing = Shift2d{delta, tau, k};
        return cert;
      }
    }
  }
  cert.passed = true;
  return cert;
}

Mrd2dCertificate verify_2d_mrd(const ChMatrix& c, std::uint32_t n_channels, bool skip_tau_zero) {
  return verify_cross_mrd(c, c, n_channels, skip_tau_zero);
}

ChSequence mach_matrix_to_sequence(const ChMatrix& c, std::string provenance) {
  require(c.square(), "MACH matrix must be square");
  const std::size_t p = c.rows();
  std::vector<Channel> values(2 * p * p);
  for (std::size_t t = 0; t < values.size(); ++t) values[t] = c.at(t / (2 * p), t % p);
  return ChSequence(std::move(values), c.channel_universe(), std::move(provenance), 2 * p);
}

Mrd1dCertificate verify_1d_mrd(const ChSequence& s, std::uint32_t n_channels) {
  const std::size_t period = s.period();
  const auto v = s.values();
  Mrd1dCertificate cert;
  std::vector<std::uint8_t> seen(n_channels);
  for (std::size_t d = 0; d < period; ++d) {
    ++cert.shifts_checked;
    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t covered = 0;
    for (std::size_t t = 0; t < period && covered < n_channels; ++t) {
      const Channel k = v[t];
      if (k < n_channels && !seen[k] && v[(t + d) % period] == k) {
        seen[k] = 1;
        ++covered;
      }
    }
    if (covered < n_channels) {
      Channel k = 0;
      while (seen[k]) ++k;
      cert.missing = Shift1d{d, k};
      return cert;
    }
  }
  cert.passed = true;
  return cert;
}

CaseSplitReport verify_case_split(const ChMatrix& c, const ChSequence& s,
                                  std::uint32_t n_channels) {
  require(c.square(), "case split needs a square matrix");
  const std::size_t p = c.rows();
  const std::size_t width = 2 * p;
  const std::size_t period = width * p;
  require(s.period() == period, "sequence period must be 2p^2");

  CaseSplitReport report;
  std::vector<std::uint8_t> seen(n_channels);
  for (std::size_t d = 0; d < period; ++d) {
    const std::size_t delta = d / width;
    const std::size_t tau = d % width;
    const bool first_box = tau <= p;
    first_box ? ++report.first_box_cases : ++report.second_box_cases;
    const std::size_t box_begin = first_box ? 0 : p;
    // The aligned box is C shifted by (row_shift, tau mod p).
    const std::size_t row_shift = first_box ? delta : delta + 1;

    std::fill(seen.begin(), seen.end(), 0);
    std::uint32_t covered = 0;
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t jj = box_begin; jj < box_begin + p; ++jj) {
        const std::size_t t = i * width + jj;
        const Channel here = s[t];
        const Channel there = s[(t + d) % period];
        const std::size_t col = jj - box_begin;
        if (here != c.at(i, col) || there != c.at((i + row_shift) % p, (col + tau) % p)) {
          report.missing = Shift1d{d, here};
          report.box_mismatch = true;
          return report;
        }
        if (here < n_channels && here == there && !seen[here]) {
          seen[here] = 1;
          ++covered;
        }
      }
    }
    if (covered < n_channels) {
      Channel k = 0;
      while (seen[k]) ++k;
      report.missing = Shift1d{d, k};
      return report;
    }
  }
  report.passed = true;
  return report;
}

ChSequence ideal_ch(std::uint64_t L) {
  const auto c = build_mach_matrix(L);
  return mach_matrix_to_sequence(
      c, "ideal-ch;L=" + std::to_string(L) + ";p=" + std::to_string(c.rows()));
}

ChSequence general_mach_sequence(std::uint64_t n_channels) {
  const auto c = build_general_mach_matrix(n_channels);
  return mach_matrix_to_sequence(c, "general-mach;N=" + std::to_string(n_channels) +
                                        ";p=" + std::to_string(c.rows()));
}

ApproximationRatio approximation_ratio(std::uint64_t n_channels) {
  ApproximationRatio r;
  r.p = general_prime_for(n_channels);
  r.rds_size = spacing_rds_size(r.p);
  r.usable_channels = r.p - r.rds_size;
  const std::uint64_t num = 2 * r.p * r.p;
  const std::uint64_t den = r.usable_channels * r.usable_channels;
  const std::uint64_t g = std::gcd(num, den);
  r.numerator = num / g;
  r.denominator = den / g;
  r.value = static_cast<double>(r.numerator) / static_cast<double>(r.denominator);
  return r;
}

}  // namespace machhop
