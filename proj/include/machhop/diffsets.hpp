#pragma once

// Perfect and relaxed difference sets in Z_p (lambda fixed to 1).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace machhop {

enum class DiffLevel { perfect, relaxed, neither };

const char* to_string(DiffLevel level) noexcept;

struct DifferenceCertificate {
  DiffLevel level = DiffLevel::neither;
  /// witness[l] = number of ordered pairs (a, b) with (a - b) mod p == l.
  /// Index 0 is unused and kept at zero.
  std::vector<std::uint32_t> witness;
  /// Least nonzero residue with no ordered pair, if any.
  std::optional<std::uint64_t> first_unrealized;
};

/// Counts ordered differences. Throws Error(malformed_input) if an element
/// is out of range or repeated.
DifferenceCertificate verify_difference_set(std::uint64_t p,
                                            std::span<const std::uint64_t> elements);

/// Immutable, certified set of residues in Z_p.
class DifferenceSet {
 public:
  /// Sorts, validates and certifies. Throws Error(malformed_input) on a
  /// range or distinctness violation.
  static DifferenceSet certify(std::uint64_t p, std::vector<std::uint64_t> elements);

  std::uint64_t modulus() const noexcept { return p_; }
  std::span<const std::uint64_t> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  DiffLevel level() const noexcept { return level_; }

  bool contains(std::uint64_t residue) const;
  /// {(a + shift) mod p}, re-certified.
  DifferenceSet shifted(std::uint64_t shift) const;
  /// Z_p minus the set, ascending.
  std::vector<std::uint64_t> complement() const;

 private:
  DifferenceSet(std::uint64_t p, std::vector<std::uint64_t> elements, DiffLevel level)
      : p_(p), elements_(std::move(elements)), level_(level) {}

  std::uint64_t p_;
  std::vector<std::uint64_t> elements_;
  DiffLevel level_;
};

inline constexpr std::uint64_t kDefaultPdsSearchCeiling = 11;

/// Lexicographically least (L^2+L+1, L+1, 1) perfect difference set that
/// contains 0 and 1, found by backtracking.
///
/// Throws Error(precondition) unless L is a prime power with L^2+L+1 prime,
/// and Error(capability) when L exceeds `search_ceiling`.
DifferenceSet find_perfect_difference_set(std::uint64_t L,
                                          std::uint64_t search_ceiling = kDefaultPdsSearchCeiling);

/// {0, ..., spacing-1} U {2*spacing-1, 3*spacing-1, ..., floor(p/spacing)*spacing-1}.
DifferenceSet build_rds(std::uint64_t p, std::uint64_t spacing);

}  // namespace machhop
