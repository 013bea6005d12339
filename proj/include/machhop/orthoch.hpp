#pragma once

// Orthogonal MACH matrices c_r[i][j] = (r*i + j) mod p and the ORTHO-CH
// sequence built from them.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "machhop/machseq.hpp"

namespace machhop {

/// Nonempty subset of [0, N).
class AvailableChannelSet {
 public:
  /// Sorts and deduplicates. Throws Error(precondition) if empty or a
  /// channel is >= universe.
  AvailableChannelSet(std::vector<Channel> channels, std::uint32_t universe);

  /// [0, universe).
  static AvailableChannelSet full(std::uint32_t universe);

  std::span<const Channel> channels() const noexcept { return channels_; }
  std::size_t size() const noexcept { return channels_.size(); }
  std::uint32_t universe() const noexcept { return universe_; }
  bool contains(Channel c) const;

  friend bool operator==(const AvailableChannelSet&, const AvailableChannelSet&) = default;

 private:
  std::vector<Channel> channels_;
  std::uint32_t universe_;
};

std::vector<Channel> intersect(const AvailableChannelSet& a, const AvailableChannelSet& b);

struct OrthoMember {
  std::uint64_t id;  // r in [1, p-1]
  ChMatrix matrix;
};

/// c_r[i][j] = (r*i + j) mod p for r in [1, p-1].
ChMatrix ortho_member_matrix(std::uint64_t p, std::uint64_t r);

class OrthoFamily {
 public:
  std::uint64_t modulus() const noexcept { return p_; }
  std::size_t size() const noexcept { return members_.size(); }
  /// Member with id r, 1 <= r <= p-1.
  const OrthoMember& member(std::uint64_t r) const;
  std::span<const OrthoMember> members() const noexcept { return members_; }

 private:
  friend OrthoFamily build_ortho_family(std::uint64_t p);
  OrthoFamily(std::uint64_t p, std::vector<OrthoMember> members)
      : p_(p), members_(std::move(members)) {}

  std::uint64_t p_;
  std::vector<OrthoMember> members_;
};

/// Throws Error(precondition) unless p is prime.
OrthoFamily build_ortho_family(std::uint64_t p);

struct OrthoPairCertificate {
  bool passed = false;
  /// From the exhaustive search.
  std::optional<Shift2d> missing;
  /// The constructive witness (i*, j*) from the orthogonality argument
  /// landed on a coincidence cell for every (delta, tau, k).
  bool constructive_witness_ok = false;
  std::optional<Shift2d> witness_mismatch;
};

/// Requires equal sizes and a.id != b.id.
OrthoPairCertificate verify_ortho_pair(const OrthoMember& a, const OrthoMember& b,
                                       std::uint32_t n_channels);

struct CoverCertificate {
  bool passed = false;
  /// First (column, channel) missing.
  std::optional<std::pair<std::size_t, Channel>> missing;
};

/// Every channel k < N appears in every column.
CoverCertificate verify_cover(const ChMatrix& m, std::uint32_t n_channels);

struct OrthoFamilyReport {
  bool passed = false;
  std::uint64_t pairs_checked = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> failing_pair;
  std::optional<std::uint64_t> failing_cover;
};

/// All ordered member pairs plus the cover property of every member.
OrthoFamilyReport verify_ortho_family(const OrthoFamily& family, std::uint32_t n_channels);

/// (r | C_r | C_r), p x (2p+1).
ChMatrix ortho_extended_matrix(std::uint64_t p, std::uint64_t r);

/// Prime used by ORTHO-CH for a universe of N channels (smallest prime >= N,
/// at least 2).
std::uint64_t ortho_prime_for(std::uint64_t n_channels);

/// Uniform pick from avail \ {0}; nullopt if avail == {0}.
std::optional<Channel> pick_id_channel(const AvailableChannelSet& avail, std::uint64_t seed);

/// Replaces each slot whose channel is not in avail by an independent
/// seed-determined uniform pick from avail.
ChSequence replace_unavailable(const ChSequence& s, const AvailableChannelSet& avail,
                               std::uint64_t seed);

/// ORTHO-CH over the universe of `avail`. `forced_id`, when given, must be a
/// nonzero member of avail and overrides the seeded ID pick.
ChSequence ortho_ch(const AvailableChannelSet& avail, std::uint64_t seed,
                    std::optional<Channel> forced_id = std::nullopt);

/// (2p+1) p with p = ortho_prime_for(N).
std::uint64_t mttr_bound(std::uint64_t n_channels);

}  // namespace machhop
