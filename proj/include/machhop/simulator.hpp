#pragma once

// Two-user asynchronous rendezvous simulation. User 1 hops on s1(t), user 2
// on s2(t + d) for a relative clock drift d; slots are aligned.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "machhop/machseq.hpp"
#include "machhop/orthoch.hpp"

namespace machhop {

struct RendezvousReport {
  std::uint64_t drift = 0;
  /// T: first slot with X1 == X2, plus one. Empty if unmet within horizon.
  std::optional<std::uint64_t> ttr;
  /// T_i for each common channel i.
  std::map<Channel, std::optional<std::uint64_t>> per_channel;
  /// T#: first time every common channel has hosted a rendezvous.
  std::optional<std::uint64_t> t_sharp;
  std::vector<Channel> common_channels;
};

std::uint64_t default_horizon(const ChSequence& s1, const ChSequence& s2);

/// Throws Error(precondition) when the available sets share no channel or a
/// sequence uses a channel outside its set, or horizon == 0.
RendezvousReport run(const ChSequence& s1, const ChSequence& s2, std::uint64_t drift,
                     std::uint64_t horizon, const AvailableChannelSet& avail1,
                     const AvailableChannelSet& avail2);

/// Slots t in [0, lcm(P1, P2)) with s1(t) == s2(t + drift).
std::vector<std::uint64_t> coincidence_slots(const ChSequence& s1, const ChSequence& s2,
                                             std::uint64_t drift);

/// Produces one user's sequence for an availability set and a seed.
using SequenceGenerator =
    std::function<ChSequence(const AvailableChannelSet& avail, std::uint64_t seed)>;

namespace generators {
/// IDEAL-CH(L), unavailable slots replaced per seed.
SequenceGenerator ideal_ch(std::uint64_t L);
/// General construction over N channels, unavailable slots replaced per seed.
SequenceGenerator general_mach(std::uint64_t n_channels);
/// ORTHO-CH with a seeded ID pick and replacement.
SequenceGenerator ortho_ch();
}  // namespace generators

struct UserConfig {
  SequenceGenerator generator;
  AvailableChannelSet avail;
};

/// Seed handed to user `user` (1 or 2) for sweep seed `seed`.
std::uint64_t user_seed(std::uint64_t seed, int user);

struct RunRecord {
  std::uint64_t drift = 0;
  std::uint64_t seed = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::size_t common = 0;
  std::optional<std::uint64_t> ttr;
  std::optional<std::uint64_t> t_sharp;
};

struct Extremum {
  /// Empty when at least one run never met within the horizon.
  std::optional<std::uint64_t> value;
  std::uint64_t drift = 0;
  std::uint64_t seed = 0;
};

struct SweepResult {
  std::uint64_t period = 0;  // drift range swept, lcm of the two periods
  std::uint64_t horizon = 0;
  Extremum mttr;
  Extremum mcttr;
  std::vector<RunRecord> records;
};

/// Every drift in [0, period) for every seed.
SweepResult sweep(const UserConfig& u1, const UserConfig& u2,
                  std::span<const std::uint64_t> seeds);

Extremum mttr_sweep(const UserConfig& u1, const UserConfig& u2,
                    std::span<const std::uint64_t> seeds);
Extremum mcttr_sweep(const UserConfig& u1, const UserConfig& u2,
                     std::span<const std::uint64_t> seeds);

struct EttrEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::uint64_t trials = 0;
  /// Trials that did not meet within the horizon (excluded from the mean).
  std::uint64_t unmet = 0;
};

/// Monte Carlo over uniformly random drifts and replacement seeds.
EttrEstimate ettr_estimate(const UserConfig& u1, const UserConfig& u2, std::uint64_t trials,
                           std::uint64_t rng_seed);

/// Reference random algorithm: each user picks uniformly from its set each
/// slot, independently. Mean TTR is n1 n2 / G.
EttrEstimate ettr_random_reference(const AvailableChannelSet& avail1,
                                   const AvailableChannelSet& avail2, std::uint64_t trials,
                                   std::uint64_t rng_seed);

}  // namespace machhop
