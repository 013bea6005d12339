#pragma once

// Named-algorithm sweeps with their guaranteed bounds, as driven by the CLI.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "machhop/io.hpp"
#include "machhop/simulator.hpp"

namespace machhop {

enum class Algorithm { ideal_ch, ortho_ch, general_mach };

const char* to_string(Algorithm a) noexcept;

struct ExperimentConfig {
  Algorithm algorithm = Algorithm::ideal_ch;
  std::uint64_t L = 0;  // ideal-ch only
  std::uint64_t N = 0;  // ortho-ch and general-mach only
  /// Empty means the full channel universe.
  std::vector<Channel> avail1;
  std::vector<Channel> avail2;
  std::uint64_t seed = 0;
  std::uint32_t seed_count = 1;
};

/// Channel universe implied by the config (L^2 or N). Throws
/// Error(precondition) when the wrong size parameter is supplied.
std::uint32_t channel_universe(const ExperimentConfig& config);

/// Guaranteed bound: the sequence period (an MCTTR bound) for the MACH
/// constructions, (2p+1)p (an MTTR bound) for ORTHO-CH.
std::uint64_t guaranteed_bound(const ExperimentConfig& config);

UserConfig make_user(const ExperimentConfig& config, int user);

/// Exhaustive drift sweep over seeds seed .. seed+seed_count-1, checked
/// against guaranteed_bound.
SweepSummary run_experiment_sweep(const ExperimentConfig& config);

EttrEstimate run_experiment_ettr(const ExperimentConfig& config, std::uint64_t trials,
                                 std::uint64_t rng_seed);

/// The sequence user `user` hops on for `seed`.
ChSequence experiment_sequence(const ExperimentConfig& config, int user, std::uint64_t seed);

}  // namespace machhop
