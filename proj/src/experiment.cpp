#include "machhop/experiment.hpp"

#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

namespace machhop {

const char* to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::ideal_ch: return "ideal-ch";
    case Algorithm::ortho_ch: return "ortho-ch";
    case Algorithm::general_mach: return "general-mach";
  }
  return "unknown";
}

std::uint32_t channel_universe(const ExperimentConfig& config) {
  if (config.algorithm == Algorithm::ideal_ch) {
    require(config.L != 0 && config.N == 0, "ideal-ch takes L, not N");
    require(is_valid_ideal_L(config.L),
            "L=" + std::to_string(config.L) + " is not a prime power with L^2+L+1 prime");
    return static_cast<std::uint32_t>(config.L * config.L);
  }
  require(config.N != 0 && config.L == 0, std::string(to_string(config.algorithm)) +
                                              " takes N, not L");
  require(config.N <= (1u << 20), "N too large");
  return static_cast<std::uint32_t>(config.N);
}

std::uint64_t guaranteed_bound(const ExperimentConfig& config) {
  switch (config.algorithm) {
    case Algorithm::ideal_ch: {
      const std::uint64_t p = config.L * config.L + config.L + 1;
      return 2 * p * p;
    }
    case Algorithm::general_mach: {
      const std::uint64_t p = general_prime_for(config.N);
      return 2 * p * p;
    }
    case Algorithm::ortho_ch:
      return mttr_bound(config.N);
  }
  fail(ErrorKind::precondition, "unknown algorithm");
}

namespace {

AvailableChannelSet avail_for(const std::vector<Channel>& channels, std::uint32_t universe) {
  if (channels.empty()) return AvailableChannelSet::full(universe);
  return AvailableChannelSet(channels, universe);
}

}  // namespace

UserConfig make_user(const ExperimentConfig& config, int user) {
  const std::uint32_t universe = channel_universe(config);
  auto avail = avail_for(user == 1 ? config.avail1 : config.avail2, universe);
  switch (config.algorithm) {
    case Algorithm::ideal_ch:
      return {generators::ideal_ch(config.L), std::move(avail)};
    case Algorithm::general_mach:
      return {generators::general_mach(config.N), std::move(avail)};
    case Algorithm::ortho_ch:
      return {generators::ortho_ch(), std::move(avail)};
  }
  fail(ErrorKind::precondition, "unknown algorithm");
}

SweepSummary run_experiment_sweep(const ExperimentConfig& config) {
  require(config.seed_count >= 1, "need at least one seed");
  const auto u1 = make_user(config, 1);
  const auto u2 = make_user(config, 2);
  std::vector<std::uint64_t> seeds(config.seed_count);
  for (std::uint32_t i = 0; i < config.seed_count; ++i) seeds[i] = config.seed + i;

  SweepSummary summary;
  summary.algorithm = to_string(config.algorithm);
  summary.bound = guaranteed_bound(config);
  summary.result = sweep(u1, u2, seeds);
  summary.period = summary.result.period;
  const bool mach = config.algorithm != Algorithm::ortho_ch;
  summary.metric = mach ? "mcttr" : "mttr";
  const auto& checked = mach ? summary.result.mcttr : summary.result.mttr;
  summary.passed = checked.value && *checked.value <= summary.bound;
  return summary;
}

EttrEstimate run_experiment_ettr(const ExperimentConfig& config, std::uint64_t trials,
                                 std::uint64_t rng_seed) {
  return ettr_estimate(make_user(config, 1), make_user(config, 2), trials, rng_seed);
}

ChSequence experiment_sequence(const ExperimentConfig& config, int user, std::uint64_t seed) {
  const auto u = make_user(config, user);
  return u.generator(u.avail, user_seed(seed, user));
}

}  // namespace machhop
