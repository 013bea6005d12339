#include "machhop/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <random>

#include "machhop/counter_rng.hpp"
#include "machhop/error.hpp"

namespace machhop {

namespace {

void require_within(const ChSequence& s, const AvailableChannelSet& avail, const char* who) {
  for (const auto c : s.values()) {
    if (!avail.contains(c)) {
      fail(ErrorKind::precondition, std::string(who) + " hops on channel " + std::to_string(c) +
                                        " outside its available set");
    }
  }
}

std::uint64_t drift_range(const ChSequence& s1, const ChSequence& s2) {
  return std::lcm<std::uint64_t>(s1.period(), s2.period());
}

}  // namespace

std::uint64_t default_horizon(const ChSequence& s1, const ChSequence& s2) {
  return 2 * std::max<std::uint64_t>(s1.period(), s2.period());
}

RendezvousReport run(const ChSequence& s1, const ChSequence& s2, std::uint64_t drift,
                     std::uint64_t horizon, const AvailableChannelSet& avail1,
                     const AvailableChannelSet& avail2) {
  require(horizon >= 1, "horizon must be at least one slot");
  RendezvousReport report;
  report.drift = drift;
  report.common_channels = intersect(avail1, avail2);
  require(!report.common_channels.empty(), "no common channel: rendezvous is impossible");
  require_within(s1, avail1, "user 1");
  require_within(s2, avail2, "user 2");

  for (const auto c : report.common_channels) report.per_channel.emplace(c, std::nullopt);
  std::size_t unmet = report.common_channels.size();

  for (std::uint64_t t = 0; t < horizon; ++t) {
    const Channel a = s1.at(t);
    if (a != s2.at(t + drift)) continue;
    if (!report.ttr) report.ttr = t + 1;
    auto& first = report.per_channel.at(a);
    if (!first) {
      first = t + 1;
      if (--unmet == 0) {
        report.t_sharp = t + 1;
        break;
      }
    }
  }
  return report;
}

std::vector<std::uint64_t> coincidence_slots(const ChSequence& s1, const ChSequence& s2,
                                             std::uint64_t drift) {
  std::vector<std::uint64_t> slots;
  const std::uint64_t range = drift_range(s1, s2);
  for (std::uint64_t t = 0; t < range; ++t) {
    if (s1.at(t) == s2.at(t + drift)) slots.push_back(t);
  }
  return slots;
}

namespace generators {

SequenceGenerator ideal_ch(std::uint64_t L) {
  auto base = std::make_shared<const ChSequence>(machhop::ideal_ch(L));
  return [base](const AvailableChannelSet& avail, std::uint64_t seed) {
    return replace_unavailable(*base, avail, seed);
  };
}

SequenceGenerator general_mach(std::uint64_t n_channels) {
  auto base = std::make_shared<const ChSequence>(general_mach_sequence(n_channels));
  return [base](const AvailableChannelSet& avail, std::uint64_t seed) {
    return replace_unavailable(*base, avail, seed);
  };
}

SequenceGenerator ortho_ch() {
  return [](const AvailableChannelSet& avail, std::uint64_t seed) {
    return machhop::ortho_ch(avail, seed);
  };
}

}  // namespace generators

std::uint64_t user_seed(std::uint64_t seed, int user) {
  return counter_hash(seed, rng_stream::user_seed, static_cast<std::uint64_t>(user));
}

namespace {

// Running maximum where an unmet run (empty value) dominates everything.
class MaxTracker {
 public:
  void observe(const std::optional<std::uint64_t>& v, std::uint64_t drift, std::uint64_t seed) {
    if (unbounded_) return;
    if (!v) {
      unbounded_ = true;
      best_ = Extremum{std::nullopt, drift, seed};
      return;
    }
    if (!best_.value || *v > *best_.value) best_ = Extremum{v, drift, seed};
  }

  const Extremum& result() const { return best_; }

 private:
  bool unbounded_ = false;
  Extremum best_;
};

}  // namespace

SweepResult sweep(const UserConfig& u1, const UserConfig& u2,
                  std::span<const std::uint64_t> seeds) {
  require(!seeds.empty(), "sweep needs at least one seed");
  require(!intersect(u1.avail, u2.avail).empty(), "no common channel: rendezvous is impossible");

  SweepResult result;
  MaxTracker mttr;
  MaxTracker mcttr;
  for (const auto seed : seeds) {
    const auto s1 = u1.generator(u1.avail, user_seed(seed, 1));
    const auto s2 = u2.generator(u2.avail, user_seed(seed, 2));
    result.period = drift_range(s1, s2);
    result.horizon = default_horizon(s1, s2);
    for (std::uint64_t d = 0; d < result.period; ++d) {
      const auto report = run(s1, s2, d, result.horizon, u1.avail, u2.avail);
      mttr.observe(report.ttr, d, seed);
      mcttr.observe(report.t_sharp, d, seed);
      result.records.push_back(RunRecord{d, seed, u1.avail.size(), u2.avail.size(),
                                         report.common_channels.size(), report.ttr,
                                         report.t_sharp});
    }
  }
  result.mttr = mttr.result();
  result.mcttr = mcttr.result();
  return result;
}

Extremum mttr_sweep(const UserConfig& u1, const UserConfig& u2,
                    std::span<const std::uint64_t> seeds) {
  return sweep(u1, u2, seeds).mttr;
}

Extremum mcttr_sweep(const UserConfig& u1, const UserConfig& u2,
                     std::span<const std::uint64_t> seeds) {
  return sweep(u1, u2, seeds).mcttr;
}

namespace {

class MeanAccumulator {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }

  EttrEstimate finish(std::uint64_t trials, std::uint64_t unmet) const {
    EttrEstimate e;
    e.trials = trials;
    e.unmet = unmet;
    e.mean = mean_;
    if (n_ > 1) {
      const double variance = m2_ / static_cast<double>(n_ - 1);
      e.std_error = std::sqrt(variance / static_cast<double>(n_));
    }
    return e;
  }

 private:
  std::uint64_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

EttrEstimate ettr_estimate(const UserConfig& u1, const UserConfig& u2, std::uint64_t trials,
                           std::uint64_t rng_seed) {
  require(trials >= 1, "ETTR estimate needs at least one trial");
  require(!intersect(u1.avail, u2.avail).empty(), "no common channel: rendezvous is impossible");
  std::mt19937_64 rng(rng_seed);
  MeanAccumulator acc;
  std::uint64_t unmet = 0;
  for (std::uint64_t n = 0; n < trials; ++n) {
    const std::uint64_t seed = rng();
    const auto s1 = u1.generator(u1.avail, user_seed(seed, 1));
    const auto s2 = u2.generator(u2.avail, user_seed(seed, 2));
    std::uniform_int_distribution<std::uint64_t> pick_drift(0, drift_range(s1, s2) - 1);
    const auto report = run(s1, s2, pick_drift(rng), default_horizon(s1, s2), u1.avail, u2.avail);
    if (report.ttr) {
      acc.add(static_cast<double>(*report.ttr));
    } else {
      ++unmet;
    }
  }
  return acc.finish(trials, unmet);
}

EttrEstimate ettr_random_reference(const AvailableChannelSet& avail1,
                                   const AvailableChannelSet& avail2, std::uint64_t trials,
                                   std::uint64_t rng_seed) {
  require(trials >= 1, "ETTR estimate needs at least one trial");
  require(!intersect(avail1, avail2).empty(), "no common channel: rendezvous is impossible");
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<std::size_t> pick1(0, avail1.size() - 1);
  std::uniform_int_distribution<std::size_t> pick2(0, avail2.size() - 1);
  MeanAccumulator acc;
  for (std::uint64_t n = 0; n < trials; ++n) {
    std::uint64_t t = 1;
    while (avail1.channels()[pick1(rng)] != avail2.channels()[pick2(rng)]) ++t;
    acc.add(static_cast<double>(t));
  }
  return acc.finish(trials, 0);
}

}  // namespace machhop
