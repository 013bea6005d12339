#include "machhop/orthoch.hpp"

#include <algorithm>
#include <string>

#include "machhop/counter_rng.hpp"
#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

namespace machhop {

AvailableChannelSet::AvailableChannelSet(std::vector<Channel> channels, std::uint32_t universe)
    : channels_(std::move(channels)), universe_(universe) {
  require(!channels_.empty(), "available channel set must be nonempty");
  std::sort(channels_.begin(), channels_.end());
  channels_.erase(std::unique(channels_.begin(), channels_.end()), channels_.end());
  require(channels_.back() < universe_, "channel " + std::to_string(channels_.back()) +
                                            " outside universe of " +
                                            std::to_string(universe_) + " channels");
}

AvailableChannelSet AvailableChannelSet::full(std::uint32_t universe) {
  std::vector<Channel> all(universe);
  for (std::uint32_t k = 0; k < universe; ++k) all[k] = k;
  return AvailableChannelSet(std::move(all), universe);
}

bool AvailableChannelSet::contains(Channel c) const {
  return std::binary_search(channels_.begin(), channels_.end(), c);
}

std::vector<Channel> intersect(const AvailableChannelSet& a, const AvailableChannelSet& b) {
  std::vector<Channel> out;
  std::set_intersection(a.channels().begin(), a.channels().end(), b.channels().begin(),
                        b.channels().end(), std::back_inserter(out));
  return out;
}

ChMatrix ortho_member_matrix(std::uint64_t p, std::uint64_t r) {
  require(is_prime(p), "orthogonal family needs a prime p, got " + std::to_string(p));
  require(r >= 1 && r < p, "member id must lie in [1, p-1]");
  std::vector<Channel> cells(p * p);
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) {
      cells[i * p + j] = static_cast<Channel>((r * i + j) % p);
    }
  }
  return ChMatrix(p, p, std::move(cells), static_cast<std::uint32_t>(p), MatrixRole::ortho_member);
}

const OrthoMember& OrthoFamily::member(std::uint64_t r) const {
  require(r >= 1 && r <= members_.size(), "member id out of range");
  return members_[r - 1];
}

OrthoFamily build_ortho_family(std::uint64_t p) {
  require(is_prime(p), "orthogonal family needs a prime p, got " + std::to_string(p));
  std::vector<OrthoMember> members;
  members.reserve(p - 1);
  for (std::uint64_t r = 1; r < p; ++r) members.push_back({r, ortho_member_matrix(p, r)});
  return OrthoFamily(p, std::move(members));
}

OrthoPairCertificate verify_ortho_pair(const OrthoMember& a, const OrthoMember& b,
                                       std::uint32_t n_channels) {
  require(a.matrix.rows() == b.matrix.rows(), "ortho pair needs members of the same size");
  require(a.id != b.id, "ortho pair needs distinct member ids");
  const std::uint64_t p = a.matrix.rows();

  OrthoPairCertificate cert;
  const auto search = verify_cross_mrd(a.matrix, b.matrix, n_channels, false);
  cert.missing = search.missing;

  // i* solves (r1 - r2) i = r2 delta + tau (mod p); j* = k - r1 i*.
  const std::uint64_t diff_inv = mod_inverse((a.id + p - b.id) % p, p);
  cert.constructive_witness_ok = true;
  for (std::uint64_t delta = 0; delta < p && cert.constructive_witness_ok; ++delta) {
    for (std::uint64_t tau = 0; tau < p && cert.constructive_witness_ok; ++tau) {
      const std::uint64_t rhs = (mod_mul(b.id, delta, p) + tau) % p;
      const std::uint64_t i_star = mod_mul(diff_inv, rhs, p);
      for (std::uint32_t k = 0; k < n_channels; ++k) {
        const std::uint64_t j_star = (k + p - mod_mul(a.id, i_star, p)) % p;
        const bool hit = a.matrix.at(i_star, j_star) == k &&
                         b.matrix.at((i_star + delta) % p, (j_star + tau) % p) == k;
        if (!hit) {
          cert.constructive_witness_ok = false;
          cert.witness_mismatch = Shift2d{delta, tau, k};
          break;
        }
      }
    }
  }
  cert.passed = !cert.missing && cert.constructive_witness_ok;
  return cert;
}

CoverCertificate verify_cover(const ChMatrix& m, std::uint32_t n_channels) {
  CoverCertificate cert;
  std::vector<std::uint8_t> seen(n_channels);
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const Channel k = m.at(i, j);
      if (k < n_channels) seen[k] = 1;
    }
    for (Channel k = 0; k < n_channels; ++k) {
      if (!seen[k]) {
        cert.missing = std::pair{j, k};
        return cert;
      }
    }
  }
  cert.passed = true;
  return cert;
}

OrthoFamilyReport verify_ortho_family(const OrthoFamily& family, std::uint32_t n_channels) {
  OrthoFamilyReport report;
  for (const auto& m : family.members()) {
    if (!verify_cover(m.matrix, n_channels).passed) {
      report.failing_cover = m.id;
      return report;
    }
  }
  for (const auto& a : family.members()) {
    for (const auto& b : family.members()) {
      if (a.id == b.id) continue;
      ++report.pairs_checked;
      if (!verify_ortho_pair(a, b, n_channels).passed) {
        report.failing_pair = std::pair{a.id, b.id};
        return report;
      }
    }
  }
  report.passed = true;
  return report;
}

ChMatrix ortho_extended_matrix(std::uint64_t p, std::uint64_t r) {
  const auto member = ortho_member_matrix(p, r);
  const std::size_t width = 2 * p + 1;
  std::vector<Channel> cells(p * width);
  for (std::size_t i = 0; i < p; ++i) {
    cells[i * width] = static_cast<Channel>(r);
    for (std::size_t j = 0; j < p; ++j) {
      cells[i * width + 1 + j] = member.at(i, j);
      cells[i * width + 1 + p + j] = member.at(i, j);
    }
  }
  return ChMatrix(p, width, std::move(cells), static_cast<std::uint32_t>(p),
                  MatrixRole::ortho_extended);
}

std::uint64_t ortho_prime_for(std::uint64_t n_channels) {
  require(n_channels >= 1, "channel universe must be nonempty");
  return smallest_prime_geq(std::max<std::uint64_t>(n_channels, 2));
}

std::optional<Channel> pick_id_channel(const AvailableChannelSet& avail, std::uint64_t seed) {
  const auto channels = avail.channels();
  // Sorted, so a leading 0 is the only zero.
  const std::size_t skip = channels.front() == 0 ? 1 : 0;
  const std::size_t candidates = channels.size() - skip;
  if (candidates == 0) return std::nullopt;
  return channels[skip + counter_uniform(seed, rng_stream::id_channel, 0, candidates)];
}

ChSequence replace_unavailable(const ChSequence& s, const AvailableChannelSet& avail,
                               std::uint64_t seed) {
  require(avail.universe() == s.channel_universe(),
          "available set universe differs from the sequence's channel universe");
  const auto channels = avail.channels();
  std::vector<Channel> out(s.values().begin(), s.values().end());
  for (std::size_t t = 0; t < out.size(); ++t) {
    if (!avail.contains(out[t])) {
      out[t] = channels[counter_uniform(seed, rng_stream::replacement, t, channels.size())];
    }
  }
  return ChSequence(std::move(out), s.channel_universe(),
                    s.provenance() + ";avail=" + std::to_string(avail.size()) +
                        ";seed=" + std::to_string(seed) + ";replacement=per-slot",
                    s.row_width());
}

ChSequence ortho_ch(const AvailableChannelSet& avail, std::uint64_t seed,
                    std::optional<Channel> forced_id) {
  const std::uint32_t n = avail.universe();
  const std::uint64_t p = ortho_prime_for(n);
  const std::size_t width = 2 * p + 1;
  const std::size_t period = width * p;
  const std::string base = "ortho-ch;N=" + std::to_string(n) + ";p=" + std::to_string(p);

  if (avail.size() == 1 && avail.channels().front() == 0) {
    require(!forced_id, "ID channel cannot be forced when only channel 0 is available");
    return ChSequence(std::vector<Channel>(period, 0), n, base + ";r=none;seed=" +
                                                              std::to_string(seed),
                      width);
  }

  Channel r = 0;
  if (forced_id) {
    require(*forced_id != 0 && avail.contains(*forced_id),
            "forced ID channel must be a nonzero available channel");
    r = *forced_id;
  } else {
    r = *pick_id_channel(avail, seed);
  }

  const auto extended = ortho_extended_matrix(p, r);
  const auto channels = avail.channels();
  std::vector<Channel> values(extended.cells().begin(), extended.cells().end());
  for (std::size_t t = 0; t < period; ++t) {
    if (!avail.contains(values[t])) {
      values[t] = channels[counter_uniform(seed, rng_stream::replacement, t, channels.size())];
    }
  }
  return ChSequence(std::move(values), n,
                    base + ";r=" + std::to_string(r) + ";seed=" + std::to_string(seed) +
                        ";replacement=per-slot",
                    width);
}

std::uint64_t mttr_bound(std::uint64_t n_channels) {
  const std::uint64_t p = ortho_prime_for(n_channels);
  return (2 * p + 1) * p;
}

}  // namespace machhop
