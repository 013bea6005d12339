#include "machhop/diffsets.hpp"

#include <algorithm>
#include <string>

#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

namespace machhop {

const char* to_string(DiffLevel level) noexcept {
  switch (level) {
    case DiffLevel::perfect: return "perfect";
    case DiffLevel::relaxed: return "relaxed";
    case DiffLevel::neither: return "neither";
  }
  return "unknown";
}

DifferenceCertificate verify_difference_set(std::uint64_t p,
                                            std::span<const std::uint64_t> elements) {
  if (p < 2) fail(ErrorKind::malformed_input, "difference set modulus must be at least 2");
  std::vector<bool> seen(p, false);
  for (const auto a : elements) {
    if (a >= p) {
      fail(ErrorKind::malformed_input,
           "element " + std::to_string(a) + " out of range for Z_" + std::to_string(p));
    }
    if (seen[a]) fail(ErrorKind::malformed_input, "duplicate element " + std::to_string(a));
    seen[a] = true;
  }

  DifferenceCertificate cert;
  cert.witness.assign(p, 0);
  for (const auto a : elements) {
    for (const auto b : elements) {
      if (a != b) ++cert.witness[(a + p - b) % p];
    }
  }

  bool all_one = true;
  for (std::uint64_t l = 1; l < p; ++l) {
    if (cert.witness[l] == 0 && !cert.first_unrealized) cert.first_unrealized = l;
    if (cert.witness[l] != 1) all_one = false;
  }
  if (cert.first_unrealized) {
    cert.level = DiffLevel::neither;
  } else {
    cert.level = all_one ? DiffLevel::perfect : DiffLevel::relaxed;
  }
  return cert;
}

DifferenceSet DifferenceSet::certify(std::uint64_t p, std::vector<std::uint64_t> elements) {
  std::sort(elements.begin(), elements.end());
  const auto cert = verify_difference_set(p, elements);
  return DifferenceSet(p, std::move(elements), cert.level);
}

bool DifferenceSet::contains(std::uint64_t residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

DifferenceSet DifferenceSet::shifted(std::uint64_t shift) const {
  std::vector<std::uint64_t> moved;
  moved.reserve(elements_.size());
  for (const auto a : elements_) moved.push_back((a + shift) % p_);
  return certify(p_, std::move(moved));
}

std::vector<std::uint64_t> DifferenceSet::complement() const {
  std::vector<std::uint64_t> out;
  out.reserve(p_ - elements_.size());
  for (std::uint64_t x = 0; x < p_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

namespace {

// Depth-first extension in ascending order; the first complete set found is
// the lexicographically least.
class PerfectSetSearch {
 public:
  PerfectSetSearch(std::uint64_t p, std::size_t target) : p_(p), target_(target), used_(p, false) {}

  std::optional<std::vector<std::uint64_t>> run() {
    chosen_ = {0};
    if (!try_add(1)) return std::nullopt;
    if (extend(2)) return chosen_;
    return std::nullopt;
  }

 private:
  // Adds x if none of its differences with chosen elements repeat.
  bool try_add(std::uint64_t x) {
    std::vector<std::uint64_t> fresh;
    fresh.reserve(2 * chosen_.size());
    for (const auto a : chosen_) {
      const std::uint64_t d1 = (x + p_ - a) % p_;
      const std::uint64_t d2 = p_ - d1;
      if (used_[d1] || used_[d2] || d1 == d2) {
        undo(fresh);
        return false;
      }
      used_[d1] = used_[d2] = true;
      fresh.push_back(d1);
      fresh.push_back(d2);
    }
    chosen_.push_back(x);
    trail_.push_back(std::move(fresh));
    return true;
  }

  void undo(const std::vector<std::uint64_t>& diffs) {
    for (const auto d : diffs) used_[d] = false;
  }

  void pop() {
    undo(trail_.back());
    trail_.pop_back();
    chosen_.pop_back();
  }

  bool extend(std::uint64_t from) {
    if (chosen_.size() == target_) return true;
    for (std::uint64_t x = from; x < p_; ++x) {
      if (!try_add(x)) continue;
      if (extend(x + 1)) return true;
      pop();
    }
    return false;
  }

  std::uint64_t p_;
  std::size_t target_;
  std::vector<bool> used_;
  std::vector<std::uint64_t> chosen_;
  std::vector<std::vector<std::uint64_t>> trail_;
};

}  // namespace

DifferenceSet find_perfect_difference_set(std::uint64_t L, std::uint64_t search_ceiling) {
  require(is_valid_ideal_L(L), "L=" + std::to_string(L) +
                                   " is not a prime power with L^2+L+1 prime");
  if (L > search_ceiling) {
    fail(ErrorKind::capability, "perfect difference set search is limited to L <= " +
                                    std::to_string(search_ceiling) + " (got L=" +
                                    std::to_string(L) + ")");
  }
  const std::uint64_t p = L * L + L + 1;
  auto found = PerfectSetSearch(p, L + 1).run();
  if (!found) {
    fail(ErrorKind::capability,
         "no perfect difference set found in Z_" + std::to_string(p));
  }
  auto set = DifferenceSet::certify(p, std::move(*found));
  if (set.level() != DiffLevel::perfect) {
    fail(ErrorKind::capability, "search produced a non-perfect set in Z_" + std::to_string(p));
  }
  return set;
}

DifferenceSet build_rds(std::uint64_t p, std::uint64_t spacing) {
  require(spacing >= 2, "RDS spacing must be at least 2");
  require(p >= spacing, "RDS requires p >= spacing");
  std::vector<std::uint64_t> elements;
  for (std::uint64_t a = 0; a < spacing; ++a) elements.push_back(a);
  for (std::uint64_t k = 2; k <= p / spacing; ++k) elements.push_back(k * spacing - 1);
  return DifferenceSet::certify(p, std::move(elements));
}

}  // namespace machhop
