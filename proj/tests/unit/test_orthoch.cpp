#include <doctest.h>

#include <set>

#include "machhop/error.hpp"
#include "machhop/orthoch.hpp"
#include "goldens.hpp"
#include "oracles.hpp"

using namespace machhop;

namespace {

using golden::Grid;
using golden::kExtended5r3;
using golden::kFamily5;
using golden::to_grid;

}  // namespace

TEST_CASE("family p=5 reproduces the four displayed matrices") {
  const auto family = build_ortho_family(5);
  REQUIRE(family.size() == 4);
  for (std::uint64_t r = 1; r <= 4; ++r) {
    CHECK(to_grid(family.member(r).matrix) == kFamily5[r - 1]);
    CHECK(family.member(r).id == r);
  }
  CHECK_THROWS_AS(build_ortho_family(6), Error);
}

TEST_CASE("row 0 of every member is the identity") {
  for (std::uint64_t p : {3, 7, 11}) {
    const auto family = build_ortho_family(p);
    for (const auto& m : family.members()) {
      for (std::size_t j = 0; j < p; ++j) CHECK(m.matrix.at(0, j) == j);
    }
  }
}

TEST_CASE("family p=13 pairwise certifies 2D-MRD") {
  const auto family = build_ortho_family(13);
  const auto report = verify_ortho_family(family, 13);
  CHECK(report.passed);
  CHECK(report.pairs_checked == 12 * 11);
}

TEST_CASE("verify_ortho_pair") {
  const auto family = build_ortho_family(5);
  const auto cert = verify_ortho_pair(family.member(3), family.member(4), 5);
  CHECK(cert.passed);
  CHECK(cert.constructive_witness_ok);
  CHECK(oracle::grid_has_coincidence(to_grid(family.member(1).matrix),
                                     to_grid(family.member(2).matrix), 0, 0, 0));

  const auto family7 = build_ortho_family(7);
  CHECK_THROWS_AS(verify_ortho_pair(family7.member(2), family7.member(2), 7), Error);
  CHECK_THROWS_AS(verify_ortho_pair(family.member(1), family7.member(2), 5), Error);
}

TEST_CASE("constructive witness agrees with exhaustive search") {
  for (std::uint64_t p : {5, 7, 13}) {
    const auto family = build_ortho_family(p);
    const auto n = static_cast<std::uint32_t>(p);
    for (const auto& a : family.members()) {
      for (const auto& b : family.members()) {
        if (a.id == b.id) continue;
        const auto ga = to_grid(a.matrix);
        const auto gb = to_grid(b.matrix);
        const auto cert = verify_ortho_pair(a, b, n);
        REQUIRE(cert.constructive_witness_ok);
        REQUIRE_FALSE(cert.missing.has_value());
        if (p == 5) {
          for (std::uint64_t d = 0; d < p; ++d) {
            for (std::uint64_t t = 0; t < p; ++t) {
              for (std::uint32_t k = 0; k < n; ++k) {
                REQUIRE(oracle::grid_has_coincidence(ga, gb, d, t, k));
              }
            }
          }
        }
      }
    }
  }
}

TEST_CASE("verify_cover") {
  const auto family = build_ortho_family(5);
  for (const auto& m : family.members()) {
    CHECK(verify_cover(m.matrix, 5).passed);
    CHECK(verify_cover(m.matrix, 1).passed);
  }
  // An r = 0 matrix has constant columns.
  std::vector<Channel> cells;
  for (int i = 0; i < 5; ++i) {
    for (Channel j = 0; j < 5; ++j) cells.push_back(j);
  }
  const ChMatrix flat(5, 5, cells, 5, MatrixRole::ortho_member);
  const auto cert = verify_cover(flat, 2);
  CHECK_FALSE(cert.passed);
  CHECK(cert.missing == std::pair<std::size_t, Channel>{0, 1});
}

TEST_CASE("extended matrix for N=4, r=3") {
  const auto ext = ortho_extended_matrix(5, 3);
  CHECK(ext.role() == MatrixRole::ortho_extended);
  CHECK(to_grid(ext) == kExtended5r3);
}

TEST_CASE("ORTHO-CH with a forced ID keeps available cells and replaces the rest") {
  const AvailableChannelSet avail({0, 1, 3}, 4);
  const auto s = ortho_ch(avail, 42, Channel{3});
  REQUIRE(s.period() == 55);
  CHECK(s.provenance().find("r=3") != std::string::npos);
  CHECK(s.provenance().find("seed=42") != std::string::npos);
  for (std::size_t t = 0; t < 55; ++t) {
    const Channel raw = kExtended5r3[t / 11][t % 11];
    if (avail.contains(raw)) {
      CHECK(s[t] == raw);
    } else {
      CHECK(avail.contains(s[t]));
    }
  }
}

TEST_CASE("ORTHO-CH constant sequence when only channel 0 is available") {
  const AvailableChannelSet zero({0}, 4);
  const auto s = ortho_ch(zero, 9);
  CHECK(s.period() == 55);
  CHECK(std::all_of(s.values().begin(), s.values().end(), [](Channel c) { return c == 0; }));
  const auto wide = ortho_ch(AvailableChannelSet({0}, 12), 1);
  CHECK(wide.period() == 351);
}

TEST_CASE("ORTHO-CH full availability only replaces the channel-4 cells") {
  const auto avail = AvailableChannelSet::full(4);
  for (std::uint64_t seed : {1, 2, 3}) {
    const auto s = ortho_ch(avail, seed);
    const auto r = *pick_id_channel(avail, seed);
    const auto ext = ortho_extended_matrix(5, r);
    std::size_t replaced = 0;
    for (std::size_t t = 0; t < s.period(); ++t) {
      const Channel raw = ext.cells()[t];
      if (raw == 4) {
        ++replaced;
        CHECK(s[t] < 4);
      } else {
        CHECK(s[t] == raw);
      }
    }
    CHECK(replaced == 10);  // once per column of each C copy
  }
}

TEST_CASE("ID channel selection") {
  const AvailableChannelSet pair({0, 2}, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(pick_id_channel(pair, seed) == 2u);
  CHECK_FALSE(pick_id_channel(AvailableChannelSet({0}, 4), 1).has_value());

  const AvailableChannelSet many({0, 1, 2, 3, 5}, 6);
  std::set<Channel> picked;
  for (std::uint64_t seed = 0; seed < 200; ++seed) picked.insert(*pick_id_channel(many, seed));
  CHECK(picked == std::set<Channel>{1, 2, 3, 5});
}

TEST_CASE("ORTHO-CH preconditions") {
  CHECK_THROWS_AS(AvailableChannelSet({}, 4), Error);
  CHECK_THROWS_AS(AvailableChannelSet({4}, 4), Error);
  const AvailableChannelSet avail({0, 1, 3}, 4);
  CHECK_THROWS_AS(ortho_ch(avail, 1, Channel{2}), Error);
  CHECK_THROWS_AS(ortho_ch(avail, 1, Channel{0}), Error);
}

TEST_CASE("ORTHO-CH is reproducible per seed") {
  const AvailableChannelSet avail({1, 2}, 12);
  CHECK(ortho_ch(avail, 5) == ortho_ch(avail, 5));
  bool differs = false;
  for (std::uint64_t seed = 6; seed < 12 && !differs; ++seed) {
    differs = ortho_ch(avail, seed) != ortho_ch(avail, 5);
  }
  CHECK(differs);
}

TEST_CASE("mttr_bound") {
  CHECK(mttr_bound(4) == 55);
  CHECK(mttr_bound(5) == 55);
  CHECK(mttr_bound(12) == 351);
  CHECK(mttr_bound(1) == 10);
}

TEST_CASE("replace_unavailable") {
  const ChSequence s({0, 1, 2, 3, 2, 1}, 4, "t");
  const AvailableChannelSet avail({1, 3}, 4);
  const auto r = replace_unavailable(s, avail, 7);
  for (std::size_t t = 0; t < s.period(); ++t) {
    CHECK(avail.contains(r[t]));
    if (avail.contains(s[t])) CHECK(r[t] == s[t]);
  }
  CHECK_THROWS_AS(replace_unavailable(s, AvailableChannelSet({1}, 5), 7), Error);
}
