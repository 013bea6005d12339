#include <doctest.h>

#include <algorithm>

#include "machhop/diffsets.hpp"
#include "machhop/error.hpp"
#include "machhop/numtheory.hpp"

using namespace machhop;

namespace {

std::vector<std::uint64_t> elems(const DifferenceSet& d) {
  return {d.elements().begin(), d.elements().end()};
}

}  // namespace

TEST_CASE("verify_difference_set classification") {
  const std::vector<std::uint64_t> fano{0, 1, 3};
  const auto perfect = verify_difference_set(7, fano);
  CHECK(perfect.level == DiffLevel::perfect);
  for (std::uint64_t l = 1; l < 7; ++l) CHECK(perfect.witness[l] == 1);

  const std::vector<std::uint64_t> single{0};
  const auto none = verify_difference_set(2, single);
  CHECK(none.level == DiffLevel::neither);
  CHECK(none.first_unrealized == 1);

  const std::vector<std::uint64_t> relaxed{0, 1, 2, 3, 4, 9, 14, 19};
  CHECK(verify_difference_set(23, relaxed).level == DiffLevel::relaxed);
}

TEST_CASE("verify_difference_set rejects malformed input") {
  const std::vector<std::uint64_t> out_of_range{0, 7};
  CHECK_THROWS_AS(verify_difference_set(7, out_of_range), Error);
  const std::vector<std::uint64_t> dup{0, 1, 1};
  try {
    (void)verify_difference_set(7, dup);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::malformed_input);
  }
}

TEST_CASE("find_perfect_difference_set returns the canonical sets") {
  // Frozen from brute-force enumeration of subsets containing {0, 1} in
  // lexicographic order.
  CHECK(elems(find_perfect_difference_set(2)) == std::vector<std::uint64_t>{0, 1, 3});
  CHECK(elems(find_perfect_difference_set(3)) == std::vector<std::uint64_t>{0, 1, 3, 9});
  const auto l5 = find_perfect_difference_set(5);
  CHECK(l5.modulus() == 31);
  CHECK(elems(l5) == std::vector<std::uint64_t>{0, 1, 3, 8, 12, 18});
  CHECK(l5.level() == DiffLevel::perfect);

  const auto l8 = find_perfect_difference_set(8);
  CHECK(l8.modulus() == 73);
  CHECK(l8.size() == 9);
  CHECK(verify_difference_set(73, l8.elements()).level == DiffLevel::perfect);
}

TEST_CASE("find_perfect_difference_set error paths") {
  try {
    (void)find_perfect_difference_set(4);  // 21 is not prime
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::precondition);
  }
  try {
    (void)find_perfect_difference_set(17);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::capability);
    CHECK(std::string(e.what()).find("11") != std::string::npos);
  }
}

TEST_CASE("perfect sets have |D|(|D|-1) = p-1 and survive rotation") {
  for (std::uint64_t L : {2, 3, 5, 8}) {
    const auto d = find_perfect_difference_set(L);
    const auto p = d.modulus();
    CHECK(d.size() * (d.size() - 1) == p - 1);
    for (std::uint64_t shift = 0; shift < p; ++shift) {
      REQUIRE(d.shifted(shift).level() == DiffLevel::perfect);
    }
  }
}

TEST_CASE("build_rds") {
  const auto d = build_rds(23, 5);
  CHECK(elems(d) == std::vector<std::uint64_t>{0, 1, 2, 3, 4, 9, 14, 19});
  CHECK(d.level() == DiffLevel::relaxed);

  CHECK(elems(build_rds(4, 2)) == std::vector<std::uint64_t>{0, 1, 3});

  const auto big = build_rds(101, ceil_sqrt(101));
  CHECK(big.size() == 19);
  CHECK(big.size() * big.size() < 4 * 101);  // |D| < 2 sqrt(p)
  CHECK(big.level() != DiffLevel::neither);

  CHECK_THROWS_AS(build_rds(10, 1), Error);
  CHECK_THROWS_AS(build_rds(3, 4), Error);
}

TEST_CASE("spacing RDS is always relaxed and smaller than 2 sqrt(p)") {
  for (std::uint64_t p = 4; p <= 100000; ++p) {
    const std::uint64_t spacing = ceil_sqrt(p);
    const std::uint64_t size = spacing + p / spacing - 1;
    REQUIRE(size * size < 4 * p);
    REQUIRE(size == spacing_rds_size(p));
  }
  for (std::uint64_t p = 4; p <= 400; ++p) {
    REQUIRE_MESSAGE(build_rds(p, ceil_sqrt(p)).level() != DiffLevel::neither, "p=" << p);
  }
}

TEST_CASE("complement") {
  const auto d = find_perfect_difference_set(2);
  CHECK(d.complement() == std::vector<std::uint64_t>{2, 4, 5, 6});
  CHECK(d.contains(3));
  CHECK_FALSE(d.contains(2));
}
