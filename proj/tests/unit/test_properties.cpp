#include <doctest.h>

#include "machhop/simulator.hpp"
#include "property_checks.hpp"

namespace {

constexpr int kInstances = 150;

void require_clean(const props::Outcome& o) {
  INFO(o.first_failure);
  CHECK(o.instances == kInstances);
  CHECK(o.violations == 0);
}

}  // namespace

TEST_CASE("report consistency") { require_clean(props::report_consistency(1, kInstances)); }

TEST_CASE("drift periodicity") { require_clean(props::drift_periodicity(2, kInstances)); }

TEST_CASE("swapping users translates the coincidence slots") {
  require_clean(props::swap_translation(3, kInstances));
}

TEST_CASE("perfect difference sets are closed under rotation") {
  require_clean(props::pds_rotation_closure(4, kInstances));
}

TEST_CASE("ortho members are Latin squares") { require_clean(props::latin_square(5, kInstances)); }

TEST_CASE("distinct ortho members are orthogonal") {
  require_clean(props::orthogonality(6, kInstances));
}

// Swapping with a negated drift keeps the coincidence set only up to a
// translation, so T itself can change.
TEST_CASE("swapped users can see a different T") {
  using namespace machhop;
  const ChSequence a({0, 1, 1}, 2, "a");
  const ChSequence b({0, 0, 1}, 2, "b");
  const auto full = AvailableChannelSet::full(2);
  const auto fwd = run(a, b, 1, 6, full, full);
  const auto back = run(b, a, 2, 6, full, full);
  CHECK(fwd.ttr == 1u);
  CHECK(back.ttr == 2u);
}
