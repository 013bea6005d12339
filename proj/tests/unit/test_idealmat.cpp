#include <doctest.h>

#include "machhop/error.hpp"
#include "machhop/idealmat.hpp"
#include "oracles.hpp"

using namespace machhop;

namespace {

std::vector<std::vector<int>> dense(const IdealMatrix& m) {
  const auto p = m.size();
  std::vector<std::vector<int>> g(p, std::vector<int>(p, 0));
  for (std::uint64_t i = 0; i < p; ++i) {
    for (std::uint64_t j = 0; j < p; ++j) g[i][j] = m.at(i, j) ? 1 : 0;
  }
  return g;
}

}  // namespace

TEST_CASE("triangular p=7 reproduces the worked dot pattern") {
  const auto m = build_ideal_matrix(7, IdealPreset::triangular);
  const std::vector<std::pair<std::uint64_t, std::uint64_t>> dots{
      {6, 0}, {5, 1}, {3, 2}, {0, 3}, {3, 4}, {5, 5}, {6, 6}};
  for (const auto& [row, col] : dots) CHECK(m.dot_row(col) == row);
  CHECK(render_dense(m) ==
        "0 0 0 1 0 0 0\n"
        "0 0 0 0 0 0 0\n"
        "0 0 0 0 0 0 0\n"
        "0 0 1 0 1 0 0\n"
        "0 0 0 0 0 0 0\n"
        "0 1 0 0 0 1 0\n"
        "1 0 0 0 0 0 1\n");
}

TEST_CASE("direct coefficient evaluation") {
  const auto m = build_ideal_matrix(5, QuadraticCoefficients{1, 0, 0});
  CHECK(m.table() == std::vector<std::uint32_t>{0, 1, 4, 4, 1});
  CHECK(m.coefficients() == QuadraticCoefficients{1, 0, 0});
}

TEST_CASE("pentagonal p=13 matches j(3j-1)/2 and is ideal") {
  const auto m = build_ideal_matrix(13, IdealPreset::pentagonal);
  for (std::int64_t j = 0; j < 13; ++j) {
    const std::int64_t pent = j * (3 * j - 1) / 2;
    CHECK(m.f(static_cast<std::uint64_t>(j)) == static_cast<std::uint32_t>(pent % 13));
  }
  CHECK(verify_ideal(m).passed);
}

TEST_CASE("correlation examples") {
  const auto m = build_ideal_matrix(7, IdealPreset::triangular);
  CHECK(correlation(m, 0, 0) == 7);
  CHECK(correlation(m, 3, 4) == 1);
  CHECK(correlation(m, 2, 0) == 0);
}

TEST_CASE("fast correlation equals the dense double sum") {
  for (std::uint64_t p : {5, 7, 11, 13}) {
    for (std::uint64_t c2 = 1; c2 < p; c2 += 2) {
      const auto m = build_ideal_matrix(p, QuadraticCoefficients{c2, 3, 1});
      const auto g = dense(m);
      for (std::uint64_t d = 0; d < p; ++d) {
        for (std::uint64_t t = 0; t < p; ++t) {
          REQUIRE(correlation(m, d, t) == oracle::dense_correlation(g, d, t));
        }
      }
    }
  }
  // Also on a non-ideal table.
  const auto flat = IdealMatrix::from_table(7, std::vector<std::uint32_t>(7, 0));
  const auto g = dense(flat);
  for (std::uint64_t d = 0; d < 7; ++d) {
    for (std::uint64_t t = 0; t < 7; ++t) {
      REQUIRE(correlation(flat, d, t) == oracle::dense_correlation(g, d, t));
    }
  }
}

TEST_CASE("verify_ideal") {
  CHECK(verify_ideal(build_ideal_matrix(7, IdealPreset::triangular)).passed);
  CHECK(verify_ideal(build_ideal_matrix(23, QuadraticCoefficients{5, 7, 11})).passed);

  const auto flat = IdealMatrix::from_table(7, std::vector<std::uint32_t>(7, 0));
  const auto cert = verify_ideal(flat);
  CHECK_FALSE(cert.passed);
  REQUIRE(cert.violation.has_value());
  CHECK(cert.violation->second != 0);
  CHECK((cert.violation_value == 0 || cert.violation_value == 7));
}

TEST_CASE("every c2 gives an ideal matrix with correlation sum p^2") {
  for (std::uint64_t p : {5, 7, 11, 13, 23, 31}) {
    for (std::uint64_t c2 = 1; c2 < p; ++c2) {
      const auto cert = verify_ideal(build_ideal_matrix(p, QuadraticCoefficients{c2, 0, 0}));
      REQUIRE_MESSAGE(cert.passed, "p=" << p << " c2=" << c2);
      REQUIRE(cert.correlation_sum == p * p);
    }
  }
}

TEST_CASE("collision equation has exactly one solution column for tau != 0") {
  // 2 c2 tau j = -c2 tau^2 - c1 tau - delta (mod p)
  const std::uint64_t p = 13;
  const QuadraticCoefficients q{4, 6, 2};
  const auto m = build_ideal_matrix(p, q);
  for (std::uint64_t delta = 0; delta < p; ++delta) {
    for (std::uint64_t tau = 1; tau < p; ++tau) {
      int solutions = 0;
      std::uint64_t solved_j = 0;
      for (std::uint64_t j = 0; j < p; ++j) {
        const std::uint64_t lhs = (2 * q.c2 * tau * j) % p;
        const std::uint64_t rhs = (p - (q.c2 * tau * tau + q.c1 * tau + delta) % p) % p;
        if (lhs == rhs) {
          ++solutions;
          solved_j = j;
        }
      }
      REQUIRE(solutions == 1);
      // The solved column is the one whose dot meets the (delta, tau) copy.
      CHECK((m.dot_row(solved_j) + delta) % p == m.dot_row((solved_j + tau) % p));
    }
  }
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(build_ideal_matrix(9, QuadraticCoefficients{1, 0, 0}), Error);
  CHECK_THROWS_AS(build_ideal_matrix(7, QuadraticCoefficients{0, 1, 0}), Error);
  CHECK_THROWS_AS(build_ideal_matrix(7, QuadraticCoefficients{7, 1, 0}), Error);
  CHECK_THROWS_AS(preset_coefficients(2, IdealPreset::triangular), Error);
}
