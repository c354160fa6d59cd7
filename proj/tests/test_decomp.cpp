#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "starconf/decomp.hpp"
#include "starconf/errors.hpp"
#include "starconf/star.hpp"

using namespace starconf;

namespace {

/// Brute-force containment: every generator of I^{(m)} (by definition, from
/// the oracle's component test) lies in the r-th power built by repeated
/// multiplication of the generator list.
bool oracle_contained(int s, int c, int m, int r) {
  const auto skel = skeleton_ideal(StarConfig::make(s, c));
  std::vector<ExponentTuple> pow{ExponentTuple(static_cast<std::size_t>(s))};
  for (int k = 0; k < r; ++k) {
    std::vector<ExponentTuple> next;
    for (const auto& a : pow)
      for (const auto& g : skel.gens()) next.push_back(product(a, g));
    auto mins = oracle::minimal_elements(next);
    pow.assign(mins.begin(), mins.end());
  }
  std::vector<ExponentTuple> sym;
  for (const auto& mu : oracle::monomials_up_to(static_cast<std::size_t>(s), m * (s - c + 1)))
    if (oracle::symbolic_by_components(mu, s, c, m)) sym.push_back(mu);
  for (const auto& g : oracle::minimal_elements(sym))
    if (!oracle::in_ideal(g, pow)) return false;
  return true;
}

}  // namespace

TEST_CASE("decomposition examples") {
  CHECK(rhs_decomposition(4, 2, 1) == skeleton_ideal(StarConfig::make(4, 2)));
  CHECK(verify_power_decomposition(4, 2, 2));
  CHECK(verify_power_decomposition(5, 3, 2));
  CHECK(verify_power_decomposition(4, 2, 3));
  CHECK(verify_power_decomposition(4, 3, 2));
  CHECK(verify_saturation(4, 2, 2));
  CHECK(verify_saturation(4, 3, 2));
  CHECK(saturation_rhs(4, 3, 2) == symbolic_power(StarConfig::make(4, 3), 2));
}

TEST_CASE("saturation of the skeleton is itself") {
  for (int s = 3; s <= 5; ++s)
    for (int c = 1; c < s; ++c) {
      const auto skel = skeleton_ideal(StarConfig::make(s, c));
      CHECK(saturate(skel, maximal_ideal_power(static_cast<std::size_t>(s), 1)) == skel);
    }
}

TEST_CASE("decomposition grid") {
  for (int s = 3; s <= 5; ++s)
    for (int c = 2; c < s; ++c)
      for (int ell = 1; ell <= 3; ++ell) {
        INFO("s=" << s << " c=" << c << " l=" << ell);
        CHECK(verify_power_decomposition(s, c, ell));
        CHECK(verify_saturation(s, c, ell));
      }
}

TEST_CASE("power cap applies to decomposition") {
  Caps caps;
  caps.power = 2;
  CHECK_THROWS_AS(verify_power_decomposition(4, 2, 3, caps), ResourceError);
  CHECK_THROWS_AS(symbolic_in_power(4, 2, 3, 3, caps), ResourceError);
}

TEST_CASE("containment examples") {
  CHECK(symbolic_in_power(4, 2, 1, 1));
  CHECK_FALSE(symbolic_in_power(4, 2, 1, 2));
  CHECK(symbolic_in_power(4, 2, 3, 2));
  CHECK_FALSE(symbolic_in_power(4, 2, 2, 2));
  CHECK_THROWS_AS(symbolic_in_power(4, 2, 0, 1), UsageError);
}

TEST_CASE("containment agrees with the brute-force oracle") {
  for (int s = 3; s <= 4; ++s)
    for (int c = 1; c < s; ++c)
      for (int m = 1; m <= 5; ++m)
        for (int r = 1; r <= 3; ++r) {
          INFO("s=" << s << " c=" << c << " m=" << m << " r=" << r);
          CHECK(symbolic_in_power(s, c, m, r) == oracle_contained(s, c, m, r));
        }
}

TEST_CASE("criterion") {
  CHECK_FALSE(criterion(3, 1, 1));
  CHECK(criterion(3, 12, 10));
  CHECK_FALSE(criterion(4, 9, 5));
  CHECK_THROWS_AS(criterion(2, 1, 1), UsageError);
  CHECK_THROWS_AS(criterion(3, 0, 1), UsageError);
  CHECK(criterion(4, 9, 5) == !symbolic_in_power(5, 3, 9, 5));
}

TEST_CASE("floor criterion agrees with containment") {
  for (int m = 1; m <= 20; ++m)
    for (int r = 1; r <= 8; ++r) {
      INFO("N=3 m=" << m << " r=" << r);
      CHECK(floor_criterion(3, m, r) == !symbolic_in_power(4, 2, m, r));
    }
  for (int m = 1; m <= 14; ++m)
    for (int r = 1; r <= 5; ++r) {
      INFO("N=4 m=" << m << " r=" << r);
      CHECK(floor_criterion(4, m, r) == !symbolic_in_power(5, 3, m, r));
    }
}

TEST_CASE("closed-form criterion misses the cells where the floor matters") {
  // x0^k...xN^k with N-1 exponents summing to m sits in I^(m) but has degree
  // below 3r, so it is outside I^r although criterion() predicts containment.
  struct Cell {
    int n_proj, m, r, k;
  };
  for (const auto& cell : {Cell{3, 4, 3, 2}, Cell{3, 10, 7, 5}, Cell{4, 3, 2, 1}, Cell{4, 12, 7, 4}}) {
    INFO("N=" << cell.n_proj << " m=" << cell.m << " r=" << cell.r);
    const int s = cell.n_proj + 1;
    const ExponentTuple mu(std::vector<std::int32_t>(static_cast<std::size_t>(s), cell.k));
    CHECK(oracle::symbolic_by_components(mu, s, s - 2, cell.m));
    CHECK(mu.degree() < 3 * cell.r);
    CHECK_FALSE(criterion(cell.n_proj, cell.m, cell.r));
    CHECK(floor_criterion(cell.n_proj, cell.m, cell.r));
  }
  std::vector<std::pair<int, int>> disagreements;
  for (int m = 1; m <= 20; ++m)
    for (int r = 1; r <= 8; ++r)
      if (criterion(3, m, r) != floor_criterion(3, m, r)) disagreements.emplace_back(m, r);
  CHECK(disagreements == std::vector<std::pair<int, int>>{{4, 3}, {10, 7}});
}

TEST_CASE("exact resurgence values and bounds") {
  CHECK(rho_exact(4, 2) == Rational(3, 2));
  CHECK(rho_exact(4, 3) == Rational(3, 2));
  CHECK(rho_exact(5, 3) == Rational(9, 5));
  CHECK(rho_exact(5, 4) == Rational(8, 5));
  CHECK(rho_exact(6, 1) == Rational(1));
  CHECK_FALSE(rho_exact(6, 2).has_value());
  CHECK(rho_lower_bound(4, 2) == Rational(3, 2));
  CHECK(rho_lower_bound(4, 3) == Rational(3, 2));
  for (int s = 3; s <= 8; ++s)
    for (int c = 1; c < s; ++c) {
      const auto exact = rho_exact(s, c);
      if (exact) CHECK(*exact >= rho_lower_bound(s, c));
    }
}

TEST_CASE("resurgence scan") {
  const auto report = resurgence_scan(4, 2, 20, 8, {}, 2);
  CHECK(report.cells.size() == 160);
  REQUIRE(report.empirical_sup.has_value());
  CHECK(*report.empirical_sup == Rational(10, 7));
  REQUIRE(report.sup_witness.has_value());
  CHECK(report.sup_witness->m == 10);
  CHECK(report.sup_witness->r == 7);
  CHECK(report.exact == Rational(3, 2));
  CHECK(*report.empirical_sup <= *report.exact);
  REQUIRE(report.criterion_agreement.has_value());
  CHECK_FALSE(*report.criterion_agreement);
  REQUIRE(report.criterion_disagreements.size() == 2);
  CHECK(report.criterion_disagreements[0].m == 4);
  CHECK(report.criterion_disagreements[0].r == 3);
  CHECK(report.criterion_disagreements[1].m == 10);
  CHECK(report.criterion_disagreements[1].r == 7);
  REQUIRE(report.floor_criterion_agreement.has_value());
  CHECK(*report.floor_criterion_agreement);

  // monotone in m at fixed r
  for (const auto& cell : report.cells)
    if (cell.contained && cell.m < 20) CHECK(report.cells[static_cast<std::size_t>(cell.m * 8 + cell.r - 1)].contained);
}

TEST_CASE("scan is independent of the thread count") {
  const auto a = resurgence_scan(4, 3, 8, 4, {}, 1);
  const auto b = resurgence_scan(4, 3, 8, 4, {}, 4);
  REQUIRE(a.cells.size() == b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) CHECK(a.cells[i].contained == b.cells[i].contained);
  CHECK(a.empirical_sup == b.empirical_sup);
  CHECK(*a.empirical_sup <= Rational(3, 2));
}

TEST_CASE("property: symbolic containment I^(m) in I^(r) iff m >= r") {
  for (int s = 3; s <= 5; ++s)
    for (int c = 1; c < s; ++c)
      for (int m = 1; m <= 4; ++m)
        for (int r = 1; r <= 4; ++r) {
          const auto cfg = StarConfig::make(s, c);
          CHECK(contains(symbolic_power(cfg, r), symbolic_power(cfg, m)) == (m >= r));
        }
}

TEST_CASE("property: non-containment for m < r") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const int s = std::uniform_int_distribution<int>(3, 5)(rng);
    const int c = std::uniform_int_distribution<int>(1, s - 1)(rng);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    const int m = std::uniform_int_distribution<int>(1, r - 1)(rng);
    CHECK_FALSE(symbolic_in_power(s, c, m, r));
  }
}
