#include <catch_amalgamated.hpp>

#include <cmath>

#include "civspec/competitive.hpp"
#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/politics.hpp"
#include "civspec/sampling.hpp"
#include "fixtures.hpp"

using namespace civspec;
using civspec::testing::default_economy;
using civspec::testing::sv;
using Catch::Approx;

TEST_CASE("support wages") {
  const auto econ = default_economy();
  const auto w = support_wages(econ);
  CHECK(w.w_S - w.w_M == Approx(w.Delta_q).margin(1e-12));
  CHECK(w.w_S + w.beta * w.w_M == Approx(w.V_tilde).margin(1e-12));
  CHECK(w.w_M > 0.0);
  CHECK(w.indifference_residual <= 1e-10);
  CHECK(w.zero_profit_residual <= 1e-10);
  CHECK(w.V_tilde == Approx(0.7));
  CHECK(econ.theta * w.w_M / w.w_S < learning_constants(econ.tech).theta_bar);

  const auto po = productive_optimum(econ);
  const auto gk = group_knowledge(po.allocation, econ);
  CHECK(w.Delta_q == Approx(std::log(gk.B_M / gk.B_S)));
}

TEST_CASE("support wages need the continuation gap below net value") {
  const auto gain = default_economy(0.5, 0.1);
  CHECK_THROWS_AS(support_wages(gain), Error);
}

TEST_CASE("unit cost") {
  const auto econ = default_economy();
  const auto corners = SpecialistDesign::corners(econ.q);
  Vec z(3);
  for (std::size_t k = 0; k < 3; ++k) z[k] = econ.q[k] * (1 - econ.q[k]);
  for (double r : {0.0, 0.3, 2.0}) {
    CHECK(unit_cost(corners, r, econ) ==
          Approx(1.0 + econ.theta * r * gamma_index(econ.tech, z)).epsilon(1e-12));
  }
  for (const auto& x : simplex_grid(3, 8)) {
    if (coverage(x, econ.q) <= 0.0) continue;
    CHECK(unit_cost(SpecialistDesign::corners(x), 0.0, econ) >= unit_cost(corners, 0.0, econ) - 1e-15);
  }

  Rng rng(41);
  const auto lc = learning_constants(econ.tech);
  const double r = 0.9 * lc.c_ell / (lc.L_Gamma * econ.theta);
  for (int i = 0; i < 200; ++i) {
    const double wgt = random_uniform(rng, 0.1, 0.9);
    const auto d = SpecialistDesign::make({{random_simplex(rng, 3), wgt, std::nullopt},
                                           {random_simplex(rng, 3), 1 - wgt, std::nullopt}},
                                          econ.tech);
    CHECK(unit_cost(cornerize(d), r, econ) <= unit_cost(d, r, econ) + 1e-12);
  }
}

TEST_CASE("ratio bound") {
  const auto econ = default_economy();
  const auto rb = ratio_bound(econ);
  const double Vt = 0.7;
  const double q1 = 0.125;
  const double Bu = std::pow(2.0, -0.5) * 0.3;
  CHECK(rb.B_under == Approx(Bu));
  CHECK(rb.Delta_bar == Approx(std::log(1 / Bu)));
  CHECK(rb.r_bar == Approx(2 * (Vt + 2 * rb.Delta_bar) / (Vt * q1)));
  CHECK(rb.theta_cap == Approx(Vt * q1 / (4 * rb.Delta_bar)));
  CHECK_FALSE(rb.uniqueness_holds);

  auto rich = econ;
  rich.V = 1e6;
  CHECK(ratio_bound(rich).r_bar < rb.r_bar);
  CHECK(ratio_bound(rich).r_bar == Approx(2 / q1).epsilon(1e-4));

  const auto w = support_wages(econ);
  CHECK(w.w_M / w.w_S <= rb.r_bar);
}

TEST_CASE("no deviation inside the uniqueness cutoffs") {
  auto econ = default_economy();
  econ.theta = 1.5e-4;
  REQUIRE(ratio_bound(econ).uniqueness_holds);
  const auto w = support_wages(econ);
  BruteForceOptions grid;
  grid.resolution = 4;
  grid.weight_resolution = 8;
  const auto d = no_deviation_check(w, econ, grid, true);
  CHECK(d.passed);
  CHECK(d.worst_margin >= -1e-9);
}

TEST_CASE("deviation check can throw") {
  auto econ = default_economy(0.9);
  const auto w = support_wages(econ);
  BruteForceOptions grid;
  grid.resolution = 4;
  grid.weight_resolution = 4;
  const auto d = no_deviation_check(w, econ, grid);
  if (!d.passed) CHECK_THROWS_AS(no_deviation_check(w, econ, grid, true), Error);
  CHECK(d.evaluated > 0);
}
