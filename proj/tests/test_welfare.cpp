#include <catch_amalgamated.hpp>

#include <cmath>

#include "civspec/error.hpp"
#include "civspec/politics.hpp"
#include "civspec/production.hpp"
#include "civspec/reforms.hpp"
#include "civspec/welfare.hpp"
#include "fixtures.hpp"

using namespace civspec;
using civspec::testing::default_economy;
using Catch::Approx;

TEST_CASE("dispersion penalty") {
  CHECK(dispersion(0.3, 0.3, 0.4) == 0.0);
  CHECK(dispersion(0.2, 0.4, 0.25) ==
        Approx(std::log(0.25) - (0.75 * std::log(0.2) + 0.25 * std::log(0.4))));
  CHECK(dispersion(0.2, 0.4, 0.25) > 0.0);
  CHECK(dispersion(0.02, 0.04, 0.25) == Approx(dispersion(0.2, 0.4, 0.25)));
  CHECK_THROWS_AS(dispersion(0.0, 0.4, 0.25), Error);
}

TEST_CASE("service welfare representation") {
  const auto gov = GovernanceTech::make(0.5, 0.125, 0.3, 1.0);
  const auto eq = welfare_from_outcome(political_equilibrium(gov, 1.0, 0.3, 0.4, 0.4), gov.tau);
  CHECK(eq.service_welfare == Approx(std::log(eq.R)).margin(1e-12));

  const auto w = welfare_from_outcome(political_equilibrium(gov, 1.0, 0.3, 0.2, 0.7), gov.tau);
  CHECK(std::abs(w.service_welfare - (std::log(w.R) - w.dispersion)) <= 1e-10);

  auto scaled = w.outcome;
  scaled.t_S *= 2.0;
  scaled.t_M *= 2.0;
  CHECK(service_welfare(scaled) == Approx(w.service_welfare + std::log(2.0)));
  scaled.t_M = 0.0;
  CHECK_THROWS_AS(service_welfare(scaled), Error);
}

TEST_CASE("total welfare") {
  const auto econ = default_economy();
  const auto po = productive_optimum(econ);
  const auto w = total_welfare(econ, po.allocation);
  CHECK(w.W == Approx((1 - econ.gov.tau) * w.Y + w.service_welfare));
  CHECK(w.dispersion > 0.0);

  auto taxed = econ;
  taxed.gov.tau = 0.5;
  const auto wt = total_welfare(taxed, po.allocation);
  CHECK(wt.service_welfare - w.service_welfare == Approx(std::log(0.5 / 0.3)));

  const auto corner = minimal_integrator_allocation(SpecialistDesign::corners(econ.q), econ);
  auto no_m = corner;
  no_m.m = 0.0;
  CHECK_THROWS_AS(total_welfare(econ, no_m), Error);
}

TEST_CASE("decomposition") {
  const auto econ = default_economy();
  const Family flat = [&](double) {
    return FamilyPoint{econ, productive_optimum(econ).allocation};
  };
  const auto d0 = decompose_along(flat, 0.3);
  CHECK(d0.productive == Approx(0.0).margin(1e-12));
  CHECK(d0.governance == Approx(0.0).margin(1e-12));
  CHECK(d0.targeting == Approx(0.0).margin(1e-12));

  DecomposeOptions unit;
  unit.lo = 0.0;
  unit.hi = 1.0;
  for (double b : {0.0, 0.4}) {
    const auto d = decompose_along(broadening_family(econ), b, unit);
    CHECK(d.residual <= 1e-4);
    CHECK_FALSE(d.step_warning);
  }
  CHECK(decompose_along(broadening_family(econ), 0.0, unit).governance > 0.0);
  for (double a : {0.0, 0.5, 1.0}) CHECK(decompose_along(interface_family(econ), a, unit).residual <= 1e-4);
}

TEST_CASE("civic benchmark") {
  const auto econ = default_economy();
  const auto cb = civic_benchmark(econ.civ, econ.tech, 40);
  const auto gk = group_knowledge(productive_optimum(econ).allocation, econ);
  CHECK(cb.B_max < 1.0);
  CHECK(cb.B_max >= gk.B_M);

  const auto small_p = CivicParams::make(econ.civ.u, 1e-4);
  CHECK(civic_benchmark(small_p, econ.tech, 40).B_max == Approx(1.0).margin(1e-3));
}
