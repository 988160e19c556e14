#include <catch_amalgamated.hpp>

#include <cmath>

#include "civspec/error.hpp"
#include "civspec/learning.hpp"
#include "civspec/sampling.hpp"
#include "fixtures.hpp"

using namespace civspec;
using civspec::testing::sv;
using Catch::Approx;

TEST_CASE("rational cost, slope and inverse") {
  const auto tech = LearningTech::rational(1.0);
  CHECK(tech.cost(0.0) == 0.0);
  CHECK(tech.cost(1.0) == 1.0);
  CHECK(tech.cost(0.5) == Approx(2.0 / 3.0).margin(1e-15));
  CHECK(tech.inverse(0.0) == 0.0);
  CHECK(tech.inverse(1.0) == 1.0);
  CHECK(tech.inverse(2.0 / 3.0) == Approx(0.5).margin(1e-15));
  CHECK(tech.slope(0.0) == Approx(2.0));
  CHECK(tech.slope(1.0) == Approx(0.5));
  CHECK_THROWS_AS(tech.cost(-0.1), Error);
}

TEST_CASE("exponential family is normalized and concave") {
  const auto tech = LearningTech::exponential(2.0);
  CHECK(tech.cost(0.0) == 0.0);
  CHECK(tech.cost(1.0) == Approx(1.0).margin(1e-15));
  for (int i = 1; i < 100; ++i) {
    const double s = i / 100.0;
    CHECK(tech.slope(s) > 0.0);
    CHECK(tech.cost(s + 0.01) - 2 * tech.cost(s) + tech.cost(s - 0.01) < 0.0);
    CHECK(tech.inverse(tech.cost(s)) == Approx(s).margin(1e-12));
  }
}

TEST_CASE("config names and bad parameters") {
  CHECK(LearningTech::from_config("rational", 1.0).family() == LearningFamily::Rational);
  CHECK(LearningTech::from_config("exponential", 1.0).family() == LearningFamily::Exponential);
  CHECK_THROWS_AS(LearningTech::from_config("cubic", 1.0), Error);
  CHECK_THROWS_AS(LearningTech::rational(0.0), Error);
  CHECK_THROWS_AS(LearningTech::exponential(-1.0), Error);
}

TEST_CASE("learning constants for c = 1") {
  const auto lc = learning_constants(LearningTech::rational(1.0));
  CHECK(lc.ell_bar == Approx(2.0));
  CHECK(lc.ell_under == Approx(0.5));
  CHECK(lc.L_Gamma == Approx(34.0));
  CHECK(lc.c_ell == Approx(0.5).epsilon(1e-6));
  CHECK(lc.theta_bar == Approx(1.0 / 68.0).epsilon(1e-6));
  CHECK(kappa_estimate(LearningTech::rational(1.0), 3, 40) >= lc.c_ell);
}

TEST_CASE("theta_bar positive across families") {
  for (double c : {0.1, 1.0, 5.0}) CHECK(learning_constants(LearningTech::rational(c)).theta_bar > 0.0);
  for (double r : {0.5, 2.0}) CHECK(learning_constants(LearningTech::exponential(r)).theta_bar > 0.0);
}

TEST_CASE("frontier H") {
  const auto tech = LearningTech::rational(1.0);
  CHECK(max_scale(tech, SimplexVector::corner(3, 1)) == Approx(1.0).margin(1e-12));
  CHECK(max_scale(tech, sv({0.5, 0.5})) == Approx(2.0 / 3.0).margin(1e-12));
  CHECK(lambda_index(tech, sv({0.5, 0.5})) == Approx(1.5).margin(1e-12));
  CHECK(lambda_index(tech, SimplexVector::corner(4, 0)) == Approx(1.0).margin(1e-12));

  Rng rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto pi = random_simplex(rng, 3);
    const double H = max_scale(tech, pi);
    CHECK(H >= 0.5 - 1e-12);
    CHECK(H <= 1.0 + 1e-12);
    CHECK(learning_load(tech, KnowledgeBundle::scaled(pi, H)) == Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("Gamma index") {
  const auto tech = LearningTech::rational(1.0);
  CHECK(gamma_index(tech, Vec{0.0, 0.0, 0.0}) == 0.0);
  CHECK(gamma_index(tech, Vec{0.0, 0.3, 0.0}) == Approx(0.3).margin(1e-12));
  CHECK(gamma_index(tech, Vec{0.25, 0.25}) == Approx(0.5 * 1.5).margin(1e-12));

  const double L = learning_constants(tech).L_Gamma;
  Rng rng(4);
  for (int i = 0; i < 300; ++i) {
    const auto a = KnowledgeBundle::scaled(random_simplex(rng, 3), random_uniform(rng, 0, 1));
    const auto b = KnowledgeBundle::scaled(random_simplex(rng, 3), random_uniform(rng, 0, 1));
    CHECK(std::abs(gamma_index(tech, a) - gamma_index(tech, b)) <= L * l1_distance(a, b) + 1e-12);
  }
}
