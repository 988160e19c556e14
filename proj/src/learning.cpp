#include "civspec/learning.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/numeric.hpp"

namespace civspec {

namespace {

constexpr double kDomainSlack = 1e-12;
constexpr double kBracketSlack = 1e-9;

}  // namespace

LearningTech LearningTech::rational(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    fail(ErrorCode::Domain, "rational learning parameter must be positive");
  }
  return LearningTech(LearningFamily::Rational, c);
}

LearningTech LearningTech::exponential(double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    fail(ErrorCode::Domain, "exponential learning rate must be positive");
  }
  return LearningTech(LearningFamily::Exponential, rate);
}

LearningTech LearningTech::from_config(const std::string& family, double param) {
  if (!(param > 0.0) || !std::isfinite(param)) {
    fail(ErrorCode::Config, "learning.param must be a positive number");
  }
  if (family == "rational") return rational(param);
  if (family == "exponential") return exponential(param);
  fail(ErrorCode::Config,
       "learning.family must be 'rational' or 'exponential', got '" + family + "'");
}

std::string LearningTech::name() const {
  return family_ == LearningFamily::Rational ? "rational" : "exponential";
}

double LearningTech::cost_unchecked(double s) const noexcept {
  if (s == 0.0) return 0.0;
  if (s == 1.0) return 1.0;
  switch (family_) {
    case LearningFamily::Rational:
      return (1.0 + param_) * s / (1.0 + param_ * s);
    case LearningFamily::Exponential:
      return std::expm1(-param_ * s) / std::expm1(-param_);
  }
  return 0.0;
}

double LearningTech::cost(double s) const {
  if (!(s >= 0.0) || s > 1.0 + kDomainSlack) {
    fail(ErrorCode::Domain, "learning cost evaluated outside [0, 1]");
  }
  return cost_unchecked(s);
}

double LearningTech::slope(double s) const {
  if (!(s >= 0.0) || s > 1.0 + kDomainSlack) {
    fail(ErrorCode::Domain, "learning slope evaluated outside [0, 1]");
  }
  switch (family_) {
    case LearningFamily::Rational: {
      const double d = 1.0 + param_ * s;
      return (1.0 + param_) / (d * d);
    }
    case LearningFamily::Exponential:
      return param_ * std::exp(-param_ * s) / -std::expm1(-param_);
  }
  return 0.0;
}

double LearningTech::inverse(double y) const {
  if (!(y >= 0.0) || y > 1.0 + kDomainSlack) {
    fail(ErrorCode::Domain, "learning inverse evaluated outside [0, 1]");
  }
  if (y == 0.0) return 0.0;
  if (y >= 1.0) return 1.0;
  const auto r = numeric::bisect([&](double s) { return cost_unchecked(s) - y; },
                                 0.0, 1.0);
  return r.x;
}

LearningConstants learning_constants(const LearningTech& tech, std::size_t grid_size) {
  if (grid_size < 1000) {
    fail(ErrorCode::Domain, "learning_constants: grid_size must be >= 1000");
  }
  LearningConstants out{};
  out.ell_bar = tech.slope(0.0);
  out.ell_under = tech.slope(1.0);

  double c = std::min(out.ell_bar - 1.0, 1.0 - out.ell_under);
  const double n = static_cast<double>(grid_size);
  for (std::size_t i = 1; i < grid_size; ++i) {
    const double s = static_cast<double>(i) / n;
    c = std::min(c, (tech.cost(s) - s) / (s * (1.0 - s)));
  }
  if (!(c > 0.0)) {
    fail(ErrorCode::Domain, "learning technology is not strictly concave (c_ell <= 0)");
  }
  out.c_ell = c;
  out.L_Gamma = out.ell_bar + 2.0 * std::pow(out.ell_bar, 3) / out.ell_under;
  out.theta_bar = std::min(out.c_ell / out.L_Gamma, 1.0 / (2.0 * out.L_Gamma));
  return out;
}

double learning_load(const LearningTech& tech, std::span<const double> s) {
  double total = 0.0;
  for (double x : s) total += tech.cost_unchecked(x);
  return total;
}

double max_scale(const LearningTech& tech, std::span<const double> pi) {
  double top = 0.0;
  for (double v : pi) top = std::max(top, v);
  if (top == 1.0) return 1.0;

  const double lo = 1.0 / tech.slope(0.0) - kBracketSlack;
  const double hi = 1.0 + kBracketSlack;
  const auto r = numeric::bisect(
      [&](double H) {
        double total = 0.0;
        for (double v : pi) total += tech.cost_unchecked(H * v);
        return total - 1.0;
      },
      lo, hi);
  return r.x;
}

double max_scale(const LearningTech& tech, const SimplexVector& pi) {
  return max_scale(tech, pi.values());
}

double lambda_index(const LearningTech& tech, std::span<const double> pi) {
  return 1.0 / max_scale(tech, pi);
}

double gamma_index(const LearningTech& tech, std::span<const double> z) {
  double mass = 0.0;
  for (double v : z) {
    if (v < 0.0) fail(ErrorCode::Domain, "gamma_index: negative component");
    mass += v;
  }
  if (mass == 0.0) return 0.0;
  Vec dir(z.begin(), z.end());
  for (double& v : dir) v /= mass;
  return mass * lambda_index(tech, dir);
}

double kappa_estimate(const LearningTech& tech, std::size_t K, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& pi : simplex_grid(K, n)) {
    const double D = fragmentation(pi);
    if (D <= 0.0) continue;
    best = std::min(best, (lambda_index(tech, pi.values()) - 1.0) / D);
  }
  return best;
}

}  // namespace civspec
