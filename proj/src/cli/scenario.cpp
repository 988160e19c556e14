#include "civspec/cli/scenario.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "civspec/error.hpp"
#include "civspec/learning.hpp"

namespace civspec::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "learning.family", "learning.param", "K", "q", "u", "p", "theta", "theta_fraction", "V",
      "gov.eta", "gov.c0", "gov.tau", "gov.lambda0",
      "sweep.b.min", "sweep.b.max", "sweep.b.points",
      "sweep.alpha.min", "sweep.alpha.max", "sweep.alpha.points", "sweep.theta.points",
      "oracle.resolution", "oracle.weight_resolution", "oracle.atoms",
      "oracle.max_evaluations", "oracle.seed", "oracle.starts", "oracle.samples"};
  return keys;
}

class Entries {
 public:
  explicit Entries(std::map<std::string, std::string> kv) : kv_(std::move(kv)) {}

  bool has(const std::string& key) const { return kv_.count(key) != 0; }

  const std::string& raw(const std::string& key) const {
    auto it = kv_.find(key);
    if (it == kv_.end()) fail(ErrorCode::Config, "missing required key '" + key + "'");
    return it->second;
  }

  double number(const std::string& key) const { return parse_number(key, raw(key)); }

  double number_or(const std::string& key, double fallback) const {
    return has(key) ? number(key) : fallback;
  }

  std::uint64_t count_or(const std::string& key, std::uint64_t fallback) const {
    if (!has(key)) return fallback;
    const std::string& v = raw(key);
    std::uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      fail(ErrorCode::Config, "key '" + key + "' must be a nonnegative integer, got '" + v + "'");
    }
    return out;
  }

  Vec list(const std::string& key) const {
    Vec out;
    std::stringstream ss(raw(key));
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(key, trim(item)));
    return out;
  }

 private:
  static double parse_number(const std::string& key, const std::string& v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (v.empty() || ec != std::errc() || ptr != v.data() + v.size()) {
      fail(ErrorCode::Config, "key '" + key + "' must be a number, got '" + v + "'");
    }
    return out;
  }

  std::map<std::string, std::string> kv_;
};

SimplexVector profile(const Entries& e, const std::string& key, Scenario& sc) {
  const Vec raw = e.list(key);
  try {
    SimplexVector out = SimplexVector::normalized(raw);
    const double dev = simplex_deviation(raw);
    if (dev > 1e-9) {
      sc.warnings.push_back("'" + key + "' sums to " + std::to_string(1.0 + dev) +
                            " (off the simplex); renormalized");
    }
    return out;
  } catch (const Error& err) {
    fail(ErrorCode::Config, "key '" + key + "': " + err.what());
  }
}

SweepSpec sweep(const Entries& e, const std::string& axis, SweepSpec fallback) {
  const std::string base = "sweep." + axis + ".";
  SweepSpec s{e.number_or(base + "min", fallback.min), e.number_or(base + "max", fallback.max),
              static_cast<std::size_t>(e.count_or(base + "points", fallback.points))};
  if (s.points == 0 || s.max < s.min) {
    fail(ErrorCode::Config, "sweep." + axis + " needs points >= 1 and max >= min");
  }
  return s;
}

}  // namespace

Scenario parse_scenario(const std::string& text, const std::string& name) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(text);
  std::string line;
  int lineno = 0;
  while (std::getline(ss, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      fail(ErrorCode::Config, name + ":" + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    if (!known_keys().count(key)) {
      fail(ErrorCode::Config, name + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
    if (kv.count(key)) fail(ErrorCode::Config, "duplicate key '" + key + "'");
    kv[key] = trim(line.substr(eq + 1));
  }
  const Entries e(std::move(kv));

  Scenario sc{.name = name,
              .econ = Economy{LearningTech::rational(1.0), SimplexVector::uniform(2),
                              CivicParams{SimplexVector::uniform(2), 1.0}, 0.0, 0.0,
                              GovernanceTech{0.5, 1.0, 0.0, 1.0}},
              .oracle = {},
              .warnings = {}};
  try {
    sc.econ.tech = LearningTech::from_config(e.raw("learning.family"), e.number("learning.param"));
  } catch (const Error& err) {
    fail(ErrorCode::Config, err.what());
  }
  sc.econ.q = profile(e, "q", sc);
  const SimplexVector u = profile(e, "u", sc);
  if (u.size() != sc.econ.q.size()) fail(ErrorCode::Config, "q and u must have the same length");
  if (e.has("K") && e.count_or("K", 0) != sc.econ.q.size()) {
    fail(ErrorCode::Config, "K does not match the length of q");
  }
  if (!sc.econ.q.is_interior()) fail(ErrorCode::Config, "q must be strictly positive in every domain");
  if (!u.is_interior()) fail(ErrorCode::Config, "u must be strictly positive in every domain");
  const double p = e.number("p");
  if (!(p > 0.0)) fail(ErrorCode::Config, "p must be positive");
  sc.econ.civ = CivicParams::make(u, p);

  const bool abs_theta = e.has("theta");
  const bool frac_theta = e.has("theta_fraction");
  if (abs_theta == frac_theta) {
    fail(ErrorCode::Config, "give exactly one of 'theta' or 'theta_fraction'");
  }
  sc.econ.theta = abs_theta ? e.number("theta")
                            : e.number("theta_fraction") *
                                  learning_constants(sc.econ.tech).theta_bar;
  if (!(sc.econ.theta > 0.0)) fail(ErrorCode::Config, "theta must be positive");
  sc.econ.V = e.number("V");
  if (!(sc.econ.V > 0.0)) fail(ErrorCode::Config, "V must be positive");

  try {
    sc.econ.gov = GovernanceTech::make(e.number("gov.eta"), e.number("gov.c0"),
                                       e.number("gov.tau"), e.number("gov.lambda0"));
  } catch (const Error& err) {
    fail(ErrorCode::Config, err.what());
  }

  sc.b = sweep(e, "b", sc.b);
  if (sc.b.min < 0.0 || sc.b.max >= 1.0) {
    fail(ErrorCode::Config, "sweep.b must stay inside [0, 1) so that integrators exist");
  }
  sc.alpha = sweep(e, "alpha", sc.alpha);
  if (sc.alpha.min < 0.0 || sc.alpha.max > 1.0) fail(ErrorCode::Config, "sweep.alpha must lie in [0, 1]");
  sc.theta_points = e.count_or("sweep.theta.points", sc.theta_points);
  if (sc.theta_points < 2) fail(ErrorCode::Config, "sweep.theta.points must be >= 2");

  auto& o = sc.oracle;
  o.design.resolution = e.count_or("oracle.resolution", o.design.resolution);
  o.design.weight_resolution = e.count_or("oracle.weight_resolution", o.design.resolution);
  o.design.max_atoms = e.count_or("oracle.atoms", o.design.max_atoms);
  o.design.max_evaluations = e.count_or("oracle.max_evaluations", o.design.max_evaluations);
  o.seed = e.count_or("oracle.seed", o.seed);
  o.starts = e.count_or("oracle.starts", o.starts);
  o.samples = e.count_or("oracle.samples", o.samples);
  if (o.design.resolution == 0 || o.design.weight_resolution == 0 || o.design.max_atoms == 0) {
    fail(ErrorCode::Config, "oracle.resolution, oracle.weight_resolution and oracle.atoms must be >= 1");
  }
  return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Config, "cannot open config file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str(), path.stem().string());
}

}  // namespace civspec::cli
