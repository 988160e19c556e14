#include "civspec/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "civspec/cli/csv.hpp"
#include "civspec/learning.hpp"
#include "civspec/politics.hpp"
#include "civspec/production.hpp"
#include "civspec/reforms.hpp"
#include "civspec/welfare.hpp"

namespace civspec::cli {

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Config:
    case ErrorCode::Domain:
    case ErrorCode::Dimension:
    case ErrorCode::BudgetExceeded:
      return kConfigError;
    case ErrorCode::NonConvergence:
    case ErrorCode::DeviationFound:
      return kOracleFailure;
    default:
      return kHypothesis;
  }
}

namespace {

std::string vec_str(std::span<const double> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_number(v[i]);
  }
  return s + ")";
}

void line(std::ostream& os, const std::string& key, const std::string& value) {
  os << "  " << key << std::string(key.size() < 16 ? 16 - key.size() : 1, ' ') << value << "\n";
}

}  // namespace

void cmd_solve(const Scenario& sc, std::ostream& console, std::ostream& csv) {
  const Economy& econ = sc.econ;
  const ProductiveOptimum po = productive_optimum(econ);
  const WelfareReport w = total_welfare(econ, po.allocation);
  const auto& o = w.outcome;

  console << "scenario " << sc.name << " (" << econ.tech.name() << ", K = " << econ.K() << ")\n";
  console << "productive optimum\n";
  line(console, "theta", format_number(econ.theta));
  line(console, "theta_bar", format_number(learning_constants(econ.tech).theta_bar));
  line(console, "h*", vec_str(po.h_star));
  line(console, "H(h*)", format_number(po.H_hstar));
  line(console, "m*", format_number(po.m_star));
  line(console, "Y*", format_number(po.Y_star));
  console << "political equilibrium\n";
  line(console, "e_pol", format_number(o.e_pol));
  line(console, "z_pol", format_number(o.z_pol));
  line(console, "t_S", format_number(o.t_S));
  line(console, "t_M", format_number(o.t_M));
  line(console, "R", format_number(o.R));
  line(console, "B_S", format_number(o.B_S));
  line(console, "B_M", format_number(o.B_M));
  line(console, "B_soc", format_number(o.B_soc));
  console << "welfare\n";
  line(console, "services", format_number(w.service_welfare));
  line(console, "dispersion", format_number(w.dispersion));
  line(console, "W", format_number(w.W));

  CsvWriter out(csv);
  out.row(solve_columns());
  out.row(solve_row(sc.name, econ, po, w));
}

void cmd_sweep(const Scenario& sc, const std::string& axis, std::ostream& csv) {
  const Economy& econ = sc.econ;
  CsvWriter out(csv);
  if (axis == "b") {
    productive_optimum(econ);
    out.row(broadening_columns());
    const auto grid = linear_grid(sc.b.min, sc.b.max, sc.b.points);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const Allocation a = broadening_allocation(grid[i], econ);
      const WelfareReport w = total_welfare(econ, a);
      out.row({std::to_string(i), format_number(grid[i]), format_number(a.m), format_number(w.Y),
               format_number(w.outcome.B_S), format_number(w.outcome.B_M),
               format_number(w.outcome.B_soc), format_number(w.service_welfare),
               format_number(w.dispersion), format_number(w.W)});
    }
  } else if (axis == "alpha") {
    const InterfaceStatics is =
        interface_statics(econ, linear_grid(sc.alpha.min, sc.alpha.max, sc.alpha.points), false);
    out.row(interface_columns());
    for (std::size_t i = 0; i < is.rows.size(); ++i) {
      const InterfaceRow& r = is.rows[i];
      out.row({std::to_string(i), format_number(r.alpha), format_number(r.B_S), format_number(r.B_M),
               format_number(r.B_soc), format_number(r.W), format_number(r.dBsoc_dalpha),
               format_number(r.dW_dalpha), format_number(r.dD_dalpha)});
    }
  } else if (axis == "theta") {
    const ThetaStatics ts = theta_statics(econ, default_theta_grid(econ, sc.theta_points));
    out.row(theta_columns());
    for (std::size_t i = 0; i < ts.rows.size(); ++i) {
      const ThetaRow& r = ts.rows[i];
      out.row({std::to_string(i), format_number(r.theta), format_number(r.m), format_number(r.Y),
               format_number(r.B_soc), format_number(r.W), format_number(r.dm_closed),
               format_number(r.dm_fd)});
    }
  } else {
    fail(ErrorCode::Config, "unknown sweep axis '" + axis + "' (expected b, alpha or theta)");
  }
}

int cmd_verify(const Scenario& sc, const VerifyOptions& opts, std::ostream& out) {
  const VerifyReport report = run_verify(sc, opts);
  out << report.render();
  return report.all_passed() ? kOk : kOracleFailure;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Specialization, integration and civic knowledge: solver and oracle suite", "civspec"};
  app.require_subcommand(1);

  std::string config;
  std::string out_path;
  std::string axis;
  std::optional<std::uint64_t> seed;
  bool strict = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "scenario file (key = value)")->required();
    sub->add_option("--out", out_path, "write output here instead of stdout");
  };
  CLI::App* solve = app.add_subcommand("solve", "productive optimum, political equilibrium, welfare");
  add_common(solve);
  CLI::App* sweep = app.add_subcommand("sweep", "comparative statics along one axis, as CSV");
  add_common(sweep);
  sweep->add_option("--axis", axis, "b, alpha or theta")
      ->required()
      ->check(CLI::IsMember({"b", "alpha", "theta"}));
  CLI::App* verify = app.add_subcommand("verify", "run the invariant and oracle suite");
  add_common(verify);
  verify->add_option("--seed", seed, "random seed (defaults to oracle.seed)");
  verify->add_flag("--strict", strict, "scale every tolerance by 0.1");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    const Scenario sc = load_scenario(config);
    for (const auto& w : sc.warnings) err << "warning: " << w << "\n";

    std::ofstream file;
    if (!out_path.empty()) {
      file.open(out_path, std::ios::binary);
      if (!file) fail(ErrorCode::Config, "cannot open output file '" + out_path + "'");
    }
    std::ostream& dest = out_path.empty() ? out : file;

    if (solve->parsed()) {
      cmd_solve(sc, out, dest);
      return kOk;
    }
    if (sweep->parsed()) {
      cmd_sweep(sc, axis, dest);
      return kOk;
    }
    VerifyOptions opts;
    opts.seed = seed.value_or(sc.oracle.seed);
    opts.strict = strict;
    const int code = cmd_verify(sc, opts, dest);
    if (code != kOk) err << "verify: one or more checks failed\n";
    return code;
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace civspec::cli
