#include "civspec/cli/csv.hpp"

#include <array>
#include <charconv>

#include "civspec/learning.hpp"

namespace civspec::cli {

std::string format_number(double v) {
  std::array<char, 64> buf{};
  const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), r.ptr);
}

std::string format_sci(double v, int digits) {
  std::array<char, 64> buf{};
  const auto r =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::scientific, digits);
  return std::string(buf.data(), r.ptr);
}

void CsvWriter::row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    const std::string& f = fields[i];
    if (f.find_first_of(",\"\n\r") == std::string::npos) {
      out_ << f;
      continue;
    }
    out_ << '"';
    for (char c : f) {
      if (c == '"') out_ << '"';
      out_ << c;
    }
    out_ << '"';
  }
  out_ << '\n';
}

std::vector<std::string> solve_columns() {
  return {"scenario", "K",   "theta", "theta_bar", "m",   "Y",   "H_hstar",
          "e_pol",    "z_pol", "t_S",  "t_M",       "R",   "B_S", "B_M",
          "B_soc",    "service_welfare", "dispersion", "W"};
}

std::vector<std::string> solve_row(const std::string& scenario, const Economy& econ,
                                   const ProductiveOptimum& po, const WelfareReport& w) {
  const auto& o = w.outcome;
  return {scenario,
          std::to_string(econ.K()),
          format_number(econ.theta),
          format_number(learning_constants(econ.tech).theta_bar),
          format_number(po.m_star),
          format_number(w.Y),
          format_number(po.H_hstar),
          format_number(o.e_pol),
          format_number(o.z_pol),
          format_number(o.t_S),
          format_number(o.t_M),
          format_number(o.R),
          format_number(o.B_S),
          format_number(o.B_M),
          format_number(o.B_soc),
          format_number(w.service_welfare),
          format_number(w.dispersion),
          format_number(w.W)};
}

std::vector<std::string> broadening_columns() {
  return {"index", "b", "m", "Y", "B_S", "B_M", "B_soc", "service_welfare", "dispersion", "W"};
}

std::vector<std::string> interface_columns() {
  return {"index", "alpha", "B_S", "B_M", "B_soc", "W", "dB_soc_dalpha", "dW_dalpha", "dD_dalpha"};
}

std::vector<std::string> theta_columns() {
  return {"index", "theta", "m", "Y", "B_soc", "W", "dm_dtheta_closed", "dm_dtheta_fd"};
}

}  // namespace civspec::cli
