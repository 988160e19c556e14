#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "civspec/production.hpp"
#include "civspec/reforms.hpp"
#include "civspec/welfare.hpp"

namespace civspec::cli {

/// Shortest round-trip representation, '.' decimal, independent of locale.
std::string format_number(double v);
/// Scientific notation with `digits` significant decimals, locale independent.
std::string format_sci(double v, int digits = 6);

/// RFC 4180 writer: comma separated, fields quoted only when needed, CRLF-free.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void row(const std::vector<std::string>& fields);

 private:
  std::ostream& out_;
};

// Column orders. These are part of the output contract.

/// solve: scenario, K, theta, theta_bar, m, Y, H_hstar, e_pol, z_pol, t_S, t_M,
/// R, B_S, B_M, B_soc, service_welfare, dispersion, W
std::vector<std::string> solve_columns();
std::vector<std::string> solve_row(const std::string& scenario, const Economy& econ,
                                   const ProductiveOptimum& po, const WelfareReport& w);

/// sweep b: index, b, m, Y, B_S, B_M, B_soc, service_welfare, dispersion, W
std::vector<std::string> broadening_columns();
/// sweep alpha: index, alpha, B_S, B_M, B_soc, W, dB_soc_dalpha, dW_dalpha, dD_dalpha
std::vector<std::string> interface_columns();
/// sweep theta: index, theta, m, Y, B_soc, W, dm_dtheta_closed, dm_dtheta_fd
std::vector<std::string> theta_columns();

}  // namespace civspec::cli
