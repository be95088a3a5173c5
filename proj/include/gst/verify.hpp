#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gst {

struct CheckRecord {
  std::string check;
  std::vector<std::pair<std::string, double>> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  bool pass = false;
};

// Suites: kernel, sifting, roundtrip, forms, laplace, abel, radial, all.
// rho_override > 0 restricts the kernel suite grids to that single rho.
std::vector<CheckRecord> run_suite(const std::string& suite,
                                   double rho_override = 0.0);

const std::vector<std::string>& suite_names();

}  // namespace gst
