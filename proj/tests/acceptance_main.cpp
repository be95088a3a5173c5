// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// argv[1] = path to the gst binary (used by criterion 12).

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "gst/verify.hpp"

using gst::CheckRecord;

namespace {

int failures = 0;

void report(int criterion, const char* what, bool pass, const std::string& detail) {
  std::printf("%s criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", criterion,
              what, detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

struct Group {
  int total = 0;
  int failed = 0;
  double worst = 0.0;  // relative error, or absolute when rhs is zero
};

}  // namespace

int main(int argc, char** argv) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();

  std::map<std::string, Group> groups;
  try {
    for (const CheckRecord& r : gst::run_suite("all")) {
      Group& g = groups[r.check];
      ++g.total;
      if (!r.pass) ++g.failed;
      double err = std::abs(r.rhs) > 1e-150 ? r.rel_err : r.abs_err;
      if (err > g.worst) g.worst = err;
    }
  } catch (const std::exception& e) {
    std::printf("FAIL: verification suite aborted: %s\n", e.what());
    return 1;
  }

  auto ok = [&](std::initializer_list<const char*> names, std::string* detail) {
    int total = 0, failed = 0;
    double worst = 0.0;
    for (const char* n : names) {
      auto it = groups.find(n);
      if (it == groups.end()) return false;
      total += it->second.total;
      failed += it->second.failed;
      if (it->second.worst > worst) worst = it->second.worst;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%d/%d checks, worst err %.2e",
                  total - failed, total, worst);
    *detail = buf;
    return total > 0 && failed == 0;
  };

  std::string d;
  bool p;
  p = ok({"forward_power"}, &d);
  report(1, "power-pair forward accuracy", p, d);
  p = ok({"inverse_roundtrip"}, &d);
  report(2, "inverse round trip on table rows 1 and 3", p, d);
  p = ok({"point_mass_sifting"}, &d);
  report(3, "point-mass weak-form sifting", p, d);
  p = ok({"chi_laplace"}, &d);
  report(4, "kernel Laplace identity (incl. integer rho)", p, d);
  p = ok({"chi_offdiagonal", "chi_symmetry"}, &d);
  report(5, "off-diagonal vanishing and symmetry", p, d);
  p = ok({"contour_beta", "contour_beta_imag"}, &d);
  report(6, "contour-beta identity", p, d);
  p = ok({"forms_eq9_eq14", "forms_eq9_eq15", "forms_eq9_abel",
          "forms_eq14_eq15", "forms_eq14_abel", "forms_eq15_abel"},
         &d);
  report(7, "pairwise form equivalence", p, d);
  p = ok({"forms_rho1_disc"}, &d);
  report(8, "rho=1 inverse equals the disc formula", p, d);
  p = ok({"iterated_laplace"}, &d);
  report(9, "iterated-Laplace identity", p, d);
  p = ok({"abel_delta_from_f", "abel_rho1"}, &d);
  report(10, "inverse Abel consistency", p, d);
  p = ok({"radial_inverse"}, &d);
  report(11, "radial rho=3/2 form", p, d);

  // Criterion 12: the CLI verify suite finishes under 10 minutes with exit 0.
  bool cli_ok = false;
  std::string cli_detail = "gst binary path missing (pass it as argv[1])";
  if (argc > 1) {
    auto c0 = clock::now();
    const char* tmp = std::getenv("TMPDIR");
    std::string cmd = std::string(argv[1]) + " verify --suite all --out " +
                      (tmp ? tmp : "/tmp") + "/gst_verify_report.json 2>/dev/null";
    int rc = std::system(cmd.c_str());
    double secs = std::chrono::duration<double>(clock::now() - c0).count();
    bool exited_zero = rc != -1 && WIFEXITED(rc) && WEXITSTATUS(rc) == 0;
    cli_ok = exited_zero && secs < 600.0;
    char buf[96];
    std::snprintf(buf, sizeof(buf), "exit %s in %.1f s",
                  exited_zero ? "0" : "nonzero", secs);
    cli_detail = buf;
  }
  report(12, "full gst verify suite under 10 minutes", cli_ok, cli_detail);

  double total = std::chrono::duration<double>(clock::now() - t0).count();
  std::printf("%s: %d criteria failed (%.1f s total)\n",
              failures == 0 ? "OK" : "FAILED", failures, total);
  return failures == 0 ? 0 : 1;
}
