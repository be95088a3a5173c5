#include <doctest.h>

#include "gst/verify.hpp"
#include "gst/errors.hpp"

using namespace gst;

namespace {

void check_all_pass(const std::vector<CheckRecord>& records) {
  REQUIRE(!records.empty());
  for (const auto& r : records) {
    INFO(r.check, " lhs=", r.lhs, " rhs=", r.rhs, " rel_err=", r.rel_err);
    CHECK(r.pass);
  }
}

}  // namespace

TEST_CASE("suite names") {
  CHECK(suite_names().size() == 8);
  CHECK_THROWS_AS(run_suite("nonsense"), DomainError);
}

TEST_CASE("kernel suite") { check_all_pass(run_suite("kernel")); }

TEST_CASE("kernel suite with integer rho override") {
  auto records = run_suite("kernel", 1.0);
  check_all_pass(records);
  for (const auto& r : records) CHECK(r.check == "chi_laplace");
}

TEST_CASE("sifting suite") { check_all_pass(run_suite("sifting")); }
TEST_CASE("roundtrip suite") { check_all_pass(run_suite("roundtrip")); }
TEST_CASE("forms suite") { check_all_pass(run_suite("forms")); }
TEST_CASE("laplace suite") { check_all_pass(run_suite("laplace")); }
TEST_CASE("abel suite") { check_all_pass(run_suite("abel")); }
TEST_CASE("radial suite") { check_all_pass(run_suite("radial")); }
