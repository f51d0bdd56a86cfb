// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "hhq8/algebra.hpp"
#include "hhq8/compare.hpp"
#include "hhq8/hhring.hpp"
#include "hhq8/minres.hpp"
#include "oracles.hpp"

using namespace hhq8;

namespace {

struct Outcome {
  bool passed = true;
  std::size_t checks = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void take(const Check& c) {
    ++checks;
    failed += c.passed ? 0 : 1;
    if (!c.passed && passed) first_failure = c.id + (c.detail.empty() ? "" : ": " + c.detail);
    passed = passed && c.passed;
  }
  void take_all(const Report& r) {
    for (const auto& c : r.checks()) take(c);
  }
};

bool starts_with_any(std::string_view id, std::initializer_list<std::string_view> prefixes) {
  for (auto p : prefixes) {
    if (id.starts_with(p)) return true;
  }
  return false;
}

int print(int number, std::string_view title, Outcome o) {
  if (o.checks == 0) {
    o.passed = false;
    o.first_failure = "no checks ran";
  }
  std::printf("criterion %d %s: %s (%zu/%zu checks passed)%s%s\n", number, o.passed ? "PASS" : "FAIL",
              std::string(title).c_str(), o.checks - o.failed, o.checks,
              o.first_failure.empty() ? "" : "; first failure: ", o.first_failure.c_str());
  return o.passed ? 0 : 1;
}

}  // namespace

int main() {
  HochschildRing& ring = HochschildRing::standard();
  int failures = 0;

  Outcome algebra;
  algebra.take_all(verify_algebra());
  failures += print(1, "algebra", algebra);

  Outcome homotopy;
  homotopy.take_all(verify_homotopy());
  failures += print(2, "weak self-homotopy", homotopy);

  Outcome comparison;
  comparison.take_all(verify_chain_maps(6));
  failures += print(3, "comparison morphisms", comparison);

  Outcome transport;
  transport.take_all(verify_transport_oracles());
  failures += print(4, "transport spot values", transport);

  Outcome relations;
  relations.take_all(verify_generalov(ring));
  failures += print(5, "presentation relations and cup witnesses", relations);

  Outcome bv;
  Outcome structural;
  const Report bv_report = verify_bv(ring);
  for (const auto& c : bv_report.checks()) {
    const bool table_entry = starts_with_any(c.id, {"Delta vanishes on the generators", "Delta(v p) = 0",
                                                    "Delta(a z) = 0", "nonzero Delta values", "bracket table"});
    (table_entry ? bv : structural).take(c);
  }
  const Report complexes = verify_complex_identities(ring);
  for (const auto& c : complexes.checks()) {
    if (starts_with_any(c.id, {"B o B", "boundary B + B boundary", "Delta is dual to B"})) structural.take(c);
  }
  failures += print(6, "Delta and bracket tables", bv);
  failures += print(7, "structural identities", structural);

  Outcome dims;
  dims.take({"hh_dim(0) equals the number of conjugacy classes",
             ring.hh_dim(0) == 5 && oracle::conjugacy_classes_of_q8() == 5, "hh_dim(0) = " + std::to_string(ring.hh_dim(0))});
  for (int n = 1; n <= 3; ++n) {
    dims.take({"hh_dim(" + std::to_string(n + 4) + ") = hh_dim(" + std::to_string(n) + ")",
               ring.hh_dim(n + 4) == ring.hh_dim(n), ""});
  }
  for (int n = 0; n <= 4; ++n) {
    const int counted = oracle::presentation_dimension(n);
    dims.take({"presentation count in degree " + std::to_string(n), counted == ring.hh_dim(n),
               std::to_string(counted) + " vs " + std::to_string(ring.hh_dim(n))});
  }
  failures += print(8, "dimensions", dims);

  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
