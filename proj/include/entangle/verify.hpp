#ifndef ENTANGLE_VERIFY_HPP
#define ENTANGLE_VERIFY_HPP

#include <string>
#include <vector>

#include "entangle/classes.hpp"

namespace entangle {

struct CheckResult {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct RunReport {
  std::vector<CheckResult> checks;

  bool overall() const {
    for (const CheckResult& c : checks)
      if (!c.pass) return false;
    return true;
  }
  long failures() const {
    long n = 0;
    for (const CheckResult& c : checks) n += !c.pass;
    return n;
  }
};

// The one-shot table-reproduction harness. Runs, in order:
//   (a) recomputation of every cataloged representative's signature
//       (including printed alternates and the I_d family for d = 1..6),
//   (b) every composed-table cell, by formula and by block construction,
//   (c) exact counts N_{d,d,d} (extended adds d = 200, 500),
//   (d) the rounded approximation column and its relative errors,
//   (e) the isomorphism relations,
//   (f) the decomposition bound rows (satisfied and saturated).
RunReport verify_tables(const Catalog& cat, bool extended = false);

}  // namespace entangle

#endif
