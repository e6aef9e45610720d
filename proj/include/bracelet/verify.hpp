#pragma once

// Named invariant suites. Each check yields PASS or FAIL with the first
// counterexample; disputed formulas produce REPORT notes instead of checks.

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bracelet::verify {

enum class Suite { identities, oracles, curve, all };

/// Throws std::invalid_argument for unknown names.
Suite parse_suite(std::string_view name);

struct Caps {
  int tmax = 200;          // triangle rows for identity checks
  int oracle_n = 14;       // brute configuration scans
  int susy_n = 16;         // sign-shift classification
  int necklace_n = 20;     // brute necklace scans
  int curve_tmax = 120;    // necklace points
  int octic_tmax = 300;    // octic divisibility scan
  int closure_tpairs = 12; // closure sums among points with t <= this
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // first counterexample or error
};

struct Report {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] std::size_t failures() const;
  /// PASS/FAIL lines, then REPORT lines.
  void print(std::ostream& os) const;
};

Report run(Suite suite, const Caps& caps = {});

// Individual pieces, also used by the acceptance harness.
Report identities(const Caps& caps);
Report oracles(const Caps& caps);
Report curve_suite(const Caps& caps);

/// Deterministic discrepancy notes for the disputed items.
std::vector<std::string> gen3_notes(int tmax);
std::vector<std::string> beta_sum_notes(int tmax);
std::vector<std::string> point_table_notes();
std::vector<std::string> closure_notes(int tcatalog, int tpairs);
std::vector<std::string> depth_notes(int tmax, int maxdepth);
std::vector<std::string> divisibility_notes(int tmax);
std::vector<std::string> lucas_p2_notes(int pmax);

using IndexPair = std::pair<int, int>;
/// Pairs (j, m j), m odd >= 3, m j <= tmax, with N_j not dividing N_{m j}.
std::vector<IndexPair> odd_multiple_failures(int tmax);

}  // namespace bracelet::verify
