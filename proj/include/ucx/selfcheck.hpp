#pragma once

#include <string>
#include <vector>

namespace ucx {

/** One named consistency check; detail explains a failure. */
struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

/** Cross-module consistency suite behind the command-line verify job:
 * closed forms against enumeration, the independent Betti routes against
 * each other, torsion and cup-length pins, search against formula, and a
 * serialization round trip. Deterministic, a few seconds in total; a
 * throw inside a check is reported as a failure, never propagated. */
std::vector<CheckResult> run_selfchecks();

}  // namespace ucx
