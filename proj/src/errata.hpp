// Documented discrepancies between the printed derivations this library
// implements and the forms that survive direct-integration arbitration.
// Every entry carries one concrete fixture with the printed reading's value,
// the implemented value, and the brute-force integral, all computed live.
#pragma once

#include <string>
#include <vector>

#include "gamma.hpp"
#include "rational.hpp"

namespace selberg {

struct Workspace;

struct ErrataEntry {
  std::string id;                 // stable slug, usable as a test key
  std::string location;           // where the discrepancy sits, descriptively
  std::string printed_form;       // the reading as displayed
  std::string implemented_form;   // the reading this library evaluates
  std::string arbitration;        // fixture deciding between them
  std::string printed_value;      // printed reading at the fixture
  std::string implemented_value;  // implemented reading at the fixture
  std::string oracle_value;       // direct integration at the fixture
};

// The full ledger; every value is recomputed by the corresponding
// documented-discrepancy variant and by the brute-force integrator.
std::vector<ErrataEntry> errata_entries(Workspace& ws);

// The explicit two-variable display as printed: diverges at p = 0 and equals
// the true integral only after the argument shift p -> p + 1.
GammaValue display_two_var(long p);

// The explicit three-variable display as printed, which carries one gamma
// divisor too many; same argument shift as the two-variable display.
GammaValue display_three_var_printed(long p);

}  // namespace selberg
