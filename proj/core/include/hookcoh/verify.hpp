#pragma once

#include <string>

#include "hookcoh/degeneracy.hpp"

namespace hookcoh {

/// Property suites shared by the CLI `verify` command, the acceptance
/// binary and the unit tests. Each check fails with a concrete witness.

/// hat / h_minus round trips, cardinalities, inclusion monotonicity and
/// (kl)-admissibility, over r <= 4, 2 <= l <= 5 (boxes up to 6x6 for the
/// multiplicativity scan).
Report suite_bijection();

/// cohomology_table == oracle_table for all 1 <= r < e <= 6, 1 <= l <= 4.
Report suite_snow_vs_bott();

/// Greedy maximization against brute force and the family enumeration over
/// n <= 12, plus the Euclidean-division parameter check and the A/B gain
/// bounds over r <= 6, l <= 5.
Report suite_pmax();

/// verify_tables on the shipped q0 fixture.
Report suite_tables(const std::string& table_path);

/// lr_identity_checks for e in {3, 4, 5}.
Report suite_lr_identities();

}  // namespace hookcoh
