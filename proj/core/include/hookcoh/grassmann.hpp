#pragma once

#include <map>
#include <utility>
#include <vector>

#include "hookcoh/admissible.hpp"
#include "hookcoh/partition.hpp"

namespace hookcoh {

/// Nonvanishing Dolbeault cohomology of O(l) on G(r,e): for each (p,q) the
/// multiset of GL(e)-weight vectors (weakly decreasing, length e, entries in
/// [0, l]), one per l-admissible partition in the r x (e-r) box.
struct CohomologyTable {
    int r = 0, e = 0, l = 0;
    std::map<std::pair<int, int>, std::map<std::vector<int>, long long>> groups;

    friend bool operator==(const CohomologyTable&, const CohomologyTable&) = default;
};

/// Weakly decreasing reordering of the r values (l - h_minus_i) and the
/// e-r values v_minus_j. The record must have row budget r such that
/// lambda fits the r x (e-r) box.
std::vector<int> snow_weight(const AdmissibleRecord& rec, int e);

/// One weight per l-admissible partition in the box, placed at
/// (p, q) = (|lambda|, #hooks > l). Requires 1 <= r < e, l >= 1.
CohomologyTable cohomology_table(int r, int e, int l);

/// Largest p carrying a nonzero group, i.e. the maximal weight of an
/// l-admissible partition in the r x (e-r) box.
int p_max(int r, int e, int l);

}  // namespace hookcoh
