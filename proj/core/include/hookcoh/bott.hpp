#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hookcoh/grassmann.hpp"
#include "hookcoh/partition.hpp"

namespace hookcoh {

/// Cauchy components of Lambda^p of the cotangent bundle of G(r,e):
/// all lambda with |lambda| = p inside the r x (e-r) box, paired with
/// their conjugates. Requires 0 <= p <= r(e-r).
std::vector<std::pair<Partition, Partition>> cotangent_components(int r, int e, int p);

/// Dotted-Weyl step: add the staircase rho = (e-1, ..., 0); nullopt when two
/// entries of c + rho coincide, else (inversion count, sorted(c + rho) - rho).
std::optional<std::pair<int, std::vector<int>>> bott_step(const std::vector<int>& c);

/// Block weight fed to bott_step for a Cauchy component twisted by l.
/// Convention pinned by oracle_table(1,2,1) == {(0,0): {(1,0)}} and the
/// agreement with snow_weight: r entries (l - lambda_r, ..., l - lambda_1)
/// followed by the e-r entries of lambda* (zero padded).
std::vector<int> block_weight(const Partition& lambda, int r, int e, int l);

/// Ground-truth recomputation of cohomology_table via the Bott algorithm.
CohomologyTable oracle_table(int r, int e, int l);

}  // namespace hookcoh
