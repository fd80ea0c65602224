#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hookcoh/partition.hpp"

namespace hookcoh {

/// True iff no cell of lam has hook number exactly l. Requires l >= 1.
bool is_admissible(const Partition& lam, int l);

/// Per-row counts of cells with hook < l, padded with zeros to length r.
/// Requires length(lam) <= r. Weakly decreasing whenever lam is l-admissible.
std::vector<int> h_minus(const Partition& lam, int l, int r);

/// Number of cells of lam with hook number > l.
long long cells_above(const Partition& lam, int l);

/// The unique l-admissible partition of length <= r whose h_minus equals nu,
/// by the bottom-up recursion lambda_i = lambda_{i+l-nu_i} + nu_i.
/// Requires nu inside the (l-1) x r box (parts <= l-1, length <= r), l >= 1.
Partition hat(const Partition& nu, int l, int r);

/// (weight, number of hooks > l) of hat(nu).
std::pair<long long, long long> pq_of(const Partition& nu, int l, int r);

struct AdmissibleRecord {
    Partition lambda;
    int l = 0;
    int r = 0;
    std::vector<int> h_minus;  // length r
    std::vector<int> v_minus;  // length = width budget (width or lambda_1)
    long long p = 0;
    long long q = 0;
};

AdmissibleRecord make_admissible_record(const Partition& lambda, int l, int r,
                                        std::optional<int> width);

/// Images hat(nu) over the (l-1) x r box, in the box enumeration order;
/// with a width bound, the subset with first part <= width. Cardinality
/// without a bound is binomial(r + l - 1, r).
std::vector<AdmissibleRecord> enumerate_admissible(int r, int l,
                                                   std::optional<int> width = {});

}  // namespace hookcoh
