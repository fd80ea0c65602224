#pragma once

#include <vector>

#include "hookcoh/partition.hpp"

namespace hookcoh {

/// Parameters of the extremal family mu(a, alpha, beta, c, gamma):
/// alpha(l-a) parts a, then beta(l-a+1) parts a-1, then gamma parts c.
struct FamilyParams {
    int a = 0, alpha = 0, beta = 0, c = 0, gamma = 0;

    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

/// Builds the family partition for context l. Throws std::invalid_argument
/// when the parameters violate the family invariants (a range, c <= a,
/// gamma <= l-a, the (gamma, c) == (l-a, a) normalization exclusion, or a
/// positionally non-decreasing block sequence).
Partition family_partition(const FamilyParams& fp, int l);

/// First part of hat(family_partition): (alpha + beta) a - beta + c.
/// The display reads c as a real tail; for representatives with gamma == 0
/// and c > 0 the c term is phantom and the value overshoots hat.
long long family_first_part(const FamilyParams& fp, int l);

/// The index sequence a_1 = 1, a_{i+1} = min(a_i + l - nu_{a_i}, r+1),
/// listing the entries that stay <= r.
std::vector<int> a_chain(const Partition& nu, int l, int r);

/// Replace nu by the partition constant on the a_i blocks. Weakly contains
/// nu and preserves the first part of hat.
Partition flatten(const Partition& nu, int l, int r);

/// Transformation A at row offset i: rows [i+1, i+l-a] equal to a become
/// a-1 and rows [i+l-a+1, i+2(l-a)+1] equal to b <= a-2 become b+1.
/// Throws std::invalid_argument when the configuration is absent.
Partition transform_A(const Partition& nu, int i, int a, int b, int l);

/// Transformation B at row offset i: an (a+1)-block of length l-a-1, an
/// a-block of length beta(l-a) and a b-block of length l-a turn into an
/// a-block of length (1+beta)(l-a)-1 and a (b+1)-block of length l-a.
Partition transform_B(const Partition& nu, int i, int a, int b, int beta, int l);

struct MaximizeResult {
    FamilyParams params;
    long long pmax = 0;
    Partition fixpoint_nu;      // the h_minus profile reached by the greedy loop
    Partition fixpoint_lambda;  // hat of it
};

/// Greedy maximization of the weight of an l-admissible partition of length
/// <= r with first part <= n-r: add a cell (bottom row first) while hat
/// stays in the box, else apply A, else B, until a fixpoint. Requires
/// 1 <= r < n and l >= 2.
MaximizeResult maximize(int r, int n, int l);

/// Maximal weight by direct enumeration of the r x (n-r) box.
long long brute_force_pmax(int r, int n, int l);

/// Maximal |hat| over all valid FamilyParams whose partition lies in the
/// (l-1) x r box with hat first part <= n-r.
long long family_enum_max(int r, int n, int l);

/// All valid parameter tuples generating nu (including representatives with
/// phantom zero-valued or empty blocks, bounded by the Euclidean data of n).
std::vector<FamilyParams> family_params_for(const Partition& nu, int l, int r, int n);

}  // namespace hookcoh
