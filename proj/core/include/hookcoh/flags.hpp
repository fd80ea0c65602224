#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace hookcoh {

/// One factor M_{s,r}(V) carrying Q^{l+1,l}; r and the ambient rank e are
/// shared across factors. Invariants: 0 < s < r < e, l >= 1.
struct FlagFactor {
    int s = 0;
    int l = 0;
};

/// Raised when (p, q) lies outside the window where the closed formula is
/// asserted (pi below sum pi_{r,s_i} - k + l), as opposed to a zero group.
class validity_window_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct FlagComponent {
    int alpha = 0;
    long long multiplicity = 0;
};

/// H^{p,q}(M_{s,r}(V), Q^{l+1,l}): at most one component (alpha, n_s(pi + r alpha))
/// with alpha = q - p + r(l-1) + s, denoting the hook functor of (k-alpha-1, k)
/// with k = rl + s. Empty result means zero group inside the window.
std::vector<FlagComponent> single_flag_cohomology(int e, int r, int s, int l,
                                                  int p, int q);

struct ProductCohomology {
    int sigma = 0;
    long long multiplicity = 0;
    std::vector<std::vector<int>> alpha_splittings;  // all (alpha_i) with sum sigma
};

/// Cohomology of the exterior product line bundle on a product of flag
/// factors: sigma = q + r lambda + s - p; when attainable, multiplicity
/// n_s(pi + r sigma) attached to the full family of alpha splittings.
std::optional<ProductCohomology> product_flag_cohomology(
    int e, int r, const std::vector<FlagFactor>& factors, int p, int q);

struct Envelopes {
    long long p_max = 0;
    long long q_max = 0;
};

/// P_max = lambda t(r) + sum pi_{r,s_i}, Q_max = lambda t(r-1) + sum pi_{r,s_i} - S.
Envelopes envelopes(int r, const std::vector<FlagFactor>& factors);

/// Premise of the containment statement: p >= P_max - r sigma or
/// q >= Q_max - (r-1) sigma.
bool containment_premise(const Envelopes& env, int r, int p, int q, int sigma);

}  // namespace hookcoh
