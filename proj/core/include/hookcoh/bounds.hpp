#pragma once

#include <compare>
#include <vector>

namespace hookcoh {

/// t(x) = x(x+1)/2.
long long triangle(long long x);

/// The unique d >= 1 with d(d-1)/2 <= x < d(d+1)/2; delta(0) = 1.
int delta_index(long long x);

/// Position of (x, sigma) in the total order on N^2 given by the injection
/// (x, sigma) -> (delta(x) + sigma, x - C2(delta(x)), sigma) into N^3, lex.
struct OrderKey {
    long long k1 = 0, k2 = 0, k3 = 0;

    friend bool operator==(const OrderKey&, const OrderKey&) = default;
    friend std::strong_ordering operator<=>(const OrderKey&, const OrderKey&) = default;
};

OrderKey order_key(long long x, long long sigma);

/// Q(p, sigma) = n-p + [delta(n-p)+sigma][ae-k+2 sigma] - sigma(sigma+1).
/// Requires p <= n.
long long bound_q(long long n, long long p, long long sigma, long long a,
                  long long e, long long k);

/// Mirror bound with p and q exchanged. Requires q <= n.
long long bound_p(long long n, long long q, long long sigma, long long a,
                  long long e, long long k);

/// Combined form: true iff
/// p + q > n + [min(delta(n-p), delta(n-q)) + sigma][ae-k+2 sigma] - sigma(sigma+1),
/// and trivially true when p > n or q > n.
bool vanishes(long long n, long long p, long long q, long long sigma,
              long long a, long long e, long long k);

/// n - p + r(sigma + tau) + sigma(tau - 1); equals bound_q under
/// tau = ae - k + sigma, r = delta(n-p).
long long symmetric_form(long long n, long long p, long long r, long long sigma,
                         long long tau);

/// (r-1)a + rb + (s-1)c + sd. Requires r, s >= 1.
long long bracket_pair_bound(long long a, long long b, long long c, long long d,
                             long long r, long long s);

/// pi_{r,s} = s(2r - s + 1)/2. Requires 0 <= s <= r.
long long pi_rs(int r, int s);

/// Number of subsets of {1..r} of size s with element sum pi.
long long n_s_count(int r, int s, long long pi);

/// n_s_count for pi = 0 .. pi_{r,s} as a vector.
std::vector<long long> n_s_vector(int r, int s);

/// Multi-factor count: sum over (pi_i) with sum pi of the product of the
/// per-factor n_{s_i}(pi_i), by convolution.
long long n_s_product(int r, const std::vector<int>& s_list, long long pi);

std::vector<long long> n_s_product_vector(int r, const std::vector<int>& s_list);

}  // namespace hookcoh
