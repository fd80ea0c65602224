#include "hookcoh/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookcoh {

long long triangle(long long x) {
    if (x < 0) throw std::invalid_argument("triangle requires x >= 0");
    return x * (x + 1) / 2;
}

namespace {

long long c2(long long k) { return k * (k - 1) / 2; }

}  // namespace

int delta_index(long long x) {
    if (x < 0) throw std::invalid_argument("delta requires x >= 0");
    int d = 1;
    while (c2(d + 1) <= x) ++d;
    return d;
}

OrderKey order_key(long long x, long long sigma) {
    const int d = delta_index(x);
    return OrderKey{d + sigma, x - c2(d), sigma};
}

namespace {

long long q_formula(long long diff, long long sigma, long long t) {
    return diff + (delta_index(diff) + sigma) * (t + 2 * sigma) - sigma * (sigma + 1);
}

}  // namespace

long long bound_q(long long n, long long p, long long sigma, long long a,
                  long long e, long long k) {
    if (p > n) throw std::invalid_argument("bound_q requires p <= n");
    return q_formula(n - p, sigma, a * e - k);
}

long long bound_p(long long n, long long q, long long sigma, long long a,
                  long long e, long long k) {
    if (q > n) throw std::invalid_argument("bound_p requires q <= n");
    return q_formula(n - q, sigma, a * e - k);
}

bool vanishes(long long n, long long p, long long q, long long sigma,
              long long a, long long e, long long k) {
    if (p > n || q > n) return true;
    const long long d = std::min(delta_index(n - p), delta_index(n - q));
    return p + q > n + (d + sigma) * (a * e - k + 2 * sigma) - sigma * (sigma + 1);
}

long long symmetric_form(long long n, long long p, long long r, long long sigma,
                         long long tau) {
    return n - p + r * (sigma + tau) + sigma * (tau - 1);
}

long long bracket_pair_bound(long long a, long long b, long long c, long long d,
                             long long r, long long s) {
    if (r < 1 || s < 1) throw std::invalid_argument("bracket_pair_bound requires r, s >= 1");
    return (r - 1) * a + r * b + (s - 1) * c + s * d;
}

long long pi_rs(int r, int s) {
    if (s < 0 || s > r) throw std::invalid_argument("pi_rs requires 0 <= s <= r");
    return static_cast<long long>(s) * (2 * r - s + 1) / 2;
}

namespace {

void subset_sums(int r, int s, int next, long long sum, std::vector<long long>& hist) {
    if (s == 0) {
        ++hist[static_cast<std::size_t>(sum)];
        return;
    }
    for (int v = next; v + s - 1 <= r; ++v) subset_sums(r, s - 1, v + 1, sum + v, hist);
}

}  // namespace

std::vector<long long> n_s_vector(int r, int s) {
    const long long top = pi_rs(r, s);
    std::vector<long long> hist(static_cast<std::size_t>(top) + 1, 0);
    subset_sums(r, s, 1, 0, hist);
    return hist;
}

long long n_s_count(int r, int s, long long pi) {
    if (pi < 0 || pi > pi_rs(r, s)) return 0;
    return n_s_vector(r, s)[static_cast<std::size_t>(pi)];
}

std::vector<long long> n_s_product_vector(int r, const std::vector<int>& s_list) {
    std::vector<long long> acc{1};
    for (int s : s_list) {
        const std::vector<long long> f = n_s_vector(r, s);
        std::vector<long long> next(acc.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < acc.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) next[i + j] += acc[i] * f[j];
        acc = std::move(next);
    }
    return acc;
}

long long n_s_product(int r, const std::vector<int>& s_list, long long pi) {
    const std::vector<long long> conv = n_s_product_vector(r, s_list);
    if (pi < 0 || pi >= static_cast<long long>(conv.size())) return 0;
    return conv[static_cast<std::size_t>(pi)];
}

}  // namespace hookcoh
