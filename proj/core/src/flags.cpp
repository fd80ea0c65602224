#include "hookcoh/flags.hpp"

#include <stdexcept>

#include "hookcoh/bounds.hpp"

namespace hookcoh {

namespace {

void validate_factor(int e, int r, int s, int l) {
    if (!(0 < s && s < r && r < e))
        throw std::invalid_argument("flag factor requires 0 < s < r < e");
    if (l < 1) throw std::invalid_argument("flag factor requires l >= 1");
}

}  // namespace

std::vector<FlagComponent> single_flag_cohomology(int e, int r, int s, int l,
                                                  int p, int q) {
    validate_factor(e, r, s, l);
    const int k = r * l + s;
    const long long lam = l - 1;
    const long long pi = p - lam * triangle(r);
    if (pi < pi_rs(r, s) - k + l)
        throw validity_window_error("single_flag_cohomology: p below the validity window");
    const long long alpha = q - p + r * lam + s;
    if (alpha < 0 || alpha > l || k - alpha - 1 < 0) return {};
    const long long mult = n_s_count(r, s, pi + r * alpha);
    if (mult == 0) return {};
    return {FlagComponent{static_cast<int>(alpha), mult}};
}

std::optional<ProductCohomology> product_flag_cohomology(
    int e, int r, const std::vector<FlagFactor>& factors, int p, int q) {
    if (factors.empty()) throw std::invalid_argument("product requires at least one factor");
    long long lam = 0, l_total = 0, s_total = 0, k_total = 0, pi_floor = 0;
    std::vector<int> s_list;
    for (const FlagFactor& f : factors) {
        validate_factor(e, r, f.s, f.l);
        lam += f.l - 1;
        l_total += f.l;
        s_total += f.s;
        k_total += r * f.l + f.s;
        pi_floor += pi_rs(r, f.s);
        s_list.push_back(f.s);
    }
    const long long pi = p - lam * triangle(r);
    if (pi < pi_floor - k_total + l_total)
        throw validity_window_error("product_flag_cohomology: p below the validity window");
    const long long sigma = q + r * lam + s_total - p;
    if (sigma < 0 || sigma > l_total) return std::nullopt;

    const long long mult = n_s_product(r, s_list, pi + r * sigma);
    if (mult == 0) return std::nullopt;

    std::vector<std::vector<int>> splittings;
    std::vector<int> cur;
    auto rec = [&](auto&& self, std::size_t idx, long long left) -> void {
        if (idx == factors.size()) {
            if (left == 0) splittings.push_back(cur);
            return;
        }
        const int k_i = r * factors[idx].l + factors[idx].s;
        const int cap = std::min(factors[idx].l, k_i - 1);
        for (int a = 0; a <= cap && a <= left; ++a) {
            cur.push_back(a);
            self(self, idx + 1, left - a);
            cur.pop_back();
        }
    };
    rec(rec, 0, sigma);
    if (splittings.empty()) return std::nullopt;

    return ProductCohomology{static_cast<int>(sigma), mult, std::move(splittings)};
}

Envelopes envelopes(int r, const std::vector<FlagFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("envelopes require at least one factor");
    long long lam = 0, pis = 0, s_total = 0;
    for (const FlagFactor& f : factors) {
        if (!(0 < f.s && f.s < r) || f.l < 1)
            throw std::invalid_argument("envelopes: invalid factor");
        lam += f.l - 1;
        pis += pi_rs(r, f.s);
        s_total += f.s;
    }
    return Envelopes{lam * triangle(r) + pis, lam * triangle(r - 1) + pis - s_total};
}

bool containment_premise(const Envelopes& env, int r, int p, int q, int sigma) {
    return p >= env.p_max - static_cast<long long>(r) * sigma ||
           q >= env.q_max - static_cast<long long>(r - 1) * sigma;
}

}  // namespace hookcoh
