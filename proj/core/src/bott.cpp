#include "hookcoh/bott.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookcoh {

std::vector<std::pair<Partition, Partition>> cotangent_components(int r, int e, int p) {
    if (!(1 <= r && r < e)) throw std::invalid_argument("cotangent_components requires 1 <= r < e");
    if (p < 0 || p > r * (e - r))
        throw std::invalid_argument("cotangent_components requires 0 <= p <= r(e-r)");
    std::vector<std::pair<Partition, Partition>> out;
    for (const Partition& lam : enumerate_box({r, e - r}))
        if (lam.weight() == p) out.emplace_back(lam, lam.conjugate());
    return out;
}

std::optional<std::pair<int, std::vector<int>>> bott_step(const std::vector<int>& c) {
    const int e = static_cast<int>(c.size());
    std::vector<int> shifted(c);
    for (int i = 0; i < e; ++i) shifted[static_cast<std::size_t>(i)] += e - 1 - i;

    std::vector<int> sorted(shifted);
    std::sort(sorted.rbegin(), sorted.rend());
    for (int i = 0; i + 1 < e; ++i)
        if (sorted[static_cast<std::size_t>(i)] == sorted[static_cast<std::size_t>(i) + 1])
            return std::nullopt;

    int inversions = 0;
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (shifted[static_cast<std::size_t>(i)] < shifted[static_cast<std::size_t>(j)])
                ++inversions;

    std::vector<int> dominant(sorted);
    for (int i = 0; i < e; ++i) dominant[static_cast<std::size_t>(i)] -= e - 1 - i;
    return std::make_pair(inversions, dominant);
}

std::vector<int> block_weight(const Partition& lambda, int r, int e, int l) {
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(e));
    for (int i = r; i >= 1; --i) c.push_back(l - lambda.part(i));
    const Partition conj = lambda.conjugate();
    for (int j = 1; j <= e - r; ++j) c.push_back(conj.part(j));
    return c;
}

CohomologyTable oracle_table(int r, int e, int l) {
    if (!(1 <= r && r < e)) throw std::invalid_argument("oracle_table requires 1 <= r < e");
    if (l < 1) throw std::invalid_argument("oracle_table requires l >= 1");
    CohomologyTable table;
    table.r = r;
    table.e = e;
    table.l = l;
    for (int p = 0; p <= r * (e - r); ++p) {
        for (const auto& [lam, conj] : cotangent_components(r, e, p)) {
            (void)conj;
            const auto res = bott_step(block_weight(lam, r, e, l));
            if (!res) continue;
            ++table.groups[{p, res->first}][res->second];
        }
    }
    return table;
}

}  // namespace hookcoh
