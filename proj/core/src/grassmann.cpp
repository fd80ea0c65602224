#include "hookcoh/grassmann.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookcoh {

std::vector<int> snow_weight(const AdmissibleRecord& rec, int e) {
    const int w = e - rec.r;
    if (w < 1) throw std::invalid_argument("snow_weight requires r < e");
    if (rec.lambda.part(1) > w)
        throw std::invalid_argument("snow_weight: lambda does not fit the r x (e-r) box");
    std::vector<int> weight;
    weight.reserve(static_cast<std::size_t>(e));
    for (int i = 0; i < rec.r; ++i)
        weight.push_back(rec.l - rec.h_minus[static_cast<std::size_t>(i)]);
    const std::vector<int> v = h_minus(rec.lambda.conjugate(), rec.l, w);
    weight.insert(weight.end(), v.begin(), v.end());
    std::sort(weight.rbegin(), weight.rend());
    return weight;
}

CohomologyTable cohomology_table(int r, int e, int l) {
    if (!(1 <= r && r < e)) throw std::invalid_argument("cohomology_table requires 1 <= r < e");
    if (l < 1) throw std::invalid_argument("cohomology_table requires l >= 1");
    CohomologyTable table;
    table.r = r;
    table.e = e;
    table.l = l;
    for (const AdmissibleRecord& rec : enumerate_admissible(r, l, e - r)) {
        const std::vector<int> mu = snow_weight(rec, e);
        ++table.groups[{static_cast<int>(rec.p), static_cast<int>(rec.q)}][mu];
    }
    return table;
}

int p_max(int r, int e, int l) {
    int best = 0;
    for (const AdmissibleRecord& rec : enumerate_admissible(r, l, e - r))
        best = std::max(best, static_cast<int>(rec.p));
    return best;
}

}  // namespace hookcoh
