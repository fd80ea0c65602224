#include "hookcoh/admissible.hpp"

#include <stdexcept>

namespace hookcoh {

bool is_admissible(const Partition& lam, int l) {
    if (l < 1) throw std::invalid_argument("admissibility requires l >= 1");
    return !lam.has_hook(l);
}

std::vector<int> h_minus(const Partition& lam, int l, int r) {
    if (l < 1) throw std::invalid_argument("h_minus requires l >= 1");
    if (lam.length() > r) throw std::invalid_argument("h_minus requires length(lambda) <= r");
    std::vector<int> out(static_cast<std::size_t>(r), 0);
    const Partition conj = lam.conjugate();
    for (int i = 1; i <= lam.length(); ++i) {
        int count = 0;
        for (int j = 1; j <= lam.part(i); ++j)
            if (lam.part(i) - j + conj.part(j) - i + 1 < l) ++count;
        out[static_cast<std::size_t>(i - 1)] = count;
    }
    return out;
}

long long cells_above(const Partition& lam, int l) {
    long long count = 0;
    for (const auto& row : lam.hook_table())
        for (int h : row)
            if (h > l) ++count;
    return count;
}

Partition hat(const Partition& nu, int l, int r) {
    if (l < 1) throw std::invalid_argument("hat requires l >= 1");
    if (nu.length() > r) throw std::invalid_argument("hat requires length(nu) <= r");
    if (nu.part(1) > l - 1) throw std::invalid_argument("hat requires parts of nu < l");
    std::vector<int> lam(static_cast<std::size_t>(r) + 1, 0);
    for (int i = r; i >= 1; --i) {
        const int jump = i + l - nu.part(i);
        lam[static_cast<std::size_t>(i)] =
            (jump <= r ? lam[static_cast<std::size_t>(jump)] : 0) + nu.part(i);
    }
    lam.erase(lam.begin());
    return Partition(std::move(lam));
}

std::pair<long long, long long> pq_of(const Partition& nu, int l, int r) {
    const Partition lam = hat(nu, l, r);
    return {lam.weight(), cells_above(lam, l)};
}

AdmissibleRecord make_admissible_record(const Partition& lambda, int l, int r,
                                        std::optional<int> width) {
    AdmissibleRecord rec;
    rec.lambda = lambda;
    rec.l = l;
    rec.r = r;
    rec.h_minus = h_minus(lambda, l, r);
    const int w = width.value_or(lambda.part(1));
    rec.v_minus = h_minus(lambda.conjugate(), l, w);
    rec.p = lambda.weight();
    rec.q = cells_above(lambda, l);
    return rec;
}

std::vector<AdmissibleRecord> enumerate_admissible(int r, int l,
                                                   std::optional<int> width) {
    if (l < 1) throw std::invalid_argument("enumerate_admissible requires l >= 1");
    if (r < 1) throw std::invalid_argument("enumerate_admissible requires r >= 1");
    std::vector<AdmissibleRecord> out;
    for (const Partition& nu : enumerate_box({r, l - 1})) {
        const Partition lam = hat(nu, l, r);
        if (width && lam.part(1) > *width) continue;
        out.push_back(make_admissible_record(lam, l, r, width));
    }
    return out;
}

}  // namespace hookcoh
