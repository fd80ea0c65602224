#include "hookcoh/verify.hpp"

#include <sstream>

#include "hookcoh/admissible.hpp"
#include "hookcoh/bott.hpp"
#include "hookcoh/bounds.hpp"
#include "hookcoh/extremal.hpp"
#include "hookcoh/grassmann.hpp"

namespace hookcoh {

namespace {

void add_check(Report& report, const std::string& name, bool passed,
               const std::string& message = "") {
    report.checks.push_back(Check{name, passed, passed ? "" : message});
}

std::string triple(int r, int x, int l, const char* mid) {
    std::ostringstream os;
    os << "r=" << r << " " << mid << "=" << x << " l=" << l;
    return os.str();
}

}  // namespace

Report suite_bijection() {
    Report report;
    for (int r = 1; r <= 4; ++r) {
        for (int l = 2; l <= 5; ++l) {
            const auto box = enumerate_box({r, l - 1});
            bool round_a = true, round_b = true, mono = true;
            std::string witness;

            for (const Partition& nu : box) {
                const Partition lam = hat(nu, l, r);
                std::vector<int> padded(static_cast<std::size_t>(r), 0);
                for (int i = 1; i <= nu.length(); ++i)
                    padded[static_cast<std::size_t>(i - 1)] = nu.part(i);
                if (h_minus(lam, l, r) != padded) {
                    round_a = false;
                    witness = nu.to_string();
                }
            }
            add_check(report, triple(r, 0, l, "box") + " h_minus(hat) = id", round_a,
                      "fails at nu=" + witness);

            long long count = 0;
            for (const Partition& lam : enumerate_box({r, r * (l - 1)})) {
                if (!is_admissible(lam, l)) continue;
                ++count;
                const Partition back = hat(Partition(h_minus(lam, l, r)), l, r);
                if (back != lam) {
                    round_b = false;
                    witness = lam.to_string();
                }
            }
            add_check(report, triple(r, 0, l, "box") + " hat(h_minus) = id", round_b,
                      "fails at lambda=" + witness);
            add_check(report, triple(r, 0, l, "box") + " cardinality",
                      count == binomial(r + l - 1, r),
                      "got " + std::to_string(count) + ", expected " +
                          std::to_string(binomial(r + l - 1, r)));

            for (const Partition& n1 : box)
                for (const Partition& n2 : box)
                    if (contains(n1, n2) && !contains(hat(n1, l, r), hat(n2, l, r))) {
                        mono = false;
                        witness = n1.to_string() + " in " + n2.to_string();
                    }
            add_check(report, triple(r, 0, l, "box") + " hat monotone", mono,
                      "fails at " + witness);
        }
    }

    bool mult = true;
    std::string mult_witness;
    for (const Partition& lam : enumerate_box({6, 6}))
        for (int l = 1; l <= 4 && mult; ++l) {
            if (!is_admissible(lam, l)) continue;
            for (int k = 1; k <= 3; ++k)
                if (!is_admissible(lam, k * l)) {
                    mult = false;
                    mult_witness = lam.to_string() + " l=" + std::to_string(l) +
                                   " k=" + std::to_string(k);
                }
        }
    add_check(report, "(kl)-admissibility over 6x6 boxes", mult, mult_witness);
    return report;
}

Report suite_snow_vs_bott() {
    Report report;
    for (int e = 2; e <= 6; ++e)
        for (int r = 1; r < e; ++r)
            for (int l = 1; l <= 4; ++l)
                add_check(report,
                          "table (" + std::to_string(r) + "," + std::to_string(e) + "," +
                              std::to_string(l) + ")",
                          cohomology_table(r, e, l) == oracle_table(r, e, l),
                          "snow and bott tables differ");
    return report;
}

Report suite_pmax() {
    Report report;

    int weight_fail = 0, euclid_fail = 0, total = 0;
    std::string weight_witness, euclid_witness;
    for (int n = 2; n <= 12; ++n) {
        for (int r = 1; r < n; ++r) {
            for (int l = 2; l <= 6; ++l) {
                ++total;
                const MaximizeResult res = maximize(r, n, l);
                const long long brute = brute_force_pmax(r, n, l);
                const long long family = family_enum_max(r, n, l);
                if (res.pmax != brute || res.pmax != family) {
                    ++weight_fail;
                    if (weight_witness.empty())
                        weight_witness = triple(r, n, l, "n") + ": greedy " +
                                         std::to_string(res.pmax) + ", brute " +
                                         std::to_string(brute) + ", family " +
                                         std::to_string(family);
                }
                if (res.params.alpha + res.params.beta != n / l ||
                    res.params.gamma + res.params.c != n % l) {
                    ++euclid_fail;
                    if (euclid_witness.empty())
                        euclid_witness = triple(r, n, l, "n") + ": params(a=" +
                                         std::to_string(res.params.a) + ",alpha=" +
                                         std::to_string(res.params.alpha) + ",beta=" +
                                         std::to_string(res.params.beta) + ",c=" +
                                         std::to_string(res.params.c) + ",gamma=" +
                                         std::to_string(res.params.gamma) + ")";
                }
            }
        }
    }
    add_check(report, "pmax greedy = brute force = family max (n <= 12)", weight_fail == 0,
              std::to_string(weight_fail) + "/" + std::to_string(total) +
                  " grid points fail, first: " + weight_witness);
    add_check(report, "Euclidean division of maximize params (n <= 12)", euclid_fail == 0,
              std::to_string(euclid_fail) + "/" + std::to_string(total) +
                  " grid points fail, first: " + euclid_witness);

    bool a_gain = true, b_gain = true;
    std::string a_witness, b_witness;
    for (int r = 1; r <= 6; ++r) {
        for (int l = 2; l <= 5; ++l) {
            for (const Partition& nu : enumerate_box({r, l - 1})) {
                const long long base = hat(nu, l, r).weight();
                for (int i = 0; i <= r; ++i) {
                    for (int a = 2; a <= l - 1; ++a) {
                        if (i + 2 * (l - a) + 1 > r) continue;
                        for (int b = 0; b <= a - 2; ++b) {
                            Partition out;
                            try {
                                out = transform_A(nu, i, a, b, l);
                            } catch (const std::invalid_argument&) {
                                continue;
                            }
                            if (hat(out, l, r).weight() - base < l - a + 1) {
                                a_gain = false;
                                a_witness = nu.to_string() + " i=" + std::to_string(i) +
                                            " a=" + std::to_string(a) +
                                            " b=" + std::to_string(b);
                            }
                        }
                    }
                    for (int a = 1; a <= l - 1; ++a) {
                        for (int b = 0; b <= a - 1; ++b) {
                            for (int beta = 1; i + (2 + beta) * (l - a) - 1 <= r; ++beta) {
                                Partition out;
                                try {
                                    out = transform_B(nu, i, a, b, beta, l);
                                } catch (const std::invalid_argument&) {
                                    continue;
                                }
                                if (out.length() > r) continue;
                                if (hat(out, l, r).weight() - base < 2 * (l - a)) {
                                    b_gain = false;
                                    b_witness = nu.to_string() + " i=" + std::to_string(i) +
                                                " a=" + std::to_string(a) +
                                                " b=" + std::to_string(b) +
                                                " beta=" + std::to_string(beta);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    add_check(report, "transformation A gains >= l-a+1 (r <= 6, l <= 5)", a_gain, a_witness);
    add_check(report, "transformation B gains >= 2(l-a) (r <= 6, l <= 5)", b_gain, b_witness);
    return report;
}

Report suite_tables(const std::string& table_path) {
    return verify_tables(load_table_rows(table_path));
}

Report suite_lr_identities() {
    Report report;
    for (int e = 3; e <= 5; ++e) {
        const Report sub = lr_identity_checks(e);
        report.checks.insert(report.checks.end(), sub.checks.begin(), sub.checks.end());
    }
    return report;
}

}  // namespace hookcoh
