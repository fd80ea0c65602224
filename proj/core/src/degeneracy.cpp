#include "hookcoh/degeneracy.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "hookcoh/bounds.hpp"

namespace hookcoh {

Partition symmetric_partition(const SymmetricDecomposition& d) {
    if (d.l < 0) throw std::invalid_argument("symmetric decomposition requires l >= 0");
    if (d.l == 0) {
        if (!d.mu.empty())
            throw std::invalid_argument("l == 0 decomposition must have empty mu");
        return {};
    }
    if (d.mu.length() > 2 * d.l)
        throw std::invalid_argument("symmetric decomposition requires length(mu) <= 2l");
    std::vector<int> parts;
    for (int i = 1; i <= 2 * d.l; ++i) parts.push_back(2 * d.l + d.mu.part(i));
    const Partition conj = d.mu.conjugate();
    for (int i = 1; i <= conj.length(); ++i) parts.push_back(conj.part(i));
    return Partition(std::move(parts));
}

std::optional<SymmetricDecomposition> is_k_symmetric(const Partition& lam, int k) {
    if (k < 1) throw std::invalid_argument("is_k_symmetric requires k >= 1");
    const int d = lam.durfee_rank();
    if (d == 0) return lam.empty() ? std::optional<SymmetricDecomposition>({0, {}})
                                   : std::nullopt;
    if (d % 2 != 0) return std::nullopt;
    // strip the k-1 inserted rank-valued parts right below the Durfee square
    for (int i = 1; i <= k - 1; ++i)
        if (lam.part(d + i) != d) return std::nullopt;
    std::vector<int> base;
    for (int i = 1; i <= d; ++i) base.push_back(lam.part(i));
    for (int i = d + k; i <= lam.length(); ++i) base.push_back(lam.part(i));
    const Partition stripped{std::move(base)};
    if (stripped.durfee_rank() != d) return std::nullopt;

    const int l = d / 2;
    std::vector<int> mu_parts;
    for (int i = 1; i <= d; ++i) mu_parts.push_back(stripped.part(i) - d);
    Partition mu{std::move(mu_parts)};
    const Partition conj = mu.conjugate();
    for (int i = 1; i <= std::max(conj.length(), stripped.length() - d); ++i)
        if (stripped.part(d + i) != conj.part(i)) return std::nullopt;
    return SymmetricDecomposition{l, std::move(mu)};
}

long long i_of(const Partition& lam, int k) {
    const auto d = is_k_symmetric(lam, k);
    if (!d) throw std::invalid_argument("i_of: partition is not (k-1)-symmetric");
    return d->mu.weight() + static_cast<long long>(d->l) * (2 * d->l - 1);
}

Partition k0_insert(const SymmetricDecomposition& d) {
    if (d.l < 1) throw std::invalid_argument("k0_insert requires l >= 1");
    if (d.mu.length() > 2 * d.l)
        throw std::invalid_argument("k0_insert requires length(mu) <= 2l");
    const Partition conj = d.mu.conjugate();
    std::vector<int> parts;
    for (int i = 1; i <= 2 * d.l - 1; ++i) parts.push_back(2 * d.l + d.mu.part(i));
    parts.push_back(conj.part(1) + d.mu.part(2 * d.l));
    for (int i = 2; i <= conj.length(); ++i) parts.push_back(conj.part(i));
    return Partition(std::move(parts));  // throws when the rule breaks monotonicity
}

std::vector<ResolutionTerm> resolution_terms(int e, int k, long long i) {
    if (!(0 <= k && k < e)) throw std::invalid_argument("resolution_terms requires 0 <= k < e");
    if (i < 0) throw std::invalid_argument("resolution index must be nonnegative");
    std::vector<ResolutionTerm> out;
    if (i == 0) {
        out.push_back(ResolutionTerm{0, {}, 0});
        return out;
    }
    for (int l = 1; static_cast<long long>(l) * (2 * l - 1) <= i; ++l) {
        const long long m = i - static_cast<long long>(l) * (2 * l - 1);
        const int mu_width = k >= 1 ? e - 2 * l - k + 1 : e - 2 * l + 1;
        if (mu_width < 0) continue;
        for (const Partition& mu : enumerate_box({2 * l, mu_width})) {
            if (mu.weight() != m) continue;
            const SymmetricDecomposition dec{l, mu};
            Partition term = k >= 1 ? insert_parts(symmetric_partition(dec), k - 1)
                                    : k0_insert(dec);
            if (term.length() > e) continue;
            out.push_back(ResolutionTerm{
                i, std::move(term), -static_cast<long long>(l) * (2 * l + k - 1)});
        }
    }
    std::sort(out.begin(), out.end(), [](const ResolutionTerm& x, const ResolutionTerm& y) {
        return x.lambda < y.lambda;
    });
    return out;
}

long long rho(long long n, int e, int k) {
    if (e <= k) throw std::invalid_argument("rho requires e > k");
    return n - triangle(e - k);
}

long long lemma_bound(LemmaTag tag, const LemmaArgs& v) {
    switch (tag) {
        case LemmaTag::APrime:
            throw std::invalid_argument("A' rows carry reference data, not a calculator");
        case LemmaTag::L1:
            return 2LL * v.c + v.d + 2;
        case LemmaTag::L1Plus:
            return 3LL * v.c + 1;
        case LemmaTag::L2:
            return v.a + 2LL;
        case LemmaTag::L2Plus:
            return v.a + 1LL;
        case LemmaTag::L3:
            return 4LL * v.c + 4;
        case LemmaTag::L4:
            return 2LL * v.a + 4;
        case LemmaTag::L5:
            if ((v.a - v.c) % 2 != 0)
                throw std::invalid_argument("l5 requires a and c of equal parity");
            return 2LL * v.c + 2;
        case LemmaTag::L5Alt:
            return v.a + 2LL;
        case LemmaTag::L5Mid:
            return std::max(v.a, 2 * v.c) + 1LL;
        case LemmaTag::NM2:
            if ((v.a - v.c) % 2 != 0)
                throw std::invalid_argument("the n-2 lemma requires a and c of equal parity");
            return v.a + 2LL * v.c + 2;
        case LemmaTag::L6:
            if ((v.a - v.c) % 2 != 0)
                throw std::invalid_argument("l6 requires a and c of equal parity");
            return v.a + 2LL * v.c + 4;
        case LemmaTag::L7:
            return 6;
    }
    throw std::invalid_argument("unknown lemma tag");
}

LemmaTag parse_lemma_tag(const std::string& name) {
    if (name == "A'") return LemmaTag::APrime;
    if (name == "l1") return LemmaTag::L1;
    if (name == "l1+") return LemmaTag::L1Plus;
    if (name == "l2") return LemmaTag::L2;
    if (name == "l2+") return LemmaTag::L2Plus;
    if (name == "l3") return LemmaTag::L3;
    if (name == "l4") return LemmaTag::L4;
    if (name == "l5") return LemmaTag::L5;
    if (name == "l5b") return LemmaTag::L5Alt;
    if (name == "l5-") return LemmaTag::L5Mid;
    if (name == "n-2") return LemmaTag::NM2;
    if (name == "l6") return LemmaTag::L6;
    if (name == "l7") return LemmaTag::L7;
    throw std::invalid_argument("unknown lemma tag: " + name);
}

std::string lemma_tag_name(LemmaTag tag) {
    switch (tag) {
        case LemmaTag::APrime: return "A'";
        case LemmaTag::L1: return "l1";
        case LemmaTag::L1Plus: return "l1+";
        case LemmaTag::L2: return "l2";
        case LemmaTag::L2Plus: return "l2+";
        case LemmaTag::L3: return "l3";
        case LemmaTag::L4: return "l4";
        case LemmaTag::L5: return "l5";
        case LemmaTag::L5Alt: return "l5b";
        case LemmaTag::L5Mid: return "l5-";
        case LemmaTag::NM2: return "n-2";
        case LemmaTag::L6: return "l6";
        case LemmaTag::L7: return "l7";
    }
    return "?";
}

namespace {

LemmaArgs parse_args(const std::string& text) {
    LemmaArgs args;
    if (text == "-") return args;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto eq = tok.find('=');
        if (eq == std::string::npos || eq + 1 >= tok.size() || eq != 1)
            throw std::invalid_argument("bad lemma argument: " + tok);
        const int value = std::stoi(tok.substr(eq + 1));
        switch (tok[0]) {
            case 'a': args.a = value; break;
            case 'b': args.b = value; break;
            case 'c': args.c = value; break;
            case 'd': args.d = value; break;
            default: throw std::invalid_argument("bad lemma argument: " + tok);
        }
    }
    return args;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

std::vector<TableRow> parse_table_rows(std::istream& in) {
    std::vector<TableRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string partition_text, bracket_text, entries_text;
        TableRow row;
        if (!(ss >> row.e >> row.k >> partition_text >> bracket_text >> row.bound >>
              entries_text))
            throw std::invalid_argument("bad table row: " + line);
        row.partition = parse_partition(partition_text);
        const std::vector<int> br = parse_int_list(bracket_text);
        if (br.size() != 4) throw std::invalid_argument("bad bracket in row: " + line);
        row.bracket = BracketShape::rank2(br[0], br[1], br[2], br[3], row.e);
        std::stringstream es(entries_text);
        std::string entry_text;
        while (std::getline(es, entry_text, ';')) {
            const auto c1 = entry_text.find(':');
            const auto c2 = entry_text.find(':', c1 + 1);
            if (c1 == std::string::npos || c2 == std::string::npos)
                throw std::invalid_argument("bad table entry: " + entry_text);
            TableEntry entry;
            entry.q0 = std::stoll(entry_text.substr(0, c1));
            entry.tag = parse_lemma_tag(entry_text.substr(c1 + 1, c2 - c1 - 1));
            entry.args = parse_args(entry_text.substr(c2 + 1));
            row.entries.push_back(entry);
        }
        if (row.entries.empty()) throw std::invalid_argument("row without entries: " + line);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<TableRow> load_table_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open table file: " + path);
    return parse_table_rows(in);
}

std::string default_table_path() {
    if (const char* env = std::getenv("HOOKCOH_TABLES")) return env;
#ifdef HOOKCOH_SOURCE_TABLE_PATH
    return HOOKCOH_SOURCE_TABLE_PATH;
#else
    return "data/q0_tables.txt";
#endif
}

bool Report::all_passed() const {
    for (const Check& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

void add_check(Report& report, const std::string& name, bool passed,
               const std::string& message = "") {
    report.checks.push_back(Check{name, passed, passed ? "" : message});
}

}  // namespace

Report verify_tables(const std::vector<TableRow>& rows) {
    Report report;
    for (const TableRow& row : rows) {
        const std::string id =
            "e=" + std::to_string(row.e) + " " + row.partition.to_string();
        try {
            const Partition from_bracket = bracket_to_partition(row.bracket);
            add_check(report, id + " bracket", from_bracket == row.partition,
                      "bracket gives " + from_bracket.to_string());
            const long long i = i_of(row.partition, row.k);
            const long long bound = triangle(row.e - row.k) + 1 - i;
            add_check(report, id + " bound column", bound == row.bound,
                      "recomputed " + std::to_string(bound) + ", printed " +
                          std::to_string(row.bound));
            for (const TableEntry& entry : row.entries) {
                add_check(report, id + " q0<=bound", entry.q0 <= row.bound,
                          "q0 " + std::to_string(entry.q0) + " exceeds bound " +
                              std::to_string(row.bound));
                if (entry.tag == LemmaTag::APrime) continue;
                const long long value = lemma_bound(entry.tag, entry.args);
                add_check(report, id + " " + lemma_tag_name(entry.tag), value == entry.q0,
                          "calculator gives " + std::to_string(value) + ", printed " +
                              std::to_string(entry.q0));
            }
        } catch (const std::exception& ex) {
            add_check(report, id, false, ex.what());
        }
    }
    return report;
}

namespace {

using Product = std::map<Partition, long long>;

Product signed_diff(const Product& a, const Product& b) {
    Product out = a;
    for (const auto& [key, mult] : b) {
        out[key] -= mult;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

bool is_type_00(const Partition& nu) {
    // [0,0,x,y]: both leading parts equal to 2
    return nu.part(1) == 2 && nu.part(2) == 2;
}

// Residual components the quoted identities leave aside: determinant-like
// [0,0,x,y] summands, plus rank-1 components of full length e, which die as
// soon as the ambient rank grows.
bool allowed_residual(const Partition& nu, int e) {
    if (is_type_00(nu)) return true;
    return nu.durfee_rank() <= 1 && nu.length() == e;
}

Partition bracket1(int a, int b, int e) {
    return bracket_to_partition(BracketShape::rank1(a, b, e));
}

void check_l1_identity(Report& report, int e, int c, int d) {
    const std::string id = "l1 identity e=" + std::to_string(e) + " c=" +
                           std::to_string(c) + " d=" + std::to_string(d);
    Product lhs = lr_product(bracket1(1, c + 1, e), bracket1(0, d, e), e);
    Product listed;
    for (int x = 0; x <= c + 1; ++x) {
        const int y = c + d + 1 - x;
        if (x > y || y > e - 2) continue;
        ++listed[bracket_to_partition(BracketShape::rank2(1, 0, x, y, e))];
    }
    for (const auto& [nu, mult] : listed) {
        const auto it = lhs.find(nu);
        if (it == lhs.end() || it->second != mult) {
            add_check(report, id, false,
                      "listed component " + nu.to_string() + " has multiplicity " +
                          std::to_string(it == lhs.end() ? 0 : it->second));
            return;
        }
    }
    for (const auto& [nu, mult] : signed_diff(lhs, listed)) {
        (void)mult;
        const bool hook_type = nu.part(1) == 3 && nu.part(2) == 2;
        if (hook_type || !allowed_residual(nu, e)) {
            add_check(report, id, false, "unexpected residual " + nu.to_string());
            return;
        }
    }
    add_check(report, id, true);
}

void check_l1plus_identities(Report& report, int e, int c) {
    const std::string id =
        "l1+ identity e=" + std::to_string(e) + " c=" + std::to_string(c);
    // S_[1,c+1] (x) S_[0,c] = S_[1,c+2] (x) S_[0,c-1]  (+)  S_[1,0,c,c+1]  mod residuals
    Product diff = signed_diff(lr_product(bracket1(1, c + 1, e), bracket1(0, c, e), e),
                               lr_product(bracket1(1, c + 2, e), bracket1(0, c - 1, e), e));
    const Partition hook = bracket_to_partition(BracketShape::rank2(1, 0, c, c + 1, e));
    if (diff.count(hook) == 0 || diff[hook] != 1) {
        add_check(report, id, false, "missing " + hook.to_string());
        return;
    }
    diff.erase(hook);
    for (const auto& [nu, mult] : diff) {
        (void)mult;
        if (!allowed_residual(nu, e)) {
            add_check(report, id, false, "unexpected residual " + nu.to_string());
            return;
        }
    }
    // S_[0,c] (x) S_[0,c] = S_[0,c-1] (x) S_[0,c+1]  (+)  S_[0,0,c,c]   (exact)
    Product col_diff = signed_diff(lr_product(bracket1(0, c, e), bracket1(0, c, e), e),
                                   lr_product(bracket1(0, c - 1, e), bracket1(0, c + 1, e), e));
    Product expected;
    ++expected[bracket_to_partition(BracketShape::rank2(0, 0, c, c, e))];
    if (col_diff != expected) {
        add_check(report, id, false, "column identity mismatch");
        return;
    }
    add_check(report, id, true);
}

}  // namespace

Report lr_identity_checks(int e) {
    if (e < 3 || e > 6) throw std::invalid_argument("lr_identity_checks requires 3 <= e <= 6");
    Report report;
    if (e == 3) {
        // S_[1,0] (x) S_[0,1] = (det)^2 (+) det (x) S_[1,1]
        Product lhs = lr_product(bracket1(1, 0, 3), bracket1(0, 1, 3), 3);
        Product rhs;
        ++rhs[Partition{2, 2, 2}];
        ++rhs[Partition{3, 2, 1}];
        add_check(report, "det identity e=3", lhs == rhs, "product mismatch");
    }
    if (e >= 4) {
        check_l1_identity(report, e, 0, 0);
        check_l1_identity(report, e, 0, 1);
        check_l1_identity(report, e, 1, 1);
        if (e >= 5) check_l1_identity(report, e, 1, 2);
        check_l1plus_identities(report, e, 1);
        if (e >= 5) check_l1plus_identities(report, e, 2);
    }
    return report;
}

}  // namespace hookcoh
