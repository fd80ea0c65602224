#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hookcoh/partition.hpp"

namespace hookcoh {

/// lambda = (2l, mu, mu*): lambda_i = 2l + mu_i for i <= 2l and
/// lambda_{2l+i} = mu*_i. l == 0 encodes the empty partition.
struct SymmetricDecomposition {
    int l = 0;
    Partition mu;

    friend bool operator==(const SymmetricDecomposition&,
                           const SymmetricDecomposition&) = default;
};

/// Rebuilds (2l, mu, mu*). Requires length(mu) <= 2l.
Partition symmetric_partition(const SymmetricDecomposition& d);

/// Strips the k-1 inserted rank-valued parts and matches the (2l, mu, mu*)
/// shape; nullopt when lam is not (k-1)-symmetric. Requires k >= 1.
std::optional<SymmetricDecomposition> is_k_symmetric(const Partition& lam, int k);

/// Resolution index |mu| + l(2l-1); throws when lam is not (k-1)-symmetric.
long long i_of(const Partition& lam, int k);

struct ResolutionTerm {
    long long i = 0;
    Partition lambda;  // after the lambda(k-1) insertion
    long long twist = 0;

    friend bool operator==(const ResolutionTerm&, const ResolutionTerm&) = default;
};

/// All terms of R^i with length(lambda(k-1)) <= e. Requires 0 <= k < e;
/// k == 0 uses the special insertion rule.
std::vector<ResolutionTerm> resolution_terms(int e, int k, long long i);

/// The (2l, mu, mu*)(-1) rule: nu_i = 2l + mu_i for i <= 2l-1,
/// nu_{2l} = mu*_1 + mu_{2l}, nu_{2l-1+i} = mu*_i for i >= 2.
Partition k0_insert(const SymmetricDecomposition& d);

/// rho = n - t(e-k). Requires e > k.
long long rho(long long n, int e, int k);

enum class LemmaTag {
    APrime,  // reference data, no calculator
    L1,      // 2c + d + 2
    L1Plus,  // 3c + 1
    L2,      // a + 2
    L2Plus,  // a + 1
    L3,      // 4c + 4
    L4,      // 2a + 4
    L5,      // 2c + 2  (first top-level bound; a, c of equal parity)
    L5Alt,   // a + 2   (second top-level bound)
    L5Mid,   // max(a, 2c) + 1
    NM2,     // a + 2c + 2
    L6,      // a + 2c + 4
    L7,      // 6
};

struct LemmaArgs {
    int a = 0, b = 0, c = 0, d = 0;
};

long long lemma_bound(LemmaTag tag, const LemmaArgs& args);
LemmaTag parse_lemma_tag(const std::string& name);
std::string lemma_tag_name(LemmaTag tag);

struct TableEntry {
    long long q0 = 0;
    LemmaTag tag = LemmaTag::APrime;
    LemmaArgs args;
};

struct TableRow {
    int e = 0;
    int k = 1;
    Partition partition;
    BracketShape bracket;  // the row's own rank-2 bracket
    long long bound = 0;   // printed t(e-k)+1-i column
    std::vector<TableEntry> entries;
};

std::vector<TableRow> parse_table_rows(std::istream& in);
std::vector<TableRow> load_table_rows(const std::string& path);

/// Compiled-in location of data/q0_tables.txt, overridable through the
/// HOOKCOH_TABLES environment variable.
std::string default_table_path();

struct Check {
    std::string name;
    bool passed = true;
    std::string message;
};

struct Report {
    std::vector<Check> checks;
    bool all_passed() const;
};

/// Recomputes i(lambda, k), the printed bound column, the q0 <= bound
/// inequality and every tagged calculator value for each row.
Report verify_tables(const std::vector<TableRow>& rows);

/// Checks the Littlewood-Richardson decompositions quoted by the lemma
/// proofs as multiset identities at ambient rank e (3 <= e <= 6).
Report lr_identity_checks(int e);

}  // namespace hookcoh
