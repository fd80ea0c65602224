#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace hookcoh {

/// Weakly decreasing finite sequence of positive integers. Trailing zeros are
/// accepted on input but never stored; the empty partition is valid.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    static Partition row(int m);     // (m), or empty for m == 0
    static Partition column(int m);  // (1^m)

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    long long weight() const;

    /// 1-based part access; indices beyond the length read 0.
    int part(int i) const;

    Partition conjugate() const;

    /// Largest d with part(d) >= d.
    int durfee_rank() const;

    /// Hook number of the cell (i, j), 1-based. The cell must exist.
    int hook(int i, int j) const;

    /// One row of hook numbers per partition row.
    std::vector<std::vector<int>> hook_table() const;

    /// True iff some cell has hook number exactly d.
    bool has_hook(int d) const;

    std::string to_string() const;   // "(4,2,1)", "()" for empty
    std::string cli_string() const;  // "4,2,1", "0" for empty

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// a (subseteq) b, missing parts reading 0.
bool contains(const Partition& a, const Partition& b);

/// Insert m copies of durfee_rank(p) right after row durfee_rank(p).
Partition insert_parts(const Partition& p, int m);

struct BoxSpec {
    int rows = 0;
    int cols = 0;
};

/// All partitions with length <= rows and first part <= cols, in graded
/// lexicographic order (weight ascending, then part sequences ascending).
/// Count is binomial(rows + cols, rows).
std::vector<Partition> enumerate_box(const BoxSpec& box);

/// Littlewood-Richardson coefficients c^nu_{a,b} for all nu of weight
/// |a| + |b| and length <= max_length, by direct enumeration of LR skew
/// tableaux (lattice-word condition). Zero coefficients are omitted.
std::map<Partition, long long> lr_product(const Partition& a, const Partition& b,
                                          int max_length);

/// Rank-1 [a,b] or rank-2 [a,b,c,d] partition data, ambient rank e.
/// Rank 1: first part a+1, first column of length e-b.
/// Rank 2: first parts a+2, b+2, first two columns of lengths e-c, e-d.
struct BracketShape {
    int rank = 1;
    int a = 0, b = 0, c = 0, d = 0;
    int e = 0;

    static BracketShape rank1(int a, int b, int e);
    static BracketShape rank2(int a, int b, int c, int d, int e);
};

/// Converts bracket data to the partition it denotes. Throws
/// std::invalid_argument when the data is inconsistent with a partition.
Partition bracket_to_partition(const BracketShape& shape);

/// The hook partition (beta - alpha, 1^alpha) of length alpha + 1 and
/// weight beta; requires 0 <= alpha < beta.
Partition hook_functor_shape(int alpha, int beta);

/// Dimension of the Schur module S_p(C^e) via the hook content formula.
/// Requires length(p) <= e.
long long schur_dimension(const Partition& p, int e);

long long binomial(int n, int k);

/// Parses "4,2,1"; the empty string and "0" denote the empty partition.
Partition parse_partition(const std::string& text);

}  // namespace hookcoh
