#include "hookcoh/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hookcoh {

namespace {

void validate_parts(const std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

void strip_zeros(std::vector<int>& parts) {
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_parts(parts_);
    strip_zeros(parts_);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition Partition::row(int m) {
    if (m < 0) throw std::invalid_argument("row length must be nonnegative");
    return m == 0 ? Partition{} : Partition{std::vector<int>{m}};
}

Partition Partition::column(int m) {
    if (m < 0) throw std::invalid_argument("column length must be nonnegative");
    return Partition{std::vector<int>(static_cast<std::size_t>(m), 1)};
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("part index is 1-based");
    return i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    return Partition(std::move(conj));
}

int Partition::durfee_rank() const {
    int d = 0;
    while (part(d + 1) >= d + 1) ++d;
    return d;
}

int Partition::hook(int i, int j) const {
    if (i < 1 || j < 1 || part(i) < j)
        throw std::invalid_argument("hook cell outside the diagram");
    return part(i) - j + conjugate().part(j) - i + 1;
}

std::vector<std::vector<int>> Partition::hook_table() const {
    const Partition conj = conjugate();
    std::vector<std::vector<int>> table;
    table.reserve(parts_.size());
    for (int i = 1; i <= length(); ++i) {
        std::vector<int> row;
        row.reserve(static_cast<std::size_t>(part(i)));
        for (int j = 1; j <= part(i); ++j)
            row.push_back(part(i) - j + conj.part(j) - i + 1);
        table.push_back(std::move(row));
    }
    return table;
}

bool Partition::has_hook(int d) const {
    for (const auto& row : hook_table())
        for (int h : row)
            if (h == d) return true;
    return false;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

std::string Partition::cli_string() const {
    if (parts_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

bool contains(const Partition& a, const Partition& b) {
    for (int i = 1; i <= a.length(); ++i)
        if (a.part(i) > b.part(i)) return false;
    return true;
}

Partition insert_parts(const Partition& p, int m) {
    if (m < 0) throw std::invalid_argument("insertion count must be nonnegative");
    const int d = p.durfee_rank();
    std::vector<int> parts(p.parts().begin(), p.parts().begin() + std::min(d, p.length()));
    parts.insert(parts.end(), static_cast<std::size_t>(m), d);
    parts.insert(parts.end(), p.parts().begin() + std::min(d, p.length()), p.parts().end());
    return Partition(std::move(parts));
}

std::vector<Partition> enumerate_box(const BoxSpec& box) {
    if (box.rows < 0 || box.cols < 0)
        throw std::invalid_argument("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(std::vector<int>(cur));
        if (row >= box.rows) return;
        for (int v = 1; v <= max_part; ++v) {
            cur.push_back(v);
            self(self, row + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, box.cols);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.parts() < b.parts();
    });
    return out;
}

namespace {

// Counts LR skew tableaux of shape nu/lam with content mu: cells are filled
// in reverse reading order (each row right to left, rows top to bottom) so
// the lattice condition and semistandardness can be checked incrementally.
long long count_lr_tableaux(const Partition& nu, const Partition& lam,
                            const Partition& mu) {
    if (!contains(lam, nu)) return 0;
    if (nu.weight() - lam.weight() != mu.weight()) return 0;

    struct Cell {
        int row, col;
    };
    std::vector<Cell> cells;
    for (int i = 1; i <= nu.length(); ++i)
        for (int j = nu.part(i); j > lam.part(i); --j) cells.push_back({i, j});
    if (cells.empty()) return mu.empty() ? 1 : 0;

    const int letters = mu.length();
    std::vector<long long> remaining(static_cast<std::size_t>(letters) + 1, 0);
    for (int i = 1; i <= letters; ++i) remaining[static_cast<std::size_t>(i)] = mu.part(i);
    std::vector<long long> placed(static_cast<std::size_t>(letters) + 1, 0);
    // entry[i][j] for filled cells, 1-based grid
    std::vector<std::vector<int>> entry(static_cast<std::size_t>(nu.length()) + 1,
                                        std::vector<int>(static_cast<std::size_t>(nu.part(1)) + 1, 0));

    long long count = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [row, col] = cells[idx];
        const int right = col < nu.part(row) ? entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col) + 1] : letters;
        const bool above_in_skew = row > 1 && nu.part(row - 1) >= col && lam.part(row - 1) < col;
        const int above = row > 1 && nu.part(row - 1) >= col
                              ? (above_in_skew ? entry[static_cast<std::size_t>(row) - 1][static_cast<std::size_t>(col)] : 0)
                              : 0;
        for (int v = above + 1; v <= (col < nu.part(row) ? right : letters); ++v) {
            if (remaining[static_cast<std::size_t>(v)] == 0) continue;
            // lattice: in the reverse reading prefix, #v stays <= #(v-1)
            if (v > 1 && placed[static_cast<std::size_t>(v)] + 1 > placed[static_cast<std::size_t>(v) - 1]) continue;
            --remaining[static_cast<std::size_t>(v)];
            ++placed[static_cast<std::size_t>(v)];
            entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            self(self, idx + 1);
            entry[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
            ++remaining[static_cast<std::size_t>(v)];
            --placed[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return count;
}

void enumerate_supershapes(const Partition& lam, long long total, int max_length,
                           int max_first, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    const long long cur_weight =
        std::accumulate(cur.begin(), cur.end(), 0LL);
    if (cur_weight > total) return;
    const int row = static_cast<int>(cur.size());
    if (cur_weight == total && row >= lam.length()) {
        out.emplace_back(std::vector<int>(cur));
        // keep extending only if more rows could still hold required parts:
        // weight is already exhausted, so no further shapes from here.
        return;
    }
    if (row >= max_length) return;
    const int hi = std::min<long long>(row == 0 ? max_first : cur[static_cast<std::size_t>(row) - 1],
                                       total - cur_weight);
    const int lo = std::max(lam.part(row + 1), 1);
    for (int v = hi; v >= lo; --v) {
        cur.push_back(v);
        enumerate_supershapes(lam, total, max_length, max_first, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::map<Partition, long long> lr_product(const Partition& a, const Partition& b,
                                          int max_length) {
    if (max_length < 0) throw std::invalid_argument("max_length must be nonnegative");
    std::map<Partition, long long> out;
    const long long total = a.weight() + b.weight();
    if (b.empty()) {
        if (a.length() <= max_length) out[a] = 1;
        return out;
    }
    std::vector<Partition> shapes;
    std::vector<int> cur;
    enumerate_supershapes(a, total, static_cast<int>(std::min<long long>(max_length, total)),
                          a.part(1) + b.part(1), cur, shapes);
    for (const Partition& nu : shapes) {
        const long long c = count_lr_tableaux(nu, a, b);
        if (c > 0) out[nu] += c;
    }
    return out;
}

BracketShape BracketShape::rank1(int a, int b, int e) {
    return BracketShape{1, a, b, 0, 0, e};
}

BracketShape BracketShape::rank2(int a, int b, int c, int d, int e) {
    return BracketShape{2, a, b, c, d, e};
}

Partition bracket_to_partition(const BracketShape& s) {
    if (s.rank == 1) {
        if (s.a < 0 || s.b < 0 || s.b > s.e - 1)
            throw std::invalid_argument("rank-1 bracket out of range for e");
        std::vector<int> parts;
        parts.push_back(s.a + 1);
        parts.insert(parts.end(), static_cast<std::size_t>(s.e - s.b - 1), 1);
        Partition lam{std::move(parts)};
        if (lam.durfee_rank() > 1)
            throw std::invalid_argument("rank-1 bracket does not define a rank-1 partition");
        return lam;
    }
    if (s.rank != 2) throw std::invalid_argument("bracket rank must be 1 or 2");
    if (s.a < s.b || s.b < 0 || s.c < 0 || s.c > s.d || s.d > s.e - 2)
        throw std::invalid_argument("rank-2 bracket out of range for e");
    const int col1 = s.e - s.c;  // total rows
    const int col2 = s.e - s.d;  // rows with part >= 2
    std::vector<int> parts;
    parts.push_back(s.a + 2);
    parts.push_back(s.b + 2);
    parts.insert(parts.end(), static_cast<std::size_t>(col2 - 2), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(col1 - col2), 1);
    Partition lam{std::move(parts)};
    if (lam.durfee_rank() != 2)
        throw std::invalid_argument("rank-2 bracket does not define a rank-2 partition");
    return lam;
}

Partition hook_functor_shape(int alpha, int beta) {
    if (alpha < 0 || alpha >= beta)
        throw std::invalid_argument("hook functor requires 0 <= alpha < beta");
    std::vector<int> parts;
    parts.push_back(beta - alpha);
    parts.insert(parts.end(), static_cast<std::size_t>(alpha), 1);
    return Partition{std::move(parts)};
}

long long schur_dimension(const Partition& p, int e) {
    if (p.length() > e)
        throw std::invalid_argument("schur_dimension requires length <= e");
    const Partition conj = p.conjugate();
    long long num = 1, den = 1;
    for (int i = 1; i <= p.length(); ++i) {
        for (int j = 1; j <= p.part(i); ++j) {
            num *= e + j - i;
            den *= p.part(i) - j + conj.part(j) - i + 1;
            const long long g = std::gcd(num, den);
            num /= g;
            den /= g;
        }
    }
    return num / den;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long out = 1;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

Partition parse_partition(const std::string& text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty partition component");
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("bad partition component: " + tok);
        parts.push_back(v);
    }
    return Partition{std::move(parts)};
}

}  // namespace hookcoh
