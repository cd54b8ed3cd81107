#include "sdt/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace sdt {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

bool is_partition(const Partition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] < p[i + 1]) return false;
    }
    return true;
}

bool is_strict_partition(const StrictPartition& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 1) return false;
        if (i + 1 < p.size() && p[i] <= p[i + 1]) return false;
    }
    return true;
}

void check_partition(const Partition& p, const std::string& what) {
    require(is_partition(p), what + ": not a partition (" + format_partition(p) + ")");
}

void check_strict_partition(const StrictPartition& p, const std::string& what) {
    require(is_strict_partition(p), what + ": not a strict partition (" + format_partition(p) + ")");
}

int weight(const Partition& p) {
    return std::accumulate(p.begin(), p.end(), 0);
}

std::string format_partition(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

Partition parse_partition(const std::string& text) {
    std::string t;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (t.empty() || t == "-") return {};
    Partition p;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        require(!item.empty() && std::all_of(item.begin(), item.end(),
                                             [](unsigned char c) { return std::isdigit(c); }),
                "bad partition '" + text + "'");
        p.push_back(std::stoi(item));
    }
    check_partition(p, "parse_partition('" + text + "')");
    return p;
}

std::vector<Cell> cells_of(const Partition& shape) {
    std::vector<Cell> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = 0; c < shape[r]; ++c) cells.push_back(Cell{c, r});
    return cells;
}

std::vector<Cell> shifted_cells_of(const StrictPartition& shape) {
    std::vector<Cell> cells;
    for (int r = 0; r < static_cast<int>(shape.size()); ++r)
        for (int c = r; c < r + shape[r]; ++c) cells.push_back(Cell{c, r});
    return cells;
}

bool shape_contains(const Partition& shape, const Cell& c) {
    if (c.row < 0 || c.col < 0) return false;
    if (c.row >= static_cast<int>(shape.size())) return false;
    return c.col < shape[c.row];
}

std::vector<Cell> up_region(const Partition& shape) {
    std::vector<Cell> cells;
    for (const Cell& c : cells_of(shape))
        if (diagonal(c) >= 1) cells.push_back(c);
    return cells;
}

std::vector<Cell> down_region(const Partition& shape) {
    std::vector<Cell> cells;
    for (const Cell& c : cells_of(shape))
        if (diagonal(c) <= 0) cells.push_back(c);
    return cells;
}

std::string to_string(const QuotientPair& q) {
    return "(" + format_partition(q.mu) + ") | (" + format_partition(q.nu) + ")";
}

namespace {

// A removable domino sits at the end of its rows with nothing above: either
// the last two cells of one row, or the last cells of two equal rows.
struct Removal {
    int row;  // bottom row of the domino
    bool vertical;
    Cell top_cell; // lexicographically greatest (row, col) cell, for the tie-break
};

std::vector<Removal> removable_dominoes(const Partition& p) {
    std::vector<Removal> out;
    int len = static_cast<int>(p.size());
    for (int r = 0; r < len; ++r) {
        int above = (r + 1 < len) ? p[r + 1] : 0;
        if (p[r] >= 2 && p[r] - 2 >= above)
            out.push_back(Removal{r, false, Cell{p[r] - 1, r}});
        if (r + 1 < len && p[r] == p[r + 1]) {
            int above2 = (r + 2 < len) ? p[r + 2] : 0;
            if (p[r + 1] - 1 >= above2)
                out.push_back(Removal{r, true, Cell{p[r] - 1, r + 1}});
        }
    }
    return out;
}

} // namespace

Partition two_core(const Partition& shape) {
    check_partition(shape, "two_core");
    Partition p = shape;
    for (;;) {
        std::vector<Removal> cands = removable_dominoes(p);
        if (cands.empty()) return p;
        const Removal* best = &cands[0];
        for (const Removal& c : cands) {
            if (best->top_cell.row < c.top_cell.row ||
                (best->top_cell.row == c.top_cell.row && best->top_cell.col < c.top_cell.col))
                best = &c;
        }
        if (best->vertical) {
            --p[best->row];
            --p[best->row + 1];
        } else {
            p[best->row] -= 2;
        }
        while (!p.empty() && p.back() == 0) p.pop_back();
    }
}

QuotientPair two_quotient(const Partition& shape) {
    check_partition(shape, "two_quotient");
    Partition p = shape;
    // Keep the length even so the even/odd renumbering of L is stable; with an
    // odd length the two quotient components would swap roles.
    if (p.size() % 2 != 0) p.push_back(0);
    int len = static_cast<int>(p.size());
    std::vector<int> L(len), M(len);
    for (int i = 0; i < len; ++i) L[i] = p[i] + len - (i + 1);
    // Renumber from the smallest entry up: evens get 0,2,4,..., odds 1,3,5,...
    int next_even = 0, next_odd = 1;
    for (int i = len - 1; i >= 0; --i) {
        if (L[i] % 2 == 0) {
            M[i] = next_even;
            next_even += 2;
        } else {
            M[i] = next_odd;
            next_odd += 2;
        }
    }
    QuotientPair q;
    for (int i = 0; i < len; ++i) {
        int part = (L[i] - M[i]) / 2;
        if (L[i] % 2 == 0)
            q.mu.push_back(part);
        else
            q.nu.push_back(part);
    }
    while (!q.mu.empty() && q.mu.back() == 0) q.mu.pop_back();
    while (!q.nu.empty() && q.nu.back() == 0) q.nu.pop_back();
    internal_check(is_partition(q.mu) && is_partition(q.nu),
                   "two_quotient produced a non-partition");
    return q;
}

Partition inverse_two_quotient(const Partition& mu, const Partition& nu) {
    check_partition(mu, "inverse_two_quotient(mu)");
    check_partition(nu, "inverse_two_quotient(nu)");
    // Rebuild beta-numbers long enough to carry both components, then peel the
    // staircase back off. Using the same length for both keeps the even
    // entries attached to mu and the odd ones to nu.
    int len = static_cast<int>(mu.size() + nu.size());
    std::vector<int> L;
    for (int j = 0; j < len; ++j) {
        int part = (j < static_cast<int>(mu.size())) ? mu[j] : 0;
        L.push_back(2 * (part + len - (j + 1)));
    }
    for (int j = 0; j < len; ++j) {
        int part = (j < static_cast<int>(nu.size())) ? nu[j] : 0;
        L.push_back(2 * (part + len - (j + 1)) + 1);
    }
    std::sort(L.begin(), L.end(), std::greater<int>());
    int total = static_cast<int>(L.size());
    Partition lambda;
    for (int i = 0; i < total; ++i) lambda.push_back(L[i] - (total - (i + 1)));
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    internal_check(is_partition(lambda), "inverse_two_quotient produced a non-partition");
    internal_check(two_quotient(lambda) == QuotientPair{mu, nu},
                   "inverse_two_quotient does not invert two_quotient for (" +
                       format_partition(mu) + "),(" + format_partition(nu) + ")");
    return lambda;
}

bool is_pavable(const Partition& shape) {
    return two_core(shape).empty();
}

bool shpp_shape_ok(const Partition& shape) {
    if (!is_pavable(shape)) return false;
    QuotientPair q = two_quotient(shape);
    bool mu_ok = q.mu.empty() || q.mu.back() >= static_cast<int>(q.mu.size());
    bool nu_ok = q.nu.empty() || q.nu.back() >= static_cast<int>(q.nu.size());
    return mu_ok && nu_ok;
}

int lettered_domino_count(const Partition& shape) {
    require(shpp_shape_ok(shape), "lettered_domino_count: " + format_partition(shape) +
                                      " is not a shifted pavable partition");
    QuotientPair q = two_quotient(shape);
    return weight(unpad_shape(q.mu)) + weight(unpad_shape(q.nu));
}

Partition pad_shape(const StrictPartition& strict) {
    check_strict_partition(strict, "pad_shape");
    Partition p;
    for (size_t i = 0; i < strict.size(); ++i) p.push_back(strict[i] + static_cast<int>(i));
    internal_check(is_partition(p), "pad_shape produced a non-partition");
    return p;
}

StrictPartition unpad_shape(const Partition& padded) {
    check_partition(padded, "unpad_shape");
    require(is_padded_shape(padded),
            "unpad_shape: last part < length in " + format_partition(padded));
    StrictPartition s;
    for (size_t i = 0; i < padded.size(); ++i) s.push_back(padded[i] - static_cast<int>(i));
    internal_check(is_strict_partition(s), "unpad_shape produced a non-strict partition");
    return s;
}

bool is_padded_shape(const Partition& shape) {
    if (!is_partition(shape)) return false;
    return shape.empty() || shape.back() >= static_cast<int>(shape.size());
}

namespace {

void partitions_rec(int remaining, int max_part, Partition& prefix,
                    const std::function<void(const Partition&)>& sink) {
    if (remaining == 0) {
        sink(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        partitions_rec(remaining - part, part, prefix, sink);
        prefix.pop_back();
    }
}

} // namespace

void partitions_of(int w, const std::function<void(const Partition&)>& sink) {
    require(w >= 0, "partitions_of: negative weight");
    Partition prefix;
    partitions_rec(w, w == 0 ? 1 : w, prefix, sink);
}

std::vector<Partition> partitions_of(int w) {
    std::vector<Partition> out;
    partitions_of(w, [&](const Partition& p) { out.push_back(p); });
    return out;
}

} // namespace sdt
