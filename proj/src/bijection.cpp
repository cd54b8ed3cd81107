#include "sdt/bijection.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace sdt {

namespace {

// Letters per diagonal, bottom to top. Shared currency of both directions:
// tableaux and pavings project onto it, and the reverse direction matches
// candidates against it.
using Blocks = std::map<int, std::vector<Letter>>;

Blocks blocks_of_grid(const std::vector<std::vector<Letter>>& rows) {
    Blocks b;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        for (int c = 0; c < static_cast<int>(rows[r].size()); ++c)
            b[r - c].push_back(rows[r][c]); // r ascending == bottom to top per diagonal
    return b;
}

std::vector<std::vector<Letter>> grid_from_blocks(const Blocks& blocks) {
    std::map<Cell, Letter> cells;
    for (const auto& [k, letters] : blocks) {
        int c0 = std::max(0, -k);
        int r0 = std::max(0, k);
        for (size_t j = 0; j < letters.size(); ++j)
            cells[Cell{c0 + static_cast<int>(j), r0 + static_cast<int>(j)}] = letters[j];
    }
    std::map<int, std::vector<Letter>> per_row;
    std::map<int, int> max_col;
    for (const auto& [cell, letter] : cells) {
        per_row[cell.row].push_back(letter); // Cell order is row-major, cols ascending
        max_col[cell.row] = cell.col;
    }
    std::vector<std::vector<Letter>> rows;
    for (auto& [r, letters] : per_row) {
        internal_check(r == static_cast<int>(rows.size()),
                       "diagonal blocks leave a gap between rows");
        internal_check(max_col[r] + 1 == static_cast<int>(letters.size()),
                       "diagonal blocks do not fill a row contiguously");
        rows.push_back(std::move(letters));
    }
    for (size_t r = 1; r < rows.size(); ++r)
        internal_check(rows[r].size() <= rows[r - 1].size(),
                       "diagonal blocks do not stack to a Young diagram");
    return rows;
}

// Domino indices per (type, target diagonal), bottom to top.
std::map<std::pair<int, int>, std::vector<size_t>> domino_groups(const Paving& p) {
    std::map<std::pair<int, int>, std::vector<size_t>> groups;
    for (size_t i = 0; i < p.dominoes.size(); ++i) {
        const Domino& d = p.dominoes[i];
        groups[{domino_type(d), d.even_diagonal() / 2}].push_back(i);
    }
    for (auto& [key, idxs] : groups)
        std::sort(idxs.begin(), idxs.end(), [&](size_t a, size_t b) {
            return p.dominoes[a].even_cell().row < p.dominoes[b].even_cell().row;
        });
    return groups;
}

std::pair<Blocks, Blocks> split_blocks(const Paving& p) {
    auto groups = domino_groups(p);
    std::pair<Blocks, Blocks> out;
    for (const auto& [key, idxs] : groups) {
        Blocks& target = key.first == 1 ? out.first : out.second;
        for (size_t i : idxs) target[key.second].push_back(p.dominoes[i].label);
    }
    return out;
}

// Writes the pair's letters onto the paving's dominoes, matching block sizes
// per (type, diagonal); nullopt when the paving cannot carry the pair.
std::optional<Paving> assign_blocks(const Paving& p, const Blocks& b1, const Blocks& b2) {
    auto groups = domino_groups(p);
    Paving out = p;
    size_t used = 0;
    for (int type : {1, 2}) {
        const Blocks& blocks = type == 1 ? b1 : b2;
        for (const auto& [k, letters] : blocks) {
            auto it = groups.find({type, k});
            if (it == groups.end() || it->second.size() != letters.size()) return std::nullopt;
            for (size_t j = 0; j < letters.size(); ++j)
                out.dominoes[it->second[j]].label = letters[j];
            used += letters.size();
        }
    }
    if (used != p.dominoes.size()) return std::nullopt;
    return out;
}

void check_quotient_shapes(const Partition& lambda, const Partition& s1, const Partition& s2) {
    QuotientPair q = two_quotient(lambda);
    internal_check(s1 == q.mu && s2 == q.nu,
                   "split shapes disagree with the 2-quotient of " + format_partition(lambda));
}

} // namespace

TableauPair gamma(const DominoTableau& t) {
    require(!validate_domino_tableau(t), "gamma: input is not a valid domino tableau");
    auto [b1, b2] = split_blocks(t);
    TableauPair out{young_from_rows(grid_from_blocks(b1)), young_from_rows(grid_from_blocks(b2))};
    check_quotient_shapes(t.shape, out.t1.shape, out.t2.shape);
    internal_check(!validate_young(out.t1) && !validate_young(out.t2),
                   "gamma produced an invalid tableau");
    return out;
}

DominoTableau gamma_inverse(const TableauPair& pair) {
    require(!validate_young(pair.t1) && !validate_young(pair.t2),
            "gamma_inverse: input is not a pair of valid tableaux");
    Partition lambda = inverse_two_quotient(pair.t1.shape, pair.t2.shape);
    Blocks b1 = blocks_of_grid(pair.t1.rows);
    Blocks b2 = blocks_of_grid(pair.t2.rows);
    std::vector<DominoTableau> hits;
    enumerate_pavings(lambda, [&](const Paving& p) {
        if (auto cand = assign_blocks(p, b1, b2))
            if (!validate_domino_tableau(*cand)) hits.push_back(std::move(*cand));
    });
    internal_check(hits.size() == 1, "gamma_inverse: expected exactly one gluing, found " +
                                         std::to_string(hits.size()));
    return hits[0];
}

ShiftedTableauPair shifted_split(const ShiftedDominoTableau& t) {
    require(!validate_shdt(t, false), "shifted_split: input is not a valid tableau");
    auto [b1, b2] = split_blocks(t);
    ShiftedTableauPair out{padded_from_rows(grid_from_blocks(b1)),
                           padded_from_rows(grid_from_blocks(b2))};
    check_quotient_shapes(t.shape, out.t1.shape, out.t2.shape);
    internal_check(!validate_padded(out.t1, false) && !validate_padded(out.t2, false),
                   "shifted_split produced an invalid tableau");
    return out;
}

ShiftedDominoTableau shifted_merge(const ShiftedTableauPair& pair) {
    require(!validate_padded(pair.t1, false) && !validate_padded(pair.t2, false),
            "shifted_merge: input is not a pair of valid padded tableaux");
    if (auto w = f_violation(pair))
        throw domain_error("shifted_merge: pair lies outside F at " + to_string(*w));
    Partition lambda = inverse_two_quotient(pair.t1.shape, pair.t2.shape);
    Blocks b1 = blocks_of_grid(pair.t1.rows);
    Blocks b2 = blocks_of_grid(pair.t2.rows);
    std::vector<ShiftedDominoTableau> hits;
    enumerate_pavings(lambda, [&](const Paving& p) {
        if (!is_shpp_paving(p)) return;
        auto cand = assign_blocks(p, b1, b2);
        if (!cand) return;
        for (const Domino& d : cand->dominoes)
            if (d.label.is_x() != d.in_up_prime()) return;
        if (validate_shdt(*cand, false)) return;
        // Hits differing only in how the X part is tiled are one tableau.
        ShiftedDominoTableau canon = canonicalize_shdt(*cand);
        if (std::find(hits.begin(), hits.end(), canon) == hits.end())
            hits.push_back(std::move(canon));
    });
    internal_check(hits.size() == 1, "shifted_merge: expected exactly one gluing, found " +
                                         std::to_string(hits.size()));
    return hits[0];
}

std::optional<Cell> f_violation(const ShiftedTableauPair& pair) {
    if (pair.t1.shape.size() < 2) return std::nullopt;
    size_t common = std::min(pair.t1.shape.size(), pair.t2.shape.size());
    for (size_t i = 0; i < common; ++i) {
        int ii = static_cast<int>(i);
        if (pair.t1.shape[i] <= ii || pair.t2.shape[i] <= ii) continue;
        Letter l1 = pair.t1.rows[i][i];
        Letter l2 = pair.t2.rows[i][i];
        if (l1.is_x() || l2.is_x() || !letter_lt(l1, l2)) continue;
        bool vouched = false;
        for (int j = 0; j < ii && !vouched; ++j) {
            Letter l3 = pair.t2.rows[i][j];
            if (l3.is_x())
                vouched = true;
            else if (l1.primed ? l3 == l1 : letter_lt(l1, l3))
                vouched = true;
        }
        if (!vouched) return Cell{ii, ii};
    }
    return std::nullopt;
}

bool is_in_F(const ShiftedTableauPair& pair) {
    return !f_violation(pair).has_value();
}

} // namespace sdt
