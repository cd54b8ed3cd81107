#include "sdt/tableaux.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdt {

std::vector<Letter> reading_word(const CellCollection& cells) {
    CellCollection sorted = cells;
    std::sort(sorted.begin(), sorted.end(), [](const LabeledCell& a, const LabeledCell& b) {
        if (a.cell.row != b.cell.row) return a.cell.row > b.cell.row;
        return a.cell.col < b.cell.col;
    });
    std::vector<Letter> word;
    for (const LabeledCell& lc : sorted) {
        require(!lc.letter.is_x(), "reading_word: X at " + to_string(lc.cell));
        word.push_back(lc.letter);
    }
    return word;
}

std::vector<Letter> column_word(const CellCollection& cells) {
    CellCollection sorted = cells;
    std::sort(sorted.begin(), sorted.end(), [](const LabeledCell& a, const LabeledCell& b) {
        if (a.cell.col != b.cell.col) return a.cell.col < b.cell.col;
        return a.cell.row > b.cell.row;
    });
    std::vector<Letter> word;
    for (const LabeledCell& lc : sorted)
        if (!lc.letter.is_x()) word.push_back(lc.letter);
    return word;
}

std::vector<std::vector<Letter>> diagonal_blocks(const CellCollection& cells) {
    // Leftmost diagonal = largest k; inside one diagonal, bottom to top.
    std::map<int, CellCollection, std::greater<int>> by_diag;
    for (const LabeledCell& lc : cells)
        if (!lc.letter.is_x()) by_diag[diagonal(lc.cell)].push_back(lc);
    std::vector<std::vector<Letter>> blocks;
    for (auto& [k, block] : by_diag) {
        std::sort(block.begin(), block.end(), [](const LabeledCell& a, const LabeledCell& b) {
            return a.cell.row < b.cell.row;
        });
        std::vector<Letter> letters;
        for (const LabeledCell& lc : block) letters.push_back(lc.letter);
        blocks.push_back(std::move(letters));
    }
    return blocks;
}

Evaluation evaluation(const CellCollection& cells) {
    std::vector<Letter> letters;
    for (const LabeledCell& lc : cells) letters.push_back(lc.letter);
    return evaluation_of(letters);
}

std::string compact(const std::vector<Letter>& word) {
    std::string s;
    for (const Letter& l : word) s += to_string(l);
    return s;
}

std::string compact(const std::vector<std::vector<Letter>>& blocks) {
    std::string s;
    for (size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += '/';
        s += compact(blocks[i]);
    }
    return s;
}

namespace {

Partition shape_of_rows(const std::vector<std::vector<Letter>>& rows, bool strict,
                        const std::string& what) {
    Partition shape;
    for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
    if (strict)
        require(is_strict_partition(shape), what + ": row lengths are not strictly decreasing");
    else
        require(is_partition(shape), what + ": row lengths are not weakly decreasing");
    return shape;
}

} // namespace

YoungTableau young_from_rows(std::vector<std::vector<Letter>> rows) {
    Partition shape = shape_of_rows(rows, false, "young_from_rows");
    return YoungTableau{std::move(shape), std::move(rows)};
}

ShiftedYoungTableau shifted_from_rows(std::vector<std::vector<Letter>> rows) {
    StrictPartition shape = shape_of_rows(rows, true, "shifted_from_rows");
    return ShiftedYoungTableau{std::move(shape), std::move(rows)};
}

PaddedShiftedTableau padded_from_rows(std::vector<std::vector<Letter>> rows) {
    Partition shape = shape_of_rows(rows, false, "padded_from_rows");
    return PaddedShiftedTableau{std::move(shape), std::move(rows)};
}

YoungTableau young_from_ints(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Letter>> out;
    for (const auto& row : rows) {
        std::vector<Letter> r;
        for (int v : row) r.push_back(Letter::plain(v));
        out.push_back(std::move(r));
    }
    return young_from_rows(std::move(out));
}

Letter at(const YoungTableau& t, const Cell& c) {
    internal_check(shape_contains(t.shape, c), "cell outside tableau");
    return t.rows[c.row][c.col];
}

Letter at(const ShiftedYoungTableau& t, const Cell& c) {
    internal_check(c.row >= 0 && c.row < static_cast<int>(t.shape.size()) && c.col >= c.row &&
                       c.col < c.row + t.shape[c.row],
                   "cell outside shifted tableau");
    return t.rows[c.row][c.col - c.row];
}

Letter at(const PaddedShiftedTableau& t, const Cell& c) {
    internal_check(shape_contains(t.shape, c), "cell outside tableau");
    return t.rows[c.row][c.col];
}

CellCollection to_collection(const YoungTableau& t) {
    CellCollection cells;
    for (int r = 0; r < static_cast<int>(t.shape.size()); ++r)
        for (int c = 0; c < t.shape[r]; ++c) cells.push_back({Cell{c, r}, t.rows[r][c]});
    return cells;
}

CellCollection to_collection(const ShiftedYoungTableau& t) {
    CellCollection cells;
    for (int r = 0; r < static_cast<int>(t.shape.size()); ++r)
        for (int j = 0; j < t.shape[r]; ++j) cells.push_back({Cell{r + j, r}, t.rows[r][j]});
    return cells;
}

CellCollection to_collection(const PaddedShiftedTableau& t) {
    CellCollection cells;
    for (int r = 0; r < static_cast<int>(t.shape.size()); ++r)
        for (int c = 0; c < t.shape[r]; ++c)
            if (!t.rows[r][c].is_x()) cells.push_back({Cell{c, r}, t.rows[r][c]});
    return cells;
}

namespace {

void check_grid(const Partition& shape, const std::vector<std::vector<Letter>>& rows,
                const std::string& what) {
    require(rows.size() == shape.size(), what + ": row count differs from shape");
    for (size_t r = 0; r < rows.size(); ++r)
        require(static_cast<int>(rows[r].size()) == shape[r],
                what + ": row " + std::to_string(r) + " length differs from shape");
}

// Shared Eq.-4-style scan over an arbitrary labeled cell set. Cells arrive
// with their final coordinates; X never appears here.
std::optional<Violation> scan_marked_rules(const CellCollection& cells, bool weak_columns,
                                           bool once_rules, bool p_variant) {
    std::map<Cell, Letter> grid;
    for (const LabeledCell& lc : cells) grid[lc.cell] = lc.letter;
    auto find = [&](int col, int row) -> const Letter* {
        auto it = grid.find(Cell{col, row});
        return it == grid.end() ? nullptr : &it->second;
    };
    for (const auto& [cell, letter] : grid) {
        if (const Letter* right = find(cell.col + 1, cell.row)) {
            if (!letter_le(letter, *right))
                return Violation{"row-weak", cell, Cell{cell.col + 1, cell.row}};
        }
        if (const Letter* above = find(cell.col, cell.row + 1)) {
            bool ok = weak_columns ? letter_le(letter, *above) : letter_lt(letter, *above);
            if (!ok)
                return Violation{weak_columns ? "col-weak" : "col-strict", cell,
                                 Cell{cell.col, cell.row + 1}};
        }
    }
    if (once_rules) {
        std::map<std::pair<int, int>, Cell> unprimed_in_col; // (col, value) -> first cell
        std::map<std::pair<int, int>, Cell> primed_in_row;   // (row, value) -> first cell
        for (const auto& [cell, letter] : grid) {
            if (letter.primed) {
                auto key = std::make_pair(cell.row, letter.value);
                auto [it, fresh] = primed_in_row.emplace(key, cell);
                if (!fresh) return Violation{"primed-row-repeat", it->second, cell};
            } else {
                auto key = std::make_pair(cell.col, letter.value);
                auto [it, fresh] = unprimed_in_col.emplace(key, cell);
                if (!fresh) return Violation{"unprimed-col-repeat", it->second, cell};
            }
        }
    }
    if (p_variant) {
        for (const auto& [cell, letter] : grid)
            if (diagonal(cell) == 0 && letter.primed)
                return Violation{"primed-on-d0", cell, cell};
    }
    return std::nullopt;
}

} // namespace

std::optional<Violation> validate_young(const YoungTableau& t) {
    check_grid(t.shape, t.rows, "validate_young");
    for (const auto& row : t.rows)
        for (const Letter& l : row)
            require(!l.is_x() && !l.primed, "validate_young: letters must be plain positive integers");
    return scan_marked_rules(to_collection(t), /*weak_columns=*/false, /*once_rules=*/false,
                             /*p_variant=*/false);
}

std::optional<Violation> validate_shifted(const ShiftedYoungTableau& t, bool p_variant) {
    require(is_strict_partition(t.shape), "validate_shifted: shape is not strict");
    check_grid(t.shape, t.rows, "validate_shifted");
    for (const auto& row : t.rows)
        for (const Letter& l : row) require(!l.is_x(), "validate_shifted: X is not a letter here");
    return scan_marked_rules(to_collection(t), /*weak_columns=*/true, /*once_rules=*/true,
                             p_variant);
}

std::optional<Violation> validate_padded(const PaddedShiftedTableau& t, bool p_variant) {
    check_grid(t.shape, t.rows, "validate_padded");
    require(is_padded_shape(t.shape),
            "validate_padded: shape " + format_partition(t.shape) + " has last part < length");
    for (int r = 0; r < static_cast<int>(t.shape.size()); ++r)
        for (int c = 0; c < t.shape[r]; ++c) {
            bool up = diagonal(Cell{c, r}) >= 1;
            if (up)
                require(t.rows[r][c].is_x(), "validate_padded: up cell " +
                                                 to_string(Cell{c, r}) + " must hold X");
            else
                require(!t.rows[r][c].is_x(),
                        "validate_padded: X on down cell " + to_string(Cell{c, r}));
        }
    return scan_marked_rules(to_collection(t), /*weak_columns=*/true, /*once_rules=*/true,
                             p_variant);
}

PaddedShiftedTableau pad(const ShiftedYoungTableau& t) {
    require(is_strict_partition(t.shape), "pad: shape is not strict");
    check_grid(t.shape, t.rows, "pad");
    std::vector<std::vector<Letter>> rows;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        std::vector<Letter> row(r, Letter::x());
        row.insert(row.end(), t.rows[r].begin(), t.rows[r].end());
        rows.push_back(std::move(row));
    }
    PaddedShiftedTableau out{pad_shape(t.shape), std::move(rows)};
    return out;
}

ShiftedYoungTableau unpad(const PaddedShiftedTableau& t) {
    check_grid(t.shape, t.rows, "unpad");
    StrictPartition strict = unpad_shape(t.shape); // throws when last part < length
    std::vector<std::vector<Letter>> rows;
    for (size_t r = 0; r < t.rows.size(); ++r) {
        for (size_t c = 0; c < t.rows[r].size(); ++c)
            require(t.rows[r][c].is_x() == (c < r),
                    "unpad: X must fill exactly the first " + std::to_string(r) +
                        " cells of row " + std::to_string(r));
        rows.emplace_back(t.rows[r].begin() + static_cast<long>(r), t.rows[r].end());
    }
    return ShiftedYoungTableau{std::move(strict), std::move(rows)};
}

CellCollection strip_up(const YoungTableau& t) {
    CellCollection cells;
    for (const LabeledCell& lc : to_collection(t))
        if (diagonal(lc.cell) <= 0) cells.push_back(lc);
    return cells;
}

bool cong_equiv(const YoungTableau& t1, const YoungTableau& t2) {
    return t1.shape == t2.shape && strip_up(t1) == strip_up(t2);
}

namespace {

void enumerate_young_rec(const Partition& shape, int n, std::vector<std::vector<int>>& rows,
                         size_t r, int c, const std::function<void(const YoungTableau&)>& sink) {
    if (r == shape.size()) {
        std::vector<std::vector<int>> copy = rows;
        sink(young_from_ints(copy));
        return;
    }
    if (c == shape[r]) {
        enumerate_young_rec(shape, n, rows, r + 1, 0, sink);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= n; ++v) {
        rows[r][c] = v;
        enumerate_young_rec(shape, n, rows, r, c + 1, sink);
    }
}

} // namespace

void enumerate_young(const Partition& shape, int max_letter,
                     const std::function<void(const YoungTableau&)>& sink) {
    check_partition(shape, "enumerate_young");
    require(max_letter >= 1, "enumerate_young: need at least one letter");
    std::vector<std::vector<int>> rows;
    for (int part : shape) rows.emplace_back(part, 0);
    enumerate_young_rec(shape, max_letter, rows, 0, 0, sink);
}

namespace {

struct ShiftedEnum {
    const StrictPartition& shape;
    int n;
    bool p_variant;
    const std::function<void(const ShiftedYoungTableau&)>& sink;
    std::vector<std::vector<Letter>> rows;
    std::set<std::pair<int, int>> unprimed_in_col; // (col, value)
    std::set<std::pair<int, int>> primed_in_row;   // (row, value)

    void run(size_t r, int j) {
        if (r == shape.size()) {
            sink(ShiftedYoungTableau{shape, rows});
            return;
        }
        if (j == shape[r]) {
            run(r + 1, 0);
            return;
        }
        int col = static_cast<int>(r) + j;
        int lo_rank = 1;
        if (j > 0) lo_rank = std::max(lo_rank, rows[r][j - 1].rank());
        if (r > 0) {
            int jb = col - static_cast<int>(r) + 1; // index of (col, r-1) in row r-1
            if (jb < shape[r - 1]) lo_rank = std::max(lo_rank, rows[r - 1][jb].rank());
        }
        for (int rank = lo_rank; rank <= 2 * n; ++rank) {
            bool primed = (rank % 2 == 1);
            int value = (rank + 1) / 2;
            Letter l = primed ? Letter::prime(value) : Letter::plain(value);
            if (p_variant && primed && col == static_cast<int>(r)) continue;
            if (primed) {
                auto key = std::make_pair(static_cast<int>(r), value);
                if (primed_in_row.count(key)) continue;
                primed_in_row.insert(key);
                rows[r][j] = l;
                run(r, j + 1);
                primed_in_row.erase(key);
            } else {
                auto key = std::make_pair(col, value);
                if (unprimed_in_col.count(key)) continue;
                unprimed_in_col.insert(key);
                rows[r][j] = l;
                run(r, j + 1);
                unprimed_in_col.erase(key);
            }
        }
    }
};

} // namespace

void enumerate_shifted(const StrictPartition& shape, int max_letter, bool p_variant,
                       const std::function<void(const ShiftedYoungTableau&)>& sink) {
    check_strict_partition(shape, "enumerate_shifted");
    require(max_letter >= 1, "enumerate_shifted: need at least one letter");
    std::vector<std::vector<Letter>> rows;
    for (int part : shape) rows.emplace_back(part, Letter::x());
    ShiftedEnum e{shape, max_letter, p_variant, sink, std::move(rows), {}, {}};
    e.run(0, 0);
}

long long count_young(const Partition& shape, int max_letter) {
    long long n = 0;
    enumerate_young(shape, max_letter, [&](const YoungTableau&) { ++n; });
    return n;
}

long long count_shifted(const StrictPartition& shape, int max_letter, bool p_variant) {
    long long n = 0;
    enumerate_shifted(shape, max_letter, p_variant, [&](const ShiftedYoungTableau&) { ++n; });
    return n;
}

} // namespace sdt
