#include "sdt/dominoes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace sdt {

int domino_type(const Domino& d) {
    // Vertical: decided by the bottom cell; horizontal: by the right cell.
    const Cell decisive = d.vertical ? d.lo : d.second();
    return diagonal(decisive) % 2 == 0 ? 1 : 2;
}

Paving make_paving(Partition shape, std::vector<Domino> dominoes) {
    check_partition(shape, "make_paving");
    std::set<Cell> seen;
    for (const Domino& d : dominoes) {
        internal_check(diagonal(d.lo) % 2 == 0 || diagonal(d.second()) % 2 == 0,
                       "domino without an even-diagonal cell");
        for (const Cell& c : d.cells()) {
            require(shape_contains(shape, c),
                    "make_paving: cell " + to_string(c) + " outside " + format_partition(shape));
            require(seen.insert(c).second, "make_paving: cell " + to_string(c) + " covered twice");
        }
    }
    require(static_cast<int>(seen.size()) == weight(shape),
            "make_paving: dominoes do not tile " + format_partition(shape));
    std::sort(dominoes.begin(), dominoes.end(), [](const Domino& a, const Domino& b) {
        if (a.lo.row != b.lo.row) return a.lo.row < b.lo.row;
        return a.lo.col < b.lo.col;
    });
    return Paving{std::move(shape), std::move(dominoes)};
}

const Domino* domino_at(const Paving& p, const Cell& c) {
    for (const Domino& d : p.dominoes)
        if (d.covers(c)) return &d;
    return nullptr;
}

std::vector<Domino> up_prime_region(const Paving& p) {
    std::vector<Domino> out;
    for (const Domino& d : p.dominoes)
        if (d.in_up_prime()) out.push_back(d);
    return out;
}

std::vector<Domino> down_prime_region(const Paving& p) {
    std::vector<Domino> out;
    for (const Domino& d : p.dominoes)
        if (!d.in_up_prime()) out.push_back(d);
    return out;
}

std::vector<Letter> column_reading(const Paving& p) {
    // A domino is read in the column of its lo cell: verticals live there,
    // horizontals are seen first there, and a horizontal's right column was
    // already handled one column earlier.
    std::vector<Letter> out;
    int max_col = p.shape.empty() ? 0 : p.shape[0];
    for (int col = 0; col < max_col; ++col) {
        std::vector<const Domino*> here;
        for (const Domino& d : p.dominoes)
            if (d.lo.col == col) here.push_back(&d);
        std::sort(here.begin(), here.end(), [](const Domino* a, const Domino* b) {
            int ta = a->vertical ? a->lo.row + 1 : a->lo.row;
            int tb = b->vertical ? b->lo.row + 1 : b->lo.row;
            return ta > tb;
        });
        for (const Domino* d : here)
            if (!d->label.is_x()) out.push_back(d->label);
    }
    return out;
}

std::vector<std::vector<Letter>> diagonal_reading_dominoes(const Paving& p) {
    std::map<int, std::vector<const Domino*>, std::greater<int>> cut;
    for (const Domino& d : p.dominoes)
        if (!d.label.is_x()) cut[d.even_diagonal()].push_back(&d);
    std::vector<std::vector<Letter>> blocks;
    for (auto& [k, ds] : cut) {
        std::sort(ds.begin(), ds.end(), [](const Domino* a, const Domino* b) {
            return a->even_cell().row < b->even_cell().row;
        });
        std::vector<Letter> letters;
        for (const Domino* d : ds) letters.push_back(d->label);
        blocks.push_back(std::move(letters));
    }
    return blocks;
}

Evaluation evaluation(const Paving& p) {
    std::vector<Letter> labels;
    for (const Domino& d : p.dominoes) labels.push_back(d.label);
    return evaluation_of(labels);
}

std::optional<Domino> shpp_witness(const Paving& p) {
    for (const Domino& d : p.dominoes) {
        if (!d.vertical || diagonal(d.lo) != 0) continue;
        std::vector<const Domino*> left;
        for (const Cell& c : {Cell{d.lo.col - 1, d.lo.row}, Cell{d.lo.col - 1, d.lo.row + 1}})
            if (const Domino* n = domino_at(p, c))
                if (std::find(left.begin(), left.end(), n) == left.end()) left.push_back(n);
        if (left.empty()) continue;
        bool all_above = std::all_of(left.begin(), left.end(), [](const Domino* n) {
            return diagonal(n->lo) >= 1 && diagonal(n->second()) >= 1;
        });
        if (all_above) return d;
    }
    return std::nullopt;
}

bool is_shpp_paving(const Paving& p) {
    return shpp_shape_ok(p.shape) && !shpp_witness(p);
}

namespace {

// Cellwise monotonicity scan shared by both tableau validators. Compares
// adjacent cells that belong to distinct dominoes; X labels are skipped.
std::optional<Violation> scan_domino_rules(const Paving& t, bool strict_columns) {
    for (const Cell& a : cells_of(t.shape)) {
        const Domino* da = domino_at(t, a);
        if (da->label.is_x()) continue;
        for (bool row_dir : {true, false}) {
            Cell b = row_dir ? Cell{a.col + 1, a.row} : Cell{a.col, a.row + 1};
            if (!shape_contains(t.shape, b)) continue;
            const Domino* db = domino_at(t, b);
            if (db == da || db->label.is_x()) continue;
            if (row_dir) {
                if (!letter_le(da->label, db->label)) return Violation{"row-weak", a, b};
            } else if (strict_columns) {
                if (!letter_lt(da->label, db->label)) return Violation{"col-strict", a, b};
            } else {
                if (!letter_le(da->label, db->label)) return Violation{"col-weak", a, b};
            }
        }
    }
    return std::nullopt;
}

std::vector<int> distinct_cols(const Domino& d) {
    return d.vertical ? std::vector<int>{d.lo.col} : std::vector<int>{d.lo.col, d.lo.col + 1};
}
std::vector<int> distinct_rows(const Domino& d) {
    return d.vertical ? std::vector<int>{d.lo.row, d.lo.row + 1} : std::vector<int>{d.lo.row};
}

} // namespace

std::optional<Violation> validate_domino_tableau(const DominoTableau& t) {
    for (const Domino& d : t.dominoes)
        require(!d.label.is_x() && !d.label.primed,
                "validate_domino_tableau: labels must be plain positive integers");
    return scan_domino_rules(t, /*strict_columns=*/true);
}

std::optional<Violation> validate_shdt(const ShiftedDominoTableau& t, bool p_variant) {
    require(is_shpp_paving(t), "validate_shdt: paving is not ShPP-admissible");
    for (const Domino& d : t.dominoes) {
        if (d.in_up_prime())
            require(d.label.is_x(),
                    "validate_shdt: up' domino at " + to_string(d.lo) + " must hold X");
        else
            require(!d.label.is_x(), "validate_shdt: X on down' domino at " + to_string(d.lo));
    }
    if (auto v = scan_domino_rules(t, /*strict_columns=*/false)) return v;
    // One appearance per column for plain letters, per row for primed ones;
    // a domino claims each column/row it touches once.
    std::map<std::pair<int, int>, Cell> plain_in_col, primed_in_row;
    for (const Domino& d : t.dominoes) {
        if (d.label.is_x()) continue;
        if (d.label.primed) {
            for (int row : distinct_rows(d)) {
                Cell mine = d.lo.row == row ? d.lo : d.second();
                auto [it, fresh] = primed_in_row.emplace(std::make_pair(row, d.label.value), mine);
                if (!fresh) return Violation{"primed-row-repeat", it->second, mine};
            }
        } else {
            for (int col : distinct_cols(d)) {
                Cell mine = d.lo.col == col ? d.lo : d.second();
                auto [it, fresh] = plain_in_col.emplace(std::make_pair(col, d.label.value), mine);
                if (!fresh) return Violation{"unprimed-col-repeat", it->second, mine};
            }
        }
    }
    if (p_variant) {
        for (const Domino& d : t.dominoes)
            if (!d.label.is_x() && d.label.primed && d.even_diagonal() == 0)
                return Violation{"primed-on-d0", d.even_cell(), d.even_cell()};
    }
    return std::nullopt;
}

std::vector<Domino> strip_up_prime(const Paving& t) {
    return down_prime_region(t);
}

bool congp_equiv(const Paving& a, const Paving& b) {
    return a.shape == b.shape && strip_up_prime(a) == strip_up_prime(b);
}

namespace {

// First tiling of a cell set in choice order: lowest free cell (row-major),
// horizontal before vertical, backtracking on dead ends.
bool tile_region_rec(const std::set<Cell>& region, std::set<Cell>& covered,
                     std::vector<Domino>& placed) {
    Cell lo{-1, -1};
    bool open = false;
    for (const Cell& c : region)
        if (!covered.count(c)) {
            lo = c;
            open = true;
            break;
        }
    if (!open) return true;
    for (bool vertical : {false, true}) {
        Domino d{lo, vertical, Letter::x()};
        Cell s = d.second();
        if (!region.count(s) || covered.count(s)) continue;
        covered.insert(lo);
        covered.insert(s);
        placed.push_back(d);
        if (tile_region_rec(region, covered, placed)) return true;
        placed.pop_back();
        covered.erase(lo);
        covered.erase(s);
    }
    return false;
}

} // namespace

ShiftedDominoTableau canonicalize_shdt(const ShiftedDominoTableau& t) {
    std::vector<Domino> kept;
    std::set<Cell> region;
    for (const Domino& d : t.dominoes) {
        if (d.in_up_prime())
            for (const Cell& c : d.cells()) region.insert(c);
        else
            kept.push_back(d);
    }
    std::set<Cell> covered;
    std::vector<Domino> xs;
    internal_check(tile_region_rec(region, covered, xs),
                   "canonicalize_shdt: X cells lost their tiling");
    kept.insert(kept.end(), xs.begin(), xs.end());
    return make_paving(t.shape, kept);
}

namespace {

void enumerate_pavings_rec(const Partition& shape, std::set<Cell>& covered,
                           std::vector<Domino>& placed, int total_cells,
                           const std::function<void(const Paving&)>& sink) {
    if (static_cast<int>(covered.size()) == total_cells) {
        sink(Paving{shape, placed});
        return;
    }
    Cell lo{-1, -1};
    for (const Cell& c : cells_of(shape))
        if (!covered.count(c)) {
            lo = c;
            break;
        }
    auto try_place = [&](bool vertical) {
        Domino d{lo, vertical, Letter::x()};
        Cell s = d.second();
        if (!shape_contains(shape, s) || covered.count(s)) return;
        covered.insert(lo);
        covered.insert(s);
        placed.push_back(d);
        enumerate_pavings_rec(shape, covered, placed, total_cells, sink);
        placed.pop_back();
        covered.erase(lo);
        covered.erase(s);
    };
    try_place(false); // horizontal first, then vertical
    try_place(true);
}

} // namespace

void enumerate_pavings(const Partition& shape, const std::function<void(const Paving&)>& sink) {
    check_partition(shape, "enumerate_pavings");
    require(is_pavable(shape), "enumerate_pavings: " + format_partition(shape) +
                                   " has a non-empty 2-core");
    std::set<Cell> covered;
    std::vector<Domino> placed;
    enumerate_pavings_rec(shape, covered, placed, weight(shape), sink);
}

namespace {

struct EdgeConstraint {
    size_t earlier;   // index of the already-labeled domino
    bool row_dir;     // true: same row, false: same column
    bool earlier_lhs; // true when the earlier domino holds the smaller side
};

struct LabelingEnum {
    const Paving& paving;
    int n;
    LabelKind kind;
    const std::function<void(const Paving&)>& sink;
    std::vector<std::vector<EdgeConstraint>> edges; // per domino, against earlier ones
    std::vector<Letter> labels;
    std::set<std::pair<int, int>> plain_in_col, primed_in_row;

    LabelingEnum(const Paving& p, int n_, LabelKind k,
                 const std::function<void(const Paving&)>& s)
        : paving(p), n(n_), kind(k), sink(s) {
        edges.resize(p.dominoes.size());
        for (size_t j = 0; j < p.dominoes.size(); ++j)
            for (size_t i = 0; i < j; ++i)
                for (const Cell& a : p.dominoes[i].cells())
                    for (const Cell& b : p.dominoes[j].cells()) {
                        if (a.row == b.row && b.col == a.col + 1)
                            edges[j].push_back({i, true, true});
                        else if (a.row == b.row && a.col == b.col + 1)
                            edges[j].push_back({i, true, false});
                        else if (a.col == b.col && b.row == a.row + 1)
                            edges[j].push_back({i, false, true});
                        else if (a.col == b.col && a.row == b.row + 1)
                            edges[j].push_back({i, false, false});
                    }
        labels.assign(p.dominoes.size(), Letter::x());
    }

    bool edge_ok(size_t j, const Letter& mine) const {
        bool strict_cols = kind == LabelKind::domino;
        for (const EdgeConstraint& e : edges[j]) {
            const Letter& other = labels[e.earlier];
            if (other.is_x()) continue;
            const Letter& lhs = e.earlier_lhs ? other : mine;
            const Letter& rhs = e.earlier_lhs ? mine : other;
            bool ok = (!e.row_dir && strict_cols) ? letter_lt(lhs, rhs) : letter_le(lhs, rhs);
            if (!ok) return false;
        }
        return true;
    }

    void run(size_t j) {
        if (j == paving.dominoes.size()) {
            Paving out = paving;
            for (size_t i = 0; i < out.dominoes.size(); ++i) out.dominoes[i].label = labels[i];
            sink(out);
            return;
        }
        const Domino& d = paving.dominoes[j];
        if (kind != LabelKind::domino && d.in_up_prime()) {
            labels[j] = Letter::x();
            run(j + 1);
            return;
        }
        if (kind == LabelKind::domino) {
            for (int v = 1; v <= n; ++v) {
                Letter l = Letter::plain(v);
                if (!edge_ok(j, l)) continue;
                labels[j] = l;
                run(j + 1);
            }
            labels[j] = Letter::x();
            return;
        }
        for (int rank = 1; rank <= 2 * n; ++rank) {
            bool primed = rank % 2 == 1;
            int value = (rank + 1) / 2;
            if (primed && kind == LabelKind::shdt_p && d.even_diagonal() == 0) continue;
            Letter l = primed ? Letter::prime(value) : Letter::plain(value);
            if (!edge_ok(j, l)) continue;
            std::vector<std::pair<int, int>> keys;
            bool free = true;
            if (primed)
                for (int row : distinct_rows(d)) keys.emplace_back(row, value);
            else
                for (int col : distinct_cols(d)) keys.emplace_back(col, value);
            auto& used = primed ? primed_in_row : plain_in_col;
            for (const auto& k : keys)
                if (used.count(k)) free = false;
            if (!free) continue;
            for (const auto& k : keys) used.insert(k);
            labels[j] = l;
            run(j + 1);
            for (const auto& k : keys) used.erase(k);
        }
        labels[j] = Letter::x();
    }
};

} // namespace

void enumerate_labelings(const Paving& paving, int max_letter, LabelKind kind,
                         const std::function<void(const Paving&)>& sink) {
    require(max_letter >= 1, "enumerate_labelings: need at least one letter");
    LabelingEnum e{paving, max_letter, kind, sink};
    e.run(0);
}

void enumerate_domino_tableaux(const Partition& shape, int max_letter,
                               const std::function<void(const DominoTableau&)>& sink) {
    enumerate_pavings(shape, [&](const Paving& p) {
        enumerate_labelings(p, max_letter, LabelKind::domino, sink);
    });
}

void enumerate_shdt(const Partition& shape, int max_letter, bool p_variant,
                    const std::function<void(const ShiftedDominoTableau&)>& sink) {
    LabelKind kind = p_variant ? LabelKind::shdt_p : LabelKind::shdt_q;
    enumerate_pavings(shape, [&](const Paving& p) {
        if (!is_shpp_paving(p)) return;
        // Pavings agreeing outside the X part denote the same tableaux; only
        // the representative tiling gets labeled.
        if (canonicalize_shdt(p).dominoes != p.dominoes) return;
        enumerate_labelings(p, max_letter, kind, sink);
    });
}

long long count_pavings(const Partition& shape) {
    long long n = 0;
    enumerate_pavings(shape, [&](const Paving&) { ++n; });
    return n;
}

long long count_domino_tableaux(const Partition& shape, int max_letter) {
    long long n = 0;
    enumerate_domino_tableaux(shape, max_letter, [&](const DominoTableau&) { ++n; });
    return n;
}

long long count_shdt(const Partition& shape, int max_letter, bool p_variant) {
    long long n = 0;
    enumerate_shdt(shape, max_letter, p_variant, [&](const ShiftedDominoTableau&) { ++n; });
    return n;
}

} // namespace sdt
