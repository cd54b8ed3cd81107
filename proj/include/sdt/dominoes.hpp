#pragma once

#include <array>
#include <functional>
#include <optional>
#include <vector>

#include "sdt/tableaux.hpp"

namespace sdt {

// Two adjacent cells and one label. lo is the bottom cell of a vertical
// domino and the left cell of a horizontal one. The two cells sit on
// consecutive diagonals, so exactly one of them has an even diagonal index.
struct Domino {
    Cell lo;
    bool vertical = false;
    Letter label;

    Cell second() const { return vertical ? Cell{lo.col, lo.row + 1} : Cell{lo.col + 1, lo.row}; }
    std::array<Cell, 2> cells() const { return {lo, second()}; }
    Cell even_cell() const { return diagonal(lo) % 2 == 0 ? lo : second(); }
    int even_diagonal() const { return diagonal(even_cell()); }
    bool in_up_prime() const { return even_diagonal() >= 2; }
    bool covers(const Cell& c) const { return c == lo || c == second(); }
    bool operator==(const Domino& o) const {
        return lo == o.lo && vertical == o.vertical && label == o.label;
    }
    bool operator!=(const Domino& o) const { return !(*this == o); }
};

int domino_type(const Domino& d); // 1 or 2

inline Domino hdomino(int col, int row, Letter l) { return Domino{Cell{col, row}, false, l}; }
inline Domino vdomino(int col, int row, Letter l) { return Domino{Cell{col, row}, true, l}; }

// Dominoes sorted by (lo.row, lo.col); they tile cells_of(shape) exactly.
// The same container serves plain pavings (all labels X), domino tableaux
// (plain labels) and shifted domino tableaux (up' labeled X, down' lettered).
struct Paving {
    Partition shape;
    std::vector<Domino> dominoes;
    bool operator==(const Paving& o) const {
        return shape == o.shape && dominoes == o.dominoes;
    }
};
using DominoTableau = Paving;
using ShiftedDominoTableau = Paving;

// Checks the exact-tiling invariant and sorts the dominoes.
Paving make_paving(Partition shape, std::vector<Domino> dominoes);

// The domino covering a cell, if any.
const Domino* domino_at(const Paving& p, const Cell& c);

std::vector<Domino> up_prime_region(const Paving& p);
std::vector<Domino> down_prime_region(const Paving& p);

// Columns left to right, each top to bottom; a horizontal domino is read
// with its left column. X is omitted.
std::vector<Letter> column_reading(const Paving& p);
// One block per even diagonal, leftmost (largest index) first; within a
// block the dominoes cut by it go bottom to top. X is omitted.
std::vector<std::vector<Letter>> diagonal_reading_dominoes(const Paving& p);
// One count per domino; X-labeled dominoes do not count.
Evaluation evaluation(const Paving& p);

// A vertical domino sitting on D_0 whose left neighbors exist and all lie
// strictly above the diagonal disqualifies the paving.
std::optional<Domino> shpp_witness(const Paving& p);
bool is_shpp_paving(const Paving& p);

std::optional<Violation> validate_domino_tableau(const DominoTableau& t);
std::optional<Violation> validate_shdt(const ShiftedDominoTableau& t, bool p_variant);

std::vector<Domino> strip_up_prime(const Paving& t);
bool congp_equiv(const Paving& a, const Paving& b);

// The X dominoes can usually tile their cells in more than one way without
// changing a single visible letter, so those tilings all denote the same
// tableau. Re-tiles the X part row by row, horizontal first, to give every
// labeling one stored representative. Labeled dominoes are left untouched.
ShiftedDominoTableau canonicalize_shdt(const ShiftedDominoTableau& t);

void enumerate_pavings(const Partition& shape, const std::function<void(const Paving&)>& sink);
void enumerate_domino_tableaux(const Partition& shape, int max_letter,
                               const std::function<void(const DominoTableau&)>& sink);
void enumerate_shdt(const Partition& shape, int max_letter, bool p_variant,
                    const std::function<void(const ShiftedDominoTableau&)>& sink);

// All valid label assignments for one fixed paving; the building block the
// two tableau enumerators and the batch kernels share.
enum class LabelKind { domino, shdt_q, shdt_p };
void enumerate_labelings(const Paving& paving, int max_letter, LabelKind kind,
                         const std::function<void(const Paving&)>& sink);

long long count_pavings(const Partition& shape);
long long count_domino_tableaux(const Partition& shape, int max_letter);
long long count_shdt(const Partition& shape, int max_letter, bool p_variant);

} // namespace sdt
