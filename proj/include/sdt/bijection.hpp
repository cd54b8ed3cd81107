#pragma once

#include <optional>

#include "sdt/dominoes.hpp"

namespace sdt {

struct TableauPair {
    YoungTableau t1;
    YoungTableau t2;
    bool operator==(const TableauPair& o) const { return t1 == o.t1 && t2 == o.t2; }
};

struct ShiftedTableauPair {
    PaddedShiftedTableau t1;
    PaddedShiftedTableau t2;
    bool operator==(const ShiftedTableauPair& o) const { return t1 == o.t1 && t2 == o.t2; }
};

// Splits a domino tableau along its types: type-1 labels become t1, type-2
// labels become t2; a domino cut by the 2k-th diagonal lands on the k-th
// diagonal of its target, keeping the bottom-to-top order. The shapes of the
// two halves are the 2-quotient of the input shape.
TableauPair gamma(const DominoTableau& t);

// Reconstructs the unique domino tableau whose split is the given pair.
DominoTableau gamma_inverse(const TableauPair& pair);

// The same split with X treated as an opaque label: up' dominoes turn into
// the X padding of the two shifted halves.
ShiftedTableauPair shifted_split(const ShiftedDominoTableau& t);

// Inverse of shifted_split; defined exactly on pairs accepted by is_in_F.
ShiftedDominoTableau shifted_merge(const ShiftedTableauPair& pair);

// A pair is outside F when some shared diagonal position (i,i) carries
// l1 < l2 (l1 from t1, l2 from t2) and no letter left of l2 in its row of t2
// vouches for it: X always vouches, a real l3 vouches when l3 = l1 (l1
// primed) or l3 > l1 (l1 plain). Returns the first failing position.
std::optional<Cell> f_violation(const ShiftedTableauPair& pair);
bool is_in_F(const ShiftedTableauPair& pair);

} // namespace sdt
