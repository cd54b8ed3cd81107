#pragma once

#include <string>
#include <vector>

#include "sdt/bijection.hpp"
#include "sdt/symfunc.hpp"

namespace sdt {

// Grid text: one row per line, top row first, cells space-separated.
// Shifted rows are indented with one "." token per skipped column; padded
// grids print their X cells, plain grids neither.
std::string to_text(const YoungTableau& t);
std::string to_text(const ShiftedYoungTableau& t);
std::string to_text(const PaddedShiftedTableau& t);

// JSON, compact with a trailing newline. Grids: {"shape":[...],"rows":[[...]]}
// with bottom row first and letters as strings; a shifted tableau is padded
// on the way out. Pavings: {"shape":[...],"dominoes":[{"cells":[[col,row],
// [col,row]],"label":"2'"},...]} with the bottom/left cell first. Pairs wrap
// two grids as {"t1":...,"t2":...}.
std::string to_json(const YoungTableau& t);
std::string to_json(const ShiftedYoungTableau& t);
std::string to_json(const PaddedShiftedTableau& t);
std::string to_json(const Paving& p);
std::string to_json(const TableauPair& pair);
std::string to_json(const ShiftedTableauPair& pair);

// {"n":3,"terms":[{"e":[2,0,0],"c":1},...]}, terms lexicographically largest
// first (the format_polynomial order).
std::string to_json(const SparsePolynomial& p);

// What an input turned out to hold. Text containing "." parses as shifted
// and text containing X as padded; JSON with a "dominoes" key is a paving,
// other JSON grids split the same way on their letters. A grid with nothing
// above the diagonal reads as young — callers wanting a padded view convert.
enum class TableauKind { young, shifted, padded, paving };
std::string to_string(TableauKind kind);

struct AnyTableau {
    TableauKind kind = TableauKind::young;
    YoungTableau young;
    ShiftedYoungTableau shifted;
    PaddedShiftedTableau padded;
    Paving paving;
};

// Sniffs text vs JSON on the first non-space byte.
AnyTableau parse_tableau(const std::string& input);

// Forced-type parsers for commands that know what they expect.
Paving parse_paving(const std::string& input);
PaddedShiftedTableau parse_padded(const std::string& input);
YoungTableau parse_young(const std::string& input);
TableauPair parse_pair(const std::string& input);
ShiftedTableauPair parse_shifted_pair(const std::string& input);

// CSV rows "shape","evaluation",count — one line per evaluation of weight
// |shape|/2 in the partitions_of order, zero counts included, header first.
std::string kostka_csv(const Partition& shape, bool shifted, bool p_variant);

} // namespace sdt
