#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sdt/letters.hpp"
#include "sdt/partitions.hpp"

namespace sdt {

struct LabeledCell {
    Cell cell;
    Letter letter;
    bool operator==(const LabeledCell& o) const {
        return cell == o.cell && letter == o.letter;
    }
};
using CellCollection = std::vector<LabeledCell>;

// Rows top to bottom, each left to right. The collection must carry no X.
std::vector<Letter> reading_word(const CellCollection& cells);
// Columns left to right, each top to bottom. X is skipped.
std::vector<Letter> column_word(const CellCollection& cells);
// One block per occupied diagonal, leftmost (largest k) diagonal first; within
// a block letters go bottom to top. X is skipped and empty blocks are dropped.
std::vector<std::vector<Letter>> diagonal_blocks(const CellCollection& cells);
Evaluation evaluation(const CellCollection& cells);

std::string compact(const std::vector<Letter>& word);                   // "12324316"
std::string compact(const std::vector<std::vector<Letter>>& blocks);    // "1/32/32/1/6/4"

// Rows are stored bottom row first; rows[r].size() == shape[r].
struct YoungTableau {
    Partition shape;
    std::vector<std::vector<Letter>> rows;
    bool operator==(const YoungTableau& o) const {
        return shape == o.shape && rows == o.rows;
    }
};

// Shifted shape: row r occupies columns r .. r+shape[r]-1; rows[r][0] is the
// cell in column r (the D_0 cell of that row).
struct ShiftedYoungTableau {
    StrictPartition shape;
    std::vector<std::vector<Letter>> rows;
    bool operator==(const ShiftedYoungTableau& o) const {
        return shape == o.shape && rows == o.rows;
    }
};

// Ordinary-shape grid whose up-region cells hold X; requires last part >= length
// when well-formed, but the container itself accepts any partition-shaped grid
// so that pre-masking fillings can be carried too.
struct PaddedShiftedTableau {
    Partition shape;
    std::vector<std::vector<Letter>> rows;
    bool operator==(const PaddedShiftedTableau& o) const {
        return shape == o.shape && rows == o.rows;
    }
};

YoungTableau young_from_rows(std::vector<std::vector<Letter>> rows);
ShiftedYoungTableau shifted_from_rows(std::vector<std::vector<Letter>> rows);
PaddedShiftedTableau padded_from_rows(std::vector<std::vector<Letter>> rows);
YoungTableau young_from_ints(const std::vector<std::vector<int>>& rows);

Letter at(const YoungTableau& t, const Cell& c);
Letter at(const ShiftedYoungTableau& t, const Cell& c);
Letter at(const PaddedShiftedTableau& t, const Cell& c);

CellCollection to_collection(const YoungTableau& t);
CellCollection to_collection(const ShiftedYoungTableau& t);
// Padded tableaux enter collections without their X cells.
CellCollection to_collection(const PaddedShiftedTableau& t);

// First broken rule, or nullopt when the tableau is valid. Domain errors
// (wrong alphabet for the container, X off the up region, row/shape mismatch)
// throw instead of reporting a violation.
struct Violation {
    std::string rule;
    Cell a;
    Cell b;
};

std::optional<Violation> validate_young(const YoungTableau& t);
std::optional<Violation> validate_shifted(const ShiftedYoungTableau& t, bool p_variant);
std::optional<Violation> validate_padded(const PaddedShiftedTableau& t, bool p_variant);
inline std::optional<Violation> validate_shifted(const PaddedShiftedTableau& t, bool p_variant) {
    return validate_padded(t, p_variant);
}

PaddedShiftedTableau pad(const ShiftedYoungTableau& t);
ShiftedYoungTableau unpad(const PaddedShiftedTableau& t);

// Down-region cells only: the part compared by the coarse equivalence.
CellCollection strip_up(const YoungTableau& t);
bool cong_equiv(const YoungTableau& t1, const YoungTableau& t2);

void enumerate_young(const Partition& shape, int max_letter,
                     const std::function<void(const YoungTableau&)>& sink);
void enumerate_shifted(const StrictPartition& shape, int max_letter, bool p_variant,
                       const std::function<void(const ShiftedYoungTableau&)>& sink);
long long count_young(const Partition& shape, int max_letter);
long long count_shifted(const StrictPartition& shape, int max_letter, bool p_variant);

} // namespace sdt
