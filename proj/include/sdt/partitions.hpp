#pragma once

#include <functional>
#include <string>
#include <vector>

#include "sdt/error.hpp"

namespace sdt {

// Weakly decreasing positive parts; the empty vector is the empty partition.
using Partition = std::vector<int>;
// Strictly decreasing positive parts.
using StrictPartition = std::vector<int>;

// French coordinates: row 0 is the bottom row, col 0 the leftmost column.
// The cell lies on the diagonal D_k with k = row - col.
struct Cell {
    int col = 0;
    int row = 0;

    bool operator==(const Cell& o) const { return col == o.col && row == o.row; }
    bool operator!=(const Cell& o) const { return !(*this == o); }
    // Row-major order, bottom row first.
    bool operator<(const Cell& o) const {
        if (row != o.row) return row < o.row;
        return col < o.col;
    }
};

inline int diagonal(const Cell& c) { return c.row - c.col; }
std::string to_string(const Cell& c); // "(col,row)"

bool is_partition(const Partition& p);
bool is_strict_partition(const StrictPartition& p);
void check_partition(const Partition& p, const std::string& what);
void check_strict_partition(const StrictPartition& p, const std::string& what);
int weight(const Partition& p);

std::string format_partition(const Partition& p); // "5,4,3,1,1", "-" when empty
Partition parse_partition(const std::string& text);

// Cells in row-major order (bottom row first, left to right).
std::vector<Cell> cells_of(const Partition& shape);
// Shifted diagram: row r occupies columns r .. r+parts[r]-1.
std::vector<Cell> shifted_cells_of(const StrictPartition& shape);
bool shape_contains(const Partition& shape, const Cell& c);

// up(shape): cells strictly above D_0 (row - col >= 1); down(shape) is the rest.
std::vector<Cell> up_region(const Partition& shape);
std::vector<Cell> down_region(const Partition& shape);

struct QuotientPair {
    Partition mu;
    Partition nu;
    bool operator==(const QuotientPair& o) const { return mu == o.mu && nu == o.nu; }
};
std::string to_string(const QuotientPair& q); // "(5,2,1,1) | (7,4,2)"

Partition two_core(const Partition& shape);
QuotientPair two_quotient(const Partition& shape);
// The unique shape with empty 2-core and 2-quotient (mu, nu).
Partition inverse_two_quotient(const Partition& mu, const Partition& nu);

bool is_pavable(const Partition& shape);
// Pavable and both 2-quotient components have last part >= their length.
bool shpp_shape_ok(const Partition& shape);
// Dominoes that carry a letter in a shifted paving of the shape; the rest are
// X-masked.  Equals the combined weight of the two unpadded quotient halves.
int lettered_domino_count(const Partition& shape);

// X-padded shapes: padded part i (1-based) is strict part i plus i-1, so a
// padded shape always satisfies last part >= length.
Partition pad_shape(const StrictPartition& strict);
StrictPartition unpad_shape(const Partition& padded); // domain_error if last part < length
bool is_padded_shape(const Partition& shape);

// All partitions of weight w, descending lex order, e.g. (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
void partitions_of(int w, const std::function<void(const Partition&)>& sink);
std::vector<Partition> partitions_of(int w);

} // namespace sdt
