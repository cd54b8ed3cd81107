#pragma once

#include <string>
#include <vector>

#include "sdt/error.hpp"

namespace sdt {

// One letter of the marked alphabet 1' < 1 < 2' < 2 < ...  The padding mark X
// is encoded as value 0; it takes part in no order comparison.
struct Letter {
    int value = 0; // 0 encodes X, otherwise >= 1
    bool primed = false;

    static Letter x() { return Letter{}; }
    static Letter plain(int v) {
        internal_check(v >= 1, "letter value must be positive");
        return Letter{v, false};
    }
    static Letter prime(int v) {
        internal_check(v >= 1, "letter value must be positive");
        return Letter{v, true};
    }

    bool is_x() const { return value == 0; }

    // Position in the alphabet: 1' -> 1, 1 -> 2, 2' -> 3, 2 -> 4, ...
    int rank() const {
        internal_check(!is_x(), "X has no place in the letter order");
        return 2 * value - (primed ? 1 : 0);
    }

    bool operator==(const Letter& o) const {
        return value == o.value && primed == o.primed;
    }
    bool operator!=(const Letter& o) const { return !(*this == o); }
};

inline bool letter_lt(const Letter& a, const Letter& b) { return a.rank() < b.rank(); }
inline bool letter_le(const Letter& a, const Letter& b) { return a.rank() <= b.rank(); }

std::string to_string(const Letter& l);
Letter parse_letter(const std::string& token);

// Occurrence counts (a_1, a_2, ...) where i and i' both count toward a_i and
// X counts toward nothing. Trailing zeros are kept stripped.
using Evaluation = std::vector<int>;

Evaluation evaluation_of(const std::vector<Letter>& letters);
Evaluation eval_stripped(Evaluation e);
Evaluation eval_sum(const Evaluation& a, const Evaluation& b);
std::string to_string(const Evaluation& e); // "(2,2,2,1,0,1)", "()" when empty

} // namespace sdt
