#pragma once

// Worked examples shared across the test binaries. Keep construction literal:
// every fixture spells out its cells/rows so a typo here fails loudly against
// the pinned strings in the tests rather than hiding inside a helper.

#include <vector>

#include "sdt/bijection.hpp"
#include "sdt/dominoes.hpp"
#include "sdt/letters.hpp"
#include "sdt/partitions.hpp"
#include "sdt/tableaux.hpp"

namespace fx {

inline sdt::Letter L(int v) { return sdt::Letter::plain(v); }
inline sdt::Letter P(int v) { return sdt::Letter::prime(v); }
inline sdt::Letter X() { return sdt::Letter::x(); }

// Scattered labeled cells with reading word 12324316.
inline sdt::CellCollection collection_a() {
    using sdt::Cell;
    return {
        {Cell{2, 6}, L(1)}, {Cell{2, 4}, L(2)}, {Cell{1, 3}, L(3)}, {Cell{2, 2}, L(2)},
        {Cell{5, 2}, L(4)}, {Cell{1, 1}, L(3)}, {Cell{2, 1}, L(1)}, {Cell{3, 1}, L(6)},
    };
}

// Young tableau of shape (4,3,1,1), bottom row first.
inline sdt::YoungTableau young_4311() {
    return sdt::young_from_ints({{1, 1, 1, 2}, {2, 2, 3}, {4}, {5}});
}

// Shifted Young tableau of shape (7,4,3,1).
inline sdt::ShiftedYoungTableau shyt_7431() {
    return sdt::shifted_from_rows({
        {L(1), L(1), L(1), L(1), L(1), L(2), L(3)},
        {L(2), L(2), P(4), L(4)},
        {L(3), P(4), L(6)},
        {L(7)},
    });
}

// Same-shape pair agreeing on the down region, differing above the diagonal.
inline sdt::YoungTableau cong_t1() {
    return sdt::young_from_ints({{1, 2, 2, 3}, {4, 4, 7}, {5, 6, 8}});
}
inline sdt::YoungTableau cong_t2() {
    return sdt::young_from_ints({{1, 2, 2, 3}, {3, 4, 7}, {4, 5, 8}});
}

// Domino tableau of shape (8,5,5,4,4) with column reading 5313164324523.
inline sdt::DominoTableau dt_85544() {
    using sdt::hdomino;
    using sdt::vdomino;
    return sdt::make_paving({8, 5, 5, 4, 4}, {
        vdomino(0, 0, L(1)), vdomino(1, 0, L(1)), hdomino(2, 0, L(2)), hdomino(4, 0, L(2)),
        hdomino(6, 0, L(3)), hdomino(2, 1, L(3)), vdomino(0, 2, L(3)), vdomino(1, 2, L(3)),
        vdomino(2, 2, L(4)), vdomino(3, 2, L(4)), vdomino(4, 1, L(5)), hdomino(0, 4, L(5)),
        hdomino(2, 4, L(6)),
    });
}

// Domino tableau of shape (8,5,5,5,5); its two halves under the splitting
// map are pinned in the bijection tests.
inline sdt::DominoTableau dt_85555() {
    using sdt::hdomino;
    using sdt::vdomino;
    return sdt::make_paving({8, 5, 5, 5, 5}, {
        vdomino(0, 0, L(1)), vdomino(1, 0, L(1)), vdomino(2, 0, L(2)), vdomino(3, 0, L(2)),
        hdomino(4, 0, L(3)), hdomino(6, 0, L(4)), hdomino(0, 2, L(3)), hdomino(2, 2, L(3)),
        hdomino(0, 3, L(5)), hdomino(2, 3, L(5)), hdomino(0, 4, L(7)), hdomino(2, 4, L(7)),
        vdomino(4, 1, L(6)), vdomino(4, 3, L(7)),
    });
}

// Shifted domino tableau of shape (8,5,5,5,5), column reading 1142'2'2'55'23.
inline sdt::ShiftedDominoTableau shdt_85555() {
    using sdt::hdomino;
    using sdt::vdomino;
    return sdt::make_paving({8, 5, 5, 5, 5}, {
        vdomino(0, 0, L(1)), vdomino(1, 0, L(1)), hdomino(2, 0, P(2)), hdomino(4, 0, L(2)),
        hdomino(6, 0, L(3)), hdomino(2, 1, P(2)), hdomino(2, 2, P(2)), hdomino(2, 3, L(4)),
        hdomino(2, 4, X()), vdomino(4, 1, P(5)), vdomino(4, 3, L(5)), hdomino(0, 2, X()),
        hdomino(0, 3, X()), hdomino(0, 4, X()),
    });
}

// Two pavings of (8,5,5,5,5): the first is admissible, the second has a
// diagonal vertical whose only left neighbor sits entirely above D_0.
inline sdt::Paving shpp_yes() {
    using sdt::hdomino;
    using sdt::vdomino;
    auto x = X();
    return sdt::make_paving({8, 5, 5, 5, 5}, {
        vdomino(0, 0, x), vdomino(1, 0, x), hdomino(2, 0, x), hdomino(2, 1, x),
        hdomino(2, 2, x), hdomino(2, 3, x), hdomino(4, 0, x), hdomino(6, 0, x),
        vdomino(0, 2, x), vdomino(1, 2, x), vdomino(4, 1, x), vdomino(4, 3, x),
        hdomino(0, 4, x), hdomino(2, 4, x),
    });
}
inline sdt::Paving shpp_no() {
    using sdt::hdomino;
    using sdt::vdomino;
    auto x = X();
    return sdt::make_paving({8, 5, 5, 5, 5}, {
        vdomino(0, 0, x), vdomino(1, 0, x), hdomino(2, 0, x), hdomino(2, 1, x),
        vdomino(2, 2, x), vdomino(3, 2, x), hdomino(4, 0, x), hdomino(6, 0, x),
        vdomino(0, 2, x), vdomino(1, 2, x), vdomino(4, 1, x), vdomino(4, 3, x),
        hdomino(0, 4, x), hdomino(2, 4, x),
    });
}

// Labeled pavings of (8,5,5,5,5) agreeing on every domino below the second
// superdiagonal and differing only in the labels above it.
inline sdt::Paving congp_common(sdt::Letter a, sdt::Letter b, sdt::Letter c, sdt::Letter d) {
    using sdt::hdomino;
    using sdt::vdomino;
    return sdt::make_paving({8, 5, 5, 5, 5}, {
        hdomino(0, 0, L(1)), hdomino(2, 0, L(2)), hdomino(4, 0, L(3)), hdomino(6, 0, L(3)),
        hdomino(0, 1, L(2)), hdomino(2, 1, L(3)), vdomino(4, 1, L(6)), hdomino(2, 2, L(4)),
        hdomino(2, 3, L(5)), vdomino(4, 3, L(8)),
        hdomino(0, 2, a), hdomino(0, 3, b), hdomino(0, 4, c), hdomino(2, 4, d),
    });
}
inline sdt::Paving congp_t1() { return congp_common(L(4), L(5), L(3), L(7)); }
inline sdt::Paving congp_t2() { return congp_common(L(5), L(6), L(3), L(6)); }

// The two halves dt_85544 splits into.
inline sdt::YoungTableau dt_85544_half1() {
    return sdt::young_from_ints({{1, 3}, {3, 4}});
}
inline sdt::YoungTableau dt_85544_half2() {
    return sdt::young_from_ints({{1, 2, 2, 3}, {3, 4, 5}, {5, 6}});
}

// The two halves dt_85555 splits into.
inline sdt::YoungTableau dt_85555_half1() {
    return sdt::young_from_ints({{1, 2}, {5, 5}});
}
inline sdt::YoungTableau dt_85555_half2() {
    return sdt::young_from_ints({{1, 2, 3, 4}, {3, 3, 6}, {7, 7, 7}});
}

// The two halves shdt_85555 splits into.
inline sdt::PaddedShiftedTableau shdt_85555_half1() {
    return sdt::padded_from_rows({{L(1), P(2)}, {X(), L(4)}});
}
inline sdt::PaddedShiftedTableau shdt_85555_half2() {
    return sdt::padded_from_rows({
        {L(1), P(2), L(2), L(3)}, {X(), P(2), P(5)}, {X(), X(), L(5)}});
}

// Membership fixtures for the F condition. These are pre-masking grids: the
// cells above the diagonal still show real letters, which is what makes the
// third pair fail at position (2,2).
inline sdt::ShiftedTableauPair fpair_in_1() {
    return {sdt::padded_from_rows({{L(1), P(2)}}),
            sdt::padded_from_rows({
                {L(1), P(2), L(2), P(3)}, {L(2), P(2), L(4)}, {L(5), L(6), L(7)}})};
}
inline sdt::ShiftedTableauPair fpair_in_2() {
    return {sdt::padded_from_rows({{L(2), L(2), P(3), L(3)}, {L(5), L(6), L(8)}}),
            sdt::padded_from_rows({
                {P(1), L(1), L(1), L(3)}, {L(2), L(4), P(5)}, {L(5), L(6), L(7)}})};
}
inline sdt::ShiftedTableauPair fpair_out() {
    return {sdt::padded_from_rows({
                {L(1), P(3), L(3), L(4)}, {L(3), L(4), P(5), L(6)}, {L(5), L(5), L(7)}}),
            sdt::padded_from_rows({{L(1), L(1), L(2), L(8)}, {P(5), P(5), L(6)},
                                   {L(5), L(5), P(8)}, {L(6), L(7), L(8)}})};
}

} // namespace fx
