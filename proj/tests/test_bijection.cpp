#include "doctest.h"

#include <vector>

#include "fixtures.hpp"
#include "sdt/bijection.hpp"

using namespace sdt;

namespace {

std::vector<Partition> pavable_shapes_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int w = 0; w <= max_weight; w += 2)
        for (const Partition& p : partitions_of(w))
            if (is_pavable(p)) out.push_back(p);
    return out;
}

} // namespace

TEST_CASE("gamma splits the pinned domino tableaux") {
    auto g1 = gamma(fx::dt_85544());
    CHECK(g1.t1 == fx::dt_85544_half1());
    CHECK(g1.t2 == fx::dt_85544_half2());
    CHECK(QuotientPair{g1.t1.shape, g1.t2.shape} == two_quotient({8, 5, 5, 4, 4}));
    CHECK(eval_sum(evaluation(to_collection(g1.t1)), evaluation(to_collection(g1.t2))) ==
          evaluation(fx::dt_85544()));

    auto g2 = gamma(fx::dt_85555());
    CHECK(g2.t1 == fx::dt_85555_half1());
    CHECK(g2.t2 == fx::dt_85555_half2());
    CHECK(g2.t1.shape == Partition{2, 2});
    CHECK(g2.t2.shape == Partition{4, 3, 3});
}

TEST_CASE("gamma_inverse rebuilds the pinned tableaux") {
    CHECK(gamma_inverse({fx::dt_85544_half1(), fx::dt_85544_half2()}) == fx::dt_85544());
    CHECK(gamma_inverse({fx::dt_85555_half1(), fx::dt_85555_half2()}) == fx::dt_85555());
}

TEST_CASE("gamma edge cases and domain errors") {
    auto empty = make_paving({}, {});
    auto g = gamma(empty);
    CHECK(g.t1.shape.empty());
    CHECK(g.t2.shape.empty());
    CHECK(gamma_inverse(g) == empty);

    auto single = gamma_inverse({young_from_ints({{1}}), young_from_ints({})});
    CHECK(single == make_paving({1, 1}, {vdomino(0, 0, fx::L(1))}));
    CHECK(domino_type(single.dominoes[0]) == 1);
    auto single2 = gamma_inverse({young_from_ints({}), young_from_ints({{1}})});
    CHECK(single2 == make_paving({2}, {hdomino(0, 0, fx::L(1))}));

    auto bad = make_paving({2, 2}, {hdomino(0, 0, fx::L(2)), hdomino(0, 1, fx::L(1))});
    CHECK_THROWS_AS(gamma(bad), domain_error);
    auto bad_pair = TableauPair{young_from_ints({{2, 1}}), young_from_ints({})};
    CHECK_THROWS_AS(gamma_inverse(bad_pair), domain_error);
}

TEST_CASE("shifted_split and shifted_merge on the pinned tableau") {
    auto s = shifted_split(fx::shdt_85555());
    CHECK(s.t1 == fx::shdt_85555_half1());
    CHECK(s.t2 == fx::shdt_85555_half2());
    CHECK(!validate_padded(s.t1, false));
    CHECK(!validate_padded(s.t2, false));
    CHECK(is_in_F(s));
    CHECK(eval_sum(evaluation(to_collection(s.t1)), evaluation(to_collection(s.t2))) ==
          evaluation(fx::shdt_85555()));
    CHECK(shifted_merge(s) == fx::shdt_85555());
}

TEST_CASE("f membership: pinned pairs") {
    CHECK(is_in_F(fx::fpair_in_1()));
    CHECK(is_in_F(fx::fpair_in_2()));
    auto out = fx::fpair_out();
    CHECK(!is_in_F(out));
    auto w = f_violation(out);
    REQUIRE(w.has_value());
    CHECK(*w == Cell{2, 2});

    // Repairing the one blocking row puts the pair back into F.
    auto fixed = out;
    fixed.t2.rows[2][0] = fx::L(8);
    CHECK(is_in_F(fixed));
}

TEST_CASE("f membership: voucher branches") {
    auto t1_plain = padded_from_rows({{fx::L(1), fx::P(2)}, {fx::X(), fx::L(2)}});
    // X to the left always vouches.
    auto t2_x = padded_from_rows({{fx::L(1), fx::L(2)}, {fx::X(), fx::L(3)}});
    CHECK(is_in_F({t1_plain, t2_x}));
    // A plain l1 needs a strictly larger letter.
    auto t2_small = padded_from_rows({{fx::L(1), fx::L(2)}, {fx::L(2), fx::L(3)}});
    CHECK(f_violation({t1_plain, t2_small}) == Cell{1, 1});
    auto t2_big = padded_from_rows({{fx::L(1), fx::L(2)}, {fx::L(3), fx::L(3)}});
    CHECK(is_in_F({t1_plain, t2_big}));

    // A primed l1 needs that very letter.
    auto t1_primed = padded_from_rows({{fx::L(1), fx::P(2)}, {fx::X(), fx::P(2)}});
    CHECK(f_violation({t1_primed, t2_small}) == Cell{1, 1});
    CHECK(f_violation({t1_primed, t2_big}) == Cell{1, 1});
    auto t2_match = padded_from_rows({{fx::L(1), fx::L(2)}, {fx::P(2), fx::L(3)}});
    CHECK(is_in_F({t1_primed, t2_match}));

    // Short first shapes are vacuously in F.
    CHECK(is_in_F({padded_from_rows({{fx::L(9)}}), t2_small}));
}

TEST_CASE("shifted_merge rejects pairs outside F") {
    // Valid padded pair whose (0,0) letters collide with nothing to vouch.
    auto t1 = padded_from_rows({{fx::L(1), fx::P(2)}, {fx::X(), fx::L(2)}});
    auto t2 = padded_from_rows({{fx::L(2), fx::P(3)}, {fx::X(), fx::L(3)}});
    ShiftedTableauPair pair{t1, t2};
    CHECK(f_violation(pair) == Cell{0, 0});
    CHECK_THROWS_AS(shifted_merge(pair), domain_error);
    CHECK_THROWS_AS(shifted_merge(fx::fpair_out()), domain_error);
}

TEST_CASE("roundtrip and counting laws on all small shapes") {
    for (const Partition& shape : pavable_shapes_up_to(8)) {
        QuotientPair q = two_quotient(shape);
        for (int n = 1; n <= 2; ++n) {
            long long seen = 0;
            enumerate_domino_tableaux(shape, n, [&](const DominoTableau& t) {
                ++seen;
                auto pair = gamma(t);
                CHECK(pair.t1.shape == q.mu);
                CHECK(pair.t2.shape == q.nu);
                CHECK(eval_sum(evaluation(to_collection(pair.t1)),
                                evaluation(to_collection(pair.t2))) == evaluation(t));
                CHECK(gamma_inverse(pair) == t);
            });
            CHECK(seen == count_young(q.mu, n) * count_young(q.nu, n));
        }
    }
}

TEST_CASE("shifted roundtrip and Theorem-style counting on small shapes") {
    for (const Partition& shape : pavable_shapes_up_to(8)) {
        if (!shpp_shape_ok(shape)) {
            CHECK(count_shdt(shape, 2, false) == 0);
            continue;
        }
        QuotientPair q = two_quotient(shape);
        for (int n = 1; n <= 2; ++n) {
            long long seen = 0;
            enumerate_shdt(shape, n, false, [&](const ShiftedDominoTableau& t) {
                ++seen;
                auto pair = shifted_split(t);
                CHECK(pair.t1.shape == q.mu);
                CHECK(pair.t2.shape == q.nu);
                CHECK(is_in_F(pair));
                CHECK(eval_sum(evaluation(to_collection(pair.t1)),
                                evaluation(to_collection(pair.t2))) == evaluation(t));
                CHECK(shifted_merge(pair) == t);
            });

            // Count the F side directly: padded pairs of the right shapes.
            std::vector<PaddedShiftedTableau> firsts, seconds;
            if (q.mu.empty())
                firsts.push_back(padded_from_rows({}));
            else
                enumerate_shifted(unpad_shape(q.mu), n, false,
                                  [&](const ShiftedYoungTableau& t) { firsts.push_back(pad(t)); });
            if (q.nu.empty())
                seconds.push_back(padded_from_rows({}));
            else
                enumerate_shifted(unpad_shape(q.nu), n, false,
                                  [&](const ShiftedYoungTableau& t) { seconds.push_back(pad(t)); });
            long long in_f = 0;
            for (const auto& a : firsts)
                for (const auto& b : seconds)
                    if (is_in_F({a, b})) ++in_f;
            CHECK(seen == in_f);
        }
    }
}

TEST_CASE("gamma_inverse covers pairs that were not produced by gamma") {
    // Shapes ((1),(2)) correspond to lambda (4,2).
    std::vector<YoungTableau> small1, small2;
    enumerate_young({1}, 2, [&](const YoungTableau& t) { small1.push_back(t); });
    enumerate_young({2}, 2, [&](const YoungTableau& t) { small2.push_back(t); });
    for (const auto& a : small1)
        for (const auto& b : small2) {
            TableauPair pair{a, b};
            auto t = gamma_inverse(pair);
            CHECK(t.shape == Partition{4, 2});
            CHECK(gamma(t) == pair);
        }
}
