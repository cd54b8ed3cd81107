#include "doctest.h"

#include <vector>

#include "fixtures.hpp"
#include "sdt/batch.hpp"

using namespace sdt;

TEST_CASE("admissible_shapes: order and membership") {
    std::vector<Partition> schur4 = admissible_shapes(IdentityKind::schur, 4);
    std::vector<Partition> expected{
        {}, {2}, {1, 1}, {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(schur4 == expected);

    // Odd bounds round down: weight-5 partitions are never pavable.
    CHECK(admissible_shapes(IdentityKind::schur, 5) == schur4);

    std::vector<Partition> q6 = admissible_shapes(IdentityKind::qschur, 6);
    CHECK(q6.front() == Partition{});
    for (const Partition& shape : q6) CHECK(shpp_shape_ok(shape));
    CHECK(admissible_shapes(IdentityKind::pschur, 6) == q6);

    // Completeness: nothing admissible is missing, and weights ascend.
    int prev_weight = 0;
    size_t at = 0;
    for (const Partition& shape : q6) {
        CHECK(weight(shape) >= prev_weight);
        prev_weight = weight(shape);
        ++at;
    }
    CHECK(at == q6.size());
    for (int w = 0; w <= 6; w += 2)
        for (const Partition& shape : partitions_of(w)) {
            bool listed = std::find(q6.begin(), q6.end(), shape) != q6.end();
            CHECK(listed == shpp_shape_ok(shape));
        }

    CHECK_THROWS_AS(admissible_shapes(IdentityKind::schur, -1), domain_error);
}

TEST_CASE("verify_all: serial and parallel agree and pass") {
    for (IdentityKind kind :
         {IdentityKind::schur, IdentityKind::qschur, IdentityKind::pschur}) {
        std::vector<IdentityReport> serial = verify_all(kind, 6, 2, false);
        std::vector<IdentityReport> fanned = verify_all(kind, 6, 2, true);
        CHECK(serial.size() == admissible_shapes(kind, 6).size());
        REQUIRE(serial.size() == fanned.size());
        for (size_t i = 0; i < serial.size(); ++i) {
            CAPTURE(format_partition(serial[i].shape));
            CHECK(serial[i].ok);
            CHECK(serial[i].shape == fanned[i].shape);
            CHECK(fanned[i].ok);
            CHECK(serial[i].lhs == fanned[i].lhs);
            CHECK(serial[i].rhs == fanned[i].rhs);
        }
    }
}

TEST_CASE("batch generating functions match the serial reference") {
    for (const Partition& shape : admissible_shapes(IdentityKind::schur, 6)) {
        CAPTURE(format_partition(shape));
        SparsePolynomial reference = domino_gf(shape, 3);
        CHECK(domino_gf_batch(shape, 3, true) == reference);
        CHECK(domino_gf_batch(shape, 3, false) == reference);
    }
    for (const Partition& shape : admissible_shapes(IdentityKind::qschur, 8)) {
        CAPTURE(format_partition(shape));
        for (bool p_variant : {false, true}) {
            SparsePolynomial reference = shdt_gf(shape, 2, p_variant);
            CHECK(shdt_gf_batch(shape, 2, p_variant, true) == reference);
            CHECK(shdt_gf_batch(shape, 2, p_variant, false) == reference);
        }
    }
    CHECK(domino_gf_batch({}, 3) == poly_const(3, 1));
    CHECK(shdt_gf_batch({}, 3, false) == poly_const(3, 1));
    CHECK_THROWS_AS(domino_gf_batch({2, 1}, 2), domain_error);
    CHECK_THROWS_AS(shdt_gf_batch({2, 1}, 2, false), domain_error);
}
