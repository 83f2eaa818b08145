#include "doctest.h"
#include "homcat/families.hpp"

using namespace homcat;

TEST_SUITE("families") {

TEST_CASE("generator chain maps really are chain maps") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK(is_chain_map(dn_i(p, 0, 1)));
    CHECK(is_chain_map(dn_pi(p, 0, 1)));
    CHECK(is_chain_map(dn_c(p, -1, 0, 1)));
    CHECK(is_chain_map(dn_ichain(p, -1, 1)));
    CHECK(is_chain_map(dn_delta(p, -1, 1)));
    CHECK(is_chain_map(dn_phi(p, 0, 1)));

    PresPtr q = cyclic(Field::rationals(), 3);
    CHECK(is_chain_map(cyc_i(q, 0, 0, 1)));
    CHECK(is_chain_map(cyc_pi(q, 0, 0, 1)));
    CHECK(is_chain_map(cyc_c(q, 1, -1, 0, 1)));
    CHECK(is_chain_map(cyc_phi(q, 0, 0, 1)));
}

TEST_CASE("Delta factors as inclusion chain after connecting map") {
    PresPtr p = dual_numbers(Field::rationals());
    ChainMap lhs = dn_delta(p, -1, 1);
    ChainMap rhs = compose(dn_ichain(p, -1, 1), dn_c(p, -1, 1, 1));
    CHECK(homotopic(lhs, rhs));
    CHECK_FALSE(lhs.is_zero());
}

TEST_CASE("shift conjugation identity holds exactly, and needs the signs") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK(verify_shift_delta(p, {0, 1}));
    CHECK(verify_shift_delta(p, {-1, 2}));
    CHECK(verify_shift_delta(p, {1, 1}));
    CHECK_FALSE(verify_shift_delta(p, {0, 1}, /*use_signs=*/false));
}

TEST_CASE("dual-numbers verification suite passes over Q and F_5") {
    for (Field f : {Field::rationals(), Field::prime(5)}) {
        PresPtr p = dual_numbers(f);
        Report lem = verify_fact_lemma_dn(p, 2);
        CHECK(lem.all_passed());
        Report tri = verify_triangles_dn(p, 2);
        CHECK(tri.all_passed());
        CHECK(tri.count(Status::SkippedBoundary) == 0);
    }
}

TEST_CASE("scaling checks are skipped over F_2") {
    PresPtr p = dual_numbers(Field::prime(2));
    Report tri = verify_triangles_dn(p, 2);
    CHECK(tri.all_passed());
    CHECK(tri.count(Status::SkippedBoundary) > 0);
}

TEST_CASE("cyclic verification suite passes for d = 2 and d = 3") {
    for (int d : {2, 3}) {
        PresPtr p = cyclic(Field::rationals(), d);
        CHECK(verify_fact_lemma_cyc(p, 2).all_passed());
        CHECK(verify_triangles_cyc(p, 2).all_passed());
    }
}

TEST_CASE("window shapes") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK(dn_window(p, 2).objects.size() == 15);
    CHECK(dn_window(p, 3).objects.size() == 28);
    PresPtr q = cyclic(Field::rationals(), 3);
    CHECK(cyc_window(q, 2).objects.size() == 45);  // 15 index pairs x 3 residues
}

TEST_CASE("windows smaller than 2 are rejected") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK_THROWS_AS(verify_fact_lemma_dn(p, 1), BadParameter);
    PresPtr q = cyclic(Field::rationals(), 3);
    CHECK_THROWS_AS(verify_fact_lemma_cyc(q, 0), BadParameter);
    CHECK_THROWS_AS(cyclic(Field::rationals(), 1), BadParameter);
}

TEST_CASE("hom dimension spot checks against the structure lemma") {
    PresPtr p = dual_numbers(Field::rationals());
    // Inclusion-chain pattern: X(0,1) -> X(-1,1).
    CHECK(hom_kb_dim(build_dn(p, {0, 1}), build_dn(p, {-1, 1})) == 1);
    // Projection-chain pattern: X(0,2) -> X(0,1).
    CHECK(hom_kb_dim(build_dn(p, {0, 2}), build_dn(p, {0, 1})) == 1);
    // Connecting pattern: X(-1,0) -> X(0,1).
    CHECK(hom_kb_dim(build_dn(p, {-1, 0}), build_dn(p, {0, 1})) == 1);
    // End spaces are two-dimensional.
    CHECK(hom_kb_dim(build_dn(p, {0, 2}), build_dn(p, {0, 2})) == 2);
    // No other interactions: X(0,0) -> X(2,2).
    CHECK(hom_kb_dim(build_dn(p, {0, 0}), build_dn(p, {2, 2})) == 0);

    PresPtr q = cyclic(Field::rationals(), 3);
    CHECK(hom_kb_dim(build_cyc(q, {0, 0, 1}), build_cyc(q, {0, 0, 1})) == 1);
    CHECK(hom_kb_dim(build_cyc(q, {0, 0, 1}), build_cyc(q, {1, -1, 1})) == 1);
}

}  // TEST_SUITE
