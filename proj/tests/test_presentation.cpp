#include "doctest.h"
#include "homcat/families.hpp"

using namespace homcat;

TEST_SUITE("presentation") {

TEST_CASE("dual numbers presentation validates") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK(validate_presentation(p).ok());
    CHECK(p->dim_of("A") == 2);
    CHECK(hom_dim(p, Obj{{"A"}}, Obj{{"A"}}) == 2);
}

TEST_CASE("nilpotent generator squares to zero") {
    PresPtr p = dual_numbers(Field::rationals());
    const auto& basis = p->basis("A", "A");
    REQUIRE(basis.size() == 2);
    Mor eps{p, Obj{{"A"}}, Obj{{"A"}}, basis[1].real};
    CHECK_FALSE(eps.is_zero());
    CHECK(compose(eps, eps).is_zero());
}

TEST_CASE("cyclic presentation validates and has arrow homs only") {
    PresPtr p = cyclic(Field::rationals(), 3);
    CHECK(validate_presentation(p).ok());
    CHECK(cyclic_rank(p) == 3);
    CHECK(cyclic_label(p, 0) == "P1");
    CHECK(cyclic_label(p, -1) == "P3");
    CHECK(cyclic_label(p, 3) == "P1");
    // End(P_s) = k, Hom(P_s, P_{s-1}) = k, all other Hom spaces vanish.
    CHECK(hom_dim(p, Obj{{"P1"}}, Obj{{"P1"}}) == 1);
    CHECK(hom_dim(p, Obj{{"P1"}}, Obj{{"P3"}}) == 1);
    CHECK(hom_dim(p, Obj{{"P1"}}, Obj{{"P2"}}) == 0);
    // The arrow composes to zero (radical square zero).
    Mor arrow{p, Obj{{"P1"}}, Obj{{"P3"}}, p->basis("P1", "P3")[0].real};
    Mor arrow2{p, Obj{{"P3"}}, Obj{{"P2"}}, p->basis("P3", "P2")[0].real};
    CHECK(compose(arrow2, arrow).is_zero());
}

TEST_CASE("hom spaces of direct sums assemble blockwise") {
    PresPtr p = dual_numbers(Field::rationals());
    Obj aa{{"A", "A"}};
    CHECK(hom_dim(p, aa, aa) == 8);
    auto basis = hom_space(p, aa, aa);
    CHECK(basis.size() == 8);
    for (const auto& b : basis) {
        Vec coords = hom_coordinates(b);
        Mor back = mor_from_coordinates(p, aa, aa, coords);
        CHECK(back == b);
    }
}

TEST_CASE("coordinates round trip and reject out-of-span blocks") {
    PresPtr p = dual_numbers(Field::rationals());
    Obj a{{"A"}};
    Mor id = identity_mor(p, a);
    Vec coords = hom_coordinates(id);
    REQUIRE(coords.size() == 2);
    CHECK(mor_from_coordinates(p, a, a, coords) == id);
}

TEST_CASE("zero object behaves") {
    PresPtr p = dual_numbers(Field::rationals());
    Obj zero;
    CHECK(zero.is_zero());
    CHECK(hom_dim(p, zero, Obj{{"A"}}) == 0);
    CHECK(zero_mor(p, zero, Obj{{"A"}}).is_zero());
}

}  // TEST_SUITE
