#include "brute_force.hpp"
#include "doctest.h"
#include "homcat/families.hpp"
#include "homcat/triangles.hpp"

using namespace homcat;

TEST_SUITE("complex") {

TEST_CASE("family complexes are valid and supported where claimed") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {-1, 2});
    CHECK(validate_complex(x).ok());
    CHECK(x.min_degree() == -1);
    CHECK(x.max_degree() == 2);
    CHECK(x.component(0) == Obj{{"A"}});
    CHECK(x.component(5).is_zero());
    CHECK_FALSE(x.differential(0).is_zero());
    CHECK(compose(x.differential(1), x.differential(0)).is_zero());
}

TEST_CASE("shift flips the differential sign") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 2});
    Complex sx = shift(x, 1);
    CHECK(sx.min_degree() == -1);
    CHECK(sx.differential(-1) == negate(x.differential(0)));
}

TEST_CASE("shift by two is a plain relabelling") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 2});
    Complex s2 = shift(x, 2);
    CHECK(s2.differential(-2).real == x.differential(0).real);
}

TEST_CASE("cone of the identity is contractible") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 1});
    ConeResult c = cone(identity_chain_map(x));
    CHECK(validate_complex(c.cone).ok());
    CHECK(is_contractible(c.cone));
}

TEST_CASE("cone triangle is exact by construction") {
    PresPtr p = dual_numbers(Field::rationals());
    ChainMap f = dn_i(p, 0, 1);  // X(0,1) -> X(-1,1)
    ConeResult c = cone(f);
    CHECK(validate_complex(c.cone).ok());
    CHECK(is_exact_triangle(c.triangle).exact);
}

TEST_CASE("brutal truncation triangle is exact") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {-2, 1});
    for (int n = -1; n <= 2; ++n) {
        Triangle t = brutal_truncation_triangle(x, n);
        CHECK(is_exact_triangle(t).exact);
    }
}

TEST_CASE("cohomology of the eps-differential complexes") {
    PresPtr p = dual_numbers(Field::rationals());
    auto h = cohomology_dims(build_dn(p, {0, 2}));
    CHECK(h[0] == 1);
    CHECK(h[1] == 0);
    CHECK(h[2] == 1);
}

TEST_CASE("hom in K^b: stalks in distinct degrees do not interact") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex s0 = stalk_complex(p, Obj{{"A"}}, 0);
    Complex s1 = stalk_complex(p, Obj{{"A"}}, 1);
    CHECK(hom_kb_dim(s0, s1) == 0);
    CHECK(hom_kb_dim(s0, s0) == 2);
}

TEST_CASE("hom in K^b on the two-term complex") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 1});
    CHECK(hom_kb_dim(x, x) == 2);
    CHECK(hom_kb_dim(x, shift(x, 1)) == 1);
}

TEST_CASE("homotopy boundaries are null-homotopic and witnesses verify") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 1});
    Homotopy s{x, x, {}};
    s.parts[1] = identity_mor(p, Obj{{"A"}});
    ChainMap b = homotopy_boundary(s);
    CHECK(is_chain_map(b));
    auto w = null_homotopy_witness(b);
    REQUIRE(w.has_value());
    CHECK(homotopic(b, zero_chain_map(x, x)));
    // The identity is not null-homotopic (the complex is not contractible).
    CHECK_FALSE(null_homotopy_witness(identity_chain_map(x)).has_value());
}

TEST_CASE("phi is an isomorphism in K^b") {
    PresPtr p = dual_numbers(Field::rationals());
    CHECK(is_iso_kb(dn_phi(p, 0, 1)));
    CHECK(is_iso_kb(dn_phi(p, -1, 2)));
    CHECK_FALSE(is_iso_kb(dn_delta(p, 0, 1)));
}

TEST_CASE("brute-force oracle agrees on a small pair over F_2") {
    PresPtr p = dual_numbers(Field::prime(2));
    Complex a = build_dn(p, {0, 0});
    Complex b = build_dn(p, {0, 1});
    CHECK(homcat_test::brute_force_hom_kb_dim_f2(a, b) == hom_kb_dim(a, b));
    CHECK(homcat_test::brute_force_hom_kb_dim_f2(b, a) == hom_kb_dim(b, a));
}

}  // TEST_SUITE
