#include "doctest.h"
#include "homcat/families.hpp"
#include "homcat/triangles.hpp"

using namespace homcat;

TEST_SUITE("triangles") {

TEST_CASE("standard triangles and their rotations are exact") {
    PresPtr p = dual_numbers(Field::rationals());
    Triangle t = dn_triangle(p, 0, 1);
    CHECK(is_exact_triangle(t).exact);
    Triangle r = rotate(t);
    CHECK(is_exact_triangle(r).exact);
    CHECK(is_exact_triangle(rotate(r)).exact);
}

TEST_CASE("cyclic standard triangle is exact") {
    PresPtr p = cyclic(Field::rationals(), 3);
    Triangle t = cyc_triangle(p, 0, 0, 1);
    CHECK(is_exact_triangle(t).exact);
    CHECK(is_exact_triangle(rotate(t)).exact);
}

TEST_CASE("a scrambled triangle is rejected") {
    PresPtr p = dual_numbers(Field::rationals());
    Triangle t = dn_triangle(p, 0, 1);
    Triangle bad = t;
    bad.v = zero_chain_map(t.v.src, t.v.tgt);
    CHECK_FALSE(is_exact_triangle(bad).exact);
}

TEST_CASE("scaling the connecting map breaks exactness exactly when lambda != 1") {
    PresPtr p = dual_numbers(Field::rationals());
    Window w = dn_window(p, 2);
    Triangle t = rotate(dn_triangle(p, 0, 1));
    CHECK(scaling_test(t, mpq_class(1), w.objects));
    CHECK_FALSE(scaling_test(t, mpq_class(2), w.objects));
    CHECK_FALSE(scaling_test(t, mpq_class(-1), w.objects));
}

TEST_CASE("scaling rigidity over a prime field") {
    PresPtr p = cyclic(Field::prime(7), 3);
    Window w = cyc_window(p, 2);
    Triangle t = rotate(cyc_triangle(p, 0, 0, 1));
    CHECK(scaling_test(t, mpq_class(1), w.objects));
    CHECK_FALSE(scaling_test(t, mpq_class(3), w.objects));
}

TEST_CASE("section and retraction detection") {
    PresPtr p = dual_numbers(Field::rationals());
    Complex x = build_dn(p, {0, 1});
    CHECK(is_section(identity_chain_map(x)));
    CHECK(is_retraction(identity_chain_map(x)));
    CHECK_FALSE(is_section(dn_delta(p, 0, 1)));
    CHECK_FALSE(is_retraction(dn_delta(p, 0, 1)));
}

TEST_CASE("end analysis of the two-term complex") {
    PresPtr p = dual_numbers(Field::rationals());
    EndAnalysis e = end_analysis(build_dn(p, {0, 1}));
    CHECK(e.dim == 2);
    CHECK(e.is_local == Locality::Yes);
    CHECK(e.radical_basis.size() == 1);
    // The radical generator is nilpotent in K^b.
    ChainMap r = e.radical_basis[0];
    CHECK(homotopic(compose(r, r), zero_chain_map(r.src, r.tgt)));
}

TEST_CASE("end analysis of a cyclic complex is one-dimensional") {
    PresPtr p = cyclic(Field::rationals(), 3);
    EndAnalysis e = end_analysis(build_cyc(p, {0, 0, 1}));
    CHECK(e.dim == 1);
    CHECK(e.is_local == Locality::Yes);
    CHECK(e.radical_basis.empty());
}

TEST_CASE("Delta is almost vanishing; identities and generators are not") {
    PresPtr p = dual_numbers(Field::rationals());
    Window w = dn_window(p, 2);
    CHECK(is_almost_vanishing(dn_delta(p, 0, 1), w.objects));
    CHECK(is_almost_vanishing(dn_delta(p, 0, 0), w.objects));
    CHECK_FALSE(is_almost_vanishing(identity_chain_map(build_dn(p, {0, 1})), w.objects));
    CHECK_FALSE(is_almost_vanishing(dn_i(p, 0, 1), w.objects));
    CHECK_FALSE(is_almost_vanishing(dn_pi(p, 0, 1), w.objects));
}

}  // TEST_SUITE
