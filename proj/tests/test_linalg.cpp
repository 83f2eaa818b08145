#include "doctest.h"
#include "homcat/linalg.hpp"

using namespace homcat;

namespace {

Mat make(Field f, int r, int c, std::initializer_list<long> vals) {
    Mat m(f, r, c);
    auto it = vals.begin();
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, mpq_class(*it++));
    return m;
}

bool in_kernel(const Mat& m, const Vec& v) {
    Vec r = mat_vec(m, v);
    for (const auto& x : r)
        if (!is_zero(x)) return false;
    return true;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("rref produces leading ones and pivot columns") {
    Field Q = Field::rationals();
    Mat m = make(Q, 2, 2, {2, 4, 1, 2});
    Rref r = rref(m);
    CHECK(r.pivots == std::vector<int>{0});
    CHECK(r.m(0, 0) == 1);
    CHECK(r.m(0, 1) == 2);
    CHECK(r.m(1, 0) == 0);
    CHECK(r.m(1, 1) == 0);
}

TEST_CASE("rank") {
    Field Q = Field::rationals();
    CHECK(rank(Mat::identity(Q, 3)) == 3);
    CHECK(rank(Mat::zero(Q, 3, 2)) == 0);
    CHECK(rank(make(Q, 2, 3, {1, 2, 3, 2, 4, 6})) == 1);
}

TEST_CASE("kernel basis spans the null space exactly") {
    Field Q = Field::rationals();
    Mat m = make(Q, 1, 2, {1, 2});
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(in_kernel(m, ker[0]));

    Mat big = make(Q, 2, 4, {1, 0, 2, 0, 0, 1, 3, 0});
    auto k2 = kernel_basis(big);
    REQUIRE(k2.size() == 2);
    for (const auto& v : k2) CHECK(in_kernel(big, v));
    // Deterministic: rank of the basis matrix equals its count.
    CHECK(rank(from_columns(Q, 4, k2)) == 2);
}

TEST_CASE("solve returns the canonical solution with free variables zero") {
    Field Q = Field::rationals();
    Mat m = make(Q, 1, 2, {1, 1});
    auto x = solve(m, Vec{mpq_class(5)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 5);
    CHECK((*x)[1] == 0);

    Mat sing = make(Q, 2, 2, {1, 0, 0, 0});
    CHECK(solve(sing, Vec{mpq_class(1), mpq_class(0)}).has_value());
    CHECK_FALSE(solve(sing, Vec{mpq_class(0), mpq_class(1)}).has_value());
}

TEST_CASE("prime field arithmetic is modular") {
    Field F5 = Field::prime(5);
    CHECK(F5.inv(mpq_class(2)) == 3);
    CHECK(F5.reduce(mpq_class(7)) == 2);
    CHECK(F5.add(mpq_class(3), mpq_class(4)) == 2);
    Mat m = make(F5, 2, 2, {2, 1, 4, 2});  // second row = 2 * first row mod 5
    CHECK(rank(m) == 1);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(in_kernel(m, ker[0]));
}

TEST_CASE("quotient basis picks representatives modulo the subspace") {
    Field Q = Field::rationals();
    std::vector<Vec> sub = {Vec{mpq_class(1), mpq_class(0)}};
    std::vector<Vec> total = {Vec{mpq_class(1), mpq_class(0)}, Vec{mpq_class(0), mpq_class(1)}};
    auto q = quotient_basis(Q, 2, sub, total);
    REQUIRE(q.size() == 1);
    CHECK(q[0][1] != 0);

    std::vector<Vec> outside = {Vec{mpq_class(0), mpq_class(1)}};
    std::vector<Vec> small = {Vec{mpq_class(1), mpq_class(0)}};
    CHECK_THROWS_AS(quotient_basis(Q, 2, outside, small), SubspaceNotContained);
}

TEST_CASE("field parsing keeps canonical forms") {
    Field Q = Field::rationals();
    CHECK(Q.parse("3/6") == mpq_class(1, 2));
    Field F7 = Field::prime(7);
    CHECK(F7.parse("10") == 3);
    CHECK(Field::to_string(mpq_class(-1, 2)) == "-1/2");
}

}  // TEST_SUITE
