#include "doctest.h"
#include "homcat/families.hpp"

using namespace homcat;

namespace {

Vec flatten_family(const NaturalFamily& fam) {
    Vec out;
    for (const auto& comp : fam.components) out.insert(out.end(), comp.begin(), comp.end());
    return out;
}

bool in_span(const Field& f, const std::vector<NaturalFamily>& basis, const NaturalFamily& fam) {
    Vec target = flatten_family(fam);
    std::vector<Vec> cols;
    for (const auto& b : basis) cols.push_back(flatten_family(b));
    Mat m = from_columns(f, static_cast<int>(target.size()), cols);
    return solve(m, target).has_value();
}

}  // namespace

TEST_SUITE("center") {

TEST_CASE("dual-numbers window center dimensions at W = 2") {
    PresPtr p = dual_numbers(Field::rationals());
    WindowContext ctx(dn_window(p, 2));
    CHECK(ctx.window().objects.size() == 15);
    CHECK(solve_center(ctx).size() == 16);          // 1 + one Delta-direction per object
    CHECK(solve_triangle_center(ctx).size() == 6);  // 1 + one direction per diagonal
}

TEST_CASE("dual-numbers restriction to the stalk center") {
    PresPtr p = dual_numbers(Field::rationals());
    WindowContext ctx(dn_window(p, 2));
    ResIndReport rr = res_ind_check(ctx, p);
    CHECK(rr.report.all_passed());
    CHECK(rr.triangle_center_dim == 6);
    CHECK(rr.stalk_center_dim == 2);
    CHECK(rr.res_surjective);
    CHECK_FALSE(rr.res_injective);
    CHECK(rr.kernel.size() == 4);
    // Kernel elements square to zero (radical square zero source algebra).
    CHECK(kernel_nilpotency_check(ctx, rr.kernel, 2).all_passed());
}

TEST_CASE("cyclic window center at d = 3, W = 2") {
    PresPtr p = cyclic(Field::rationals(), 3);
    WindowContext ctx(cyc_window(p, 2));
    CHECK(solve_center(ctx).size() == 1);
    CHECK(solve_triangle_center(ctx).size() == 1);
    ResIndReport rr = res_ind_check(ctx, p);
    CHECK(rr.report.all_passed());
    CHECK(rr.triangle_center_dim == 1);
    CHECK(rr.stalk_center_dim == 1);
    CHECK(rr.res_surjective);
    CHECK(rr.res_injective);
    CHECK(rr.kernel.empty());
}

TEST_CASE("central families built from almost-vanishing deltas lie in the center") {
    PresPtr p = dual_numbers(Field::rationals());
    Window w = dn_window(p, 2);
    WindowContext ctx(w);
    auto basis = solve_center(ctx);

    std::vector<std::pair<int, ChainMap>> deltas;
    std::vector<mpq_class> lambdas;
    long k = 1;
    for (int n = -2; n <= 2; ++n)
        for (int m = n; m <= 2; ++m) {
            int i = w.object_index(build_dn(p, {n, m}));
            REQUIRE(i >= 0);
            deltas.emplace_back(i, dn_delta(p, n, m));
            lambdas.emplace_back(k++);
        }
    NaturalFamily fam = lemma_ric_family(ctx, deltas, lambdas);
    CHECK(ctx.is_natural(fam));
    CHECK(in_span(p->field, basis, fam));
}

TEST_CASE("constant-on-diagonals families lie in the triangle center") {
    PresPtr p = dual_numbers(Field::rationals());
    Window w = dn_window(p, 2);
    WindowContext ctx(w);
    auto tri_basis = solve_triangle_center(ctx);

    std::vector<std::pair<int, ChainMap>> deltas;
    std::vector<mpq_class> lambdas;
    for (int n = -2; n <= 2; ++n)
        for (int m = n; m <= 2; ++m) {
            deltas.emplace_back(w.object_index(build_dn(p, {n, m})), dn_delta(p, n, m));
            lambdas.emplace_back(m - n + 1);  // depends only on the diagonal
        }
    NaturalFamily fam = lemma_ric_family(ctx, deltas, lambdas);
    CHECK(in_span(p->field, tri_basis, fam));

    // A family that is not diagonal-constant stays outside the triangle center.
    std::vector<mpq_class> skew(lambdas.size(), mpq_class(0));
    skew[0] = 1;
    NaturalFamily off = lemma_ric_family(ctx, deltas, skew);
    CHECK_FALSE(in_span(p->field, tri_basis, off));
}

TEST_CASE("non-central insertions are rejected") {
    PresPtr p = dual_numbers(Field::rationals());
    Window w = dn_window(p, 2);
    WindowContext ctx(w);
    int i = w.object_index(build_dn(p, {0, 1}));
    // The identity is not almost vanishing, so it cannot serve as a delta.
    std::vector<std::pair<int, ChainMap>> bad = {{i, identity_chain_map(build_dn(p, {0, 1}))}};
    CHECK_THROWS_AS(lemma_ric_family(ctx, bad, {mpq_class(1)}), std::invalid_argument);
}

TEST_CASE("window hom graph is connected and non-degenerate") {
    PresPtr p = dual_numbers(Field::rationals());
    WindowContext ctx(dn_window(p, 2));
    BlockConnectivity bc = block_connectivity(ctx);
    CHECK(bc.num_components == 1);
    CHECK(bc.non_degenerate);

    PresPtr q = cyclic(Field::rationals(), 3);
    WindowContext cctx(cyc_window(q, 2));
    BlockConnectivity cbc = block_connectivity(cctx);
    CHECK(cbc.num_components == 1);
    CHECK(cbc.non_degenerate);
}

}  // TEST_SUITE
