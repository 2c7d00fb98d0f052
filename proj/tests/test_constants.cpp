#include <doctest.h>

#include "constants.hpp"
#include "test_support.hpp"

using namespace hfg;

TEST_CASE("mu and t for tiny cyclic groups") {
    AbelianGroup triv({});
    auto rt = compute_mu_t(triv);
    CHECK(rt.mu == 0);
    CHECK(rt.t == 0);
    CHECK(rt.mu0 == 0);
    CHECK(rt.t0 == 0);

    AbelianGroup z2({2});
    auto r2 = compute_mu_t(z2);
    CHECK(r2.mu == 1);
    CHECK(r2.t == 1);
    CHECK(r2.mu0 == 1);
    CHECK(r2.t0 == 1);

    AbelianGroup z3({3});
    auto r3 = compute_mu_t(z3);
    CHECK(r3.mu == 1);  // {g} alone is HF, {g, g^2} is not
    CHECK(r3.t == 2);   // need both singletons to cover G \ {e}
}

TEST_CASE("mu0 >= mu and t0 <= t on small groups") {
    for (const auto& moduli : test::catalog_moduli(8)) {
        AbelianGroup g(moduli);
        auto r = compute_mu_t(g);
        CHECK(r.mu0 >= r.mu);
        CHECK(r.t0 <= r.t);
        if (g.order() >= 2) {
            CHECK(r.mu >= 1);  // a singleton is always half factorial
            CHECK(r.t >= 1);
        }
    }
}

TEST_CASE("mu witness is a maximal HF set of the stated size") {
    AbelianGroup z6({6});
    auto r = compute_mu_t(z6);
    REQUIRE(static_cast<int>(r.mu_witness.size()) == r.mu);
    auto s = SubsetS::of(z6, r.mu_witness);
    CHECK(is_half_factorial(z6, s).holds);
    // no strictly larger HF superset exists (mu is the max size)
    for (const auto& sup : test::all_subsets(z6)) {
        if (static_cast<int>(sup.elems.size()) > r.mu) CHECK(!is_half_factorial(z6, sup).holds);
    }
}

TEST_CASE("t witness covers all non-identity elements with HF parts") {
    AbelianGroup z5({5});
    auto r = compute_mu_t(z5);
    REQUIRE(static_cast<int>(r.t_cover.size()) == r.t);
    std::vector<bool> covered(z5.order(), false);
    for (const auto& part : r.t_cover) {
        auto s = SubsetS::of(z5, part);
        CHECK(is_half_factorial(z5, s).holds);
        for (int x : part) covered[x] = true;
    }
    for (int x = 1; x < z5.order(); ++x) CHECK(covered[x]);
}

TEST_CASE("order cap is enforced") {
    AbelianGroup big({4, 4});  // order 16 > default cap 12
    CHECK_THROWS_AS(compute_mu_t(big), LimitError);
    CHECK_NOTHROW(compute_mu_t(big, 16));
}

TEST_CASE("mu-star and t-star on colored cayley digraphs") {
    AbelianGroup z3({3});
    auto c = build_cayley(z3, SubsetS::of(z3, {1, 2}));
    auto r = compute_mu_star_t_star(c.base);
    CHECK(r.mu_star == 1);  // either color class alone is geodetical, together they are not
    CHECK(r.t_star == 2);

    AbelianGroup z2({2});
    auto c2 = build_cayley(z2, SubsetS::of(z2, {1}));
    auto r2 = compute_mu_star_t_star(c2.base);
    CHECK(r2.mu_star == 1);
    CHECK(r2.t_star == 1);
}

TEST_CASE("mu-star requires a full coloring") {
    WeightedDigraph d(2, {{0, 1, Rational(1), -1}});
    CHECK_THROWS_AS(compute_mu_star_t_star(d), InputError);
}

TEST_CASE("edge bounds on small graphs") {
    // single edge: everything is 1
    auto e1 = test::path_graph(2);
    auto r1 = check_coloring_bounds(e1);
    CHECK(r1.chi_prime == 1);
    CHECK(r1.delta == 1);
    CHECK(r1.t == 1);
    CHECK(r1.mu == 1);
    CHECK(r1.t <= r1.chi_prime);

    // triangle: chi' = 3, Delta = 2
    auto tri = test::cycle_graph(3);
    auto rt = check_coloring_bounds(tri);
    CHECK(rt.chi_prime == 3);
    CHECK(rt.delta == 2);
    CHECK(rt.t <= rt.chi_prime);

    // 3-edge path: chi' = 2, and a matching plus the middle edge... t = 1
    // since the whole path is a tree, hence unique-path, hence geodetical
    auto p4 = test::path_graph(4);
    auto rp = check_coloring_bounds(p4);
    CHECK(rp.chi_prime == 2);
    CHECK(rp.delta == 2);
    CHECK(rp.t == 1);
    CHECK(rp.mu == 3);
}

TEST_CASE("chi' is Delta or Delta + 1 and t <= chi' over a small corpus") {
    for (const auto& d : test::digraph_corpus()) {
        if (!d.symmetric()) continue;
        if (d.arcs().size() / 2 > 12) continue;
        auto r = check_coloring_bounds(d);
        CHECK((r.chi_prime == r.delta || r.chi_prime == r.delta + 1));
        CHECK(r.t <= r.chi_prime);
        CHECK(r.mono_classes_up);
    }
}

TEST_CASE("bond digraph of a potential") {
    // constant potential: no arcs survive
    auto k3 = test::cycle_graph(3);
    auto flat = bond_induced_digraph(k3, Potential{{Rational(1), Rational(1), Rational(1)}});
    CHECK(flat.arcs().empty());

    // strictly increasing potential on a path keeps one direction
    auto p3 = test::path_graph(3);
    auto up = bond_induced_digraph(p3, Potential{{Rational(0), Rational(1), Rational(2)}});
    CHECK(up.arcs().size() == 2);
    for (const Arc& a : up.arcs()) CHECK(a.from < a.to);
    CHECK(up.is_geodetical().holds);
}

TEST_CASE("bond digraphs are geodetical for random potentials") {
    int idx = 0;
    for (const auto& d : test::digraph_corpus()) {
        if (!d.symmetric()) continue;
        for (int seed = 0; seed < 8; ++seed) {
            auto p = random_potential(d.vertex_count(), 1000 * idx + seed);
            auto b = bond_induced_digraph(d, p);
            CHECK(b.is_geodetical().holds);
        }
        ++idx;
    }
}
