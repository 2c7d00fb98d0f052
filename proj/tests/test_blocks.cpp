#include <doctest.h>

#include "blocks.hpp"
#include "test_support.hpp"

using namespace hfg;

TEST_CASE("is_block") {
    AbelianGroup z2({2});
    CHECK(is_block(z2, {1, 1}));
    AbelianGroup z3({3});
    CHECK(!is_block(z3, {1}));
    AbelianGroup z2z2({2, 2});
    int a = z2z2.index_of({1, 0}), b = z2z2.index_of({0, 1}), ab = z2z2.index_of({1, 1});
    CHECK(is_block(z2z2, {a, b, ab}));
    CHECK_THROWS_AS(is_block(z2z2, {a, z2z2.identity()}), InputError);
}

TEST_CASE("is_atom") {
    AbelianGroup z2({2});
    CHECK(is_atom(z2, Block{{1, 1}}));
    AbelianGroup z2z2({2, 2});
    int a = z2z2.index_of({1, 0}), b = z2z2.index_of({0, 1}), ab = z2z2.index_of({1, 1});
    CHECK(!is_atom(z2z2, Block{{a, a, b, b}}));  // {a,a} is a zero-sum sub-multiset
    CHECK(is_atom(z2z2, Block{{a, b, ab}}));
}

TEST_CASE("cross numbers are exact") {
    AbelianGroup z2({2});
    CHECK(cross_number(z2, Block{{1, 1}}) == Rational(1));
    AbelianGroup z3({3});
    CHECK(cross_number(z3, Block{{1, 1, 1}}) == Rational(1));
    AbelianGroup z2z2({2, 2});
    CHECK(cross_number(z2z2, Block{{1, 2, 3}}) == Rational(3, 2));
}

TEST_CASE("cross number is additive under concatenation") {
    AbelianGroup z6({6});
    Block b1{{1, 2, 3}}, b2{{4, 5, 3}};
    Block joined{{1, 2, 3, 3, 4, 5}};
    CHECK(cross_number(z6, joined) == cross_number(z6, b1) + cross_number(z6, b2));
}

TEST_CASE("enumerate_atoms basics") {
    AbelianGroup z2({2});
    auto atoms = enumerate_atoms(z2, SubsetS::of(z2, {1}));
    REQUIRE(atoms.size() == 1);
    CHECK(atoms[0].block.entries == std::vector<int>{1, 1});

    CHECK(enumerate_atoms(z2, SubsetS{{}}).empty());

    AbelianGroup z2z2({2, 2});
    int a = z2z2.index_of({1, 0}), b = z2z2.index_of({0, 1});
    auto two = enumerate_atoms(z2z2, SubsetS::of(z2z2, {a, b}));
    REQUIRE(two.size() == 2);
    // b = (0,1) has the smaller index, so {b,b} comes first
    CHECK(two[0].block.entries == std::vector<int>{b, b});
    CHECK(two[1].block.entries == std::vector<int>{a, a});

    CHECK_THROWS_AS(enumerate_atoms(z2, SubsetS::of(z2, {1}), 1), InputError);
}

TEST_CASE("half factorial and weakly half factorial") {
    AbelianGroup z2({2});
    CHECK(is_half_factorial(z2, SubsetS::of(z2, {1})).holds);

    AbelianGroup z3({3});
    auto r = is_half_factorial(z3, SubsetS::of(z3, {1, 2}));
    CHECK(!r.holds);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->block.entries == std::vector<int>{1, 2});
    CHECK(r.certificate->cross == Rational(2, 3));
    CHECK(!is_weakly_half_factorial(z3, SubsetS::of(z3, {1, 2})).holds);

    CHECK(is_half_factorial(z3, SubsetS{{}}).holds);

    AbelianGroup z2z2({2, 2});
    auto w = is_weakly_half_factorial(z2z2, SubsetS::of(z2z2, {1, 2, 3}));
    CHECK(!w.holds);
    REQUIRE(w.certificate.has_value());
    CHECK(w.certificate->cross == Rational(3, 2));
}

TEST_CASE("atoms agree with the naive oracle on small groups") {
    for (const auto& moduli : test::catalog_moduli(6)) {
        AbelianGroup g(moduli);
        for (const auto& s : test::all_subsets(g)) {
            auto fast = enumerate_atoms(g, s);
            auto naive = test::naive_atoms(g, s);
            REQUIRE(fast.size() == naive.size());
            for (size_t i = 0; i < fast.size(); ++i) {
                CHECK(fast[i].block == naive[i].block);
                CHECK(fast[i].cross == naive[i].cross);
            }
        }
    }
}

TEST_CASE("every enumerated atom is a minimal block") {
    for (const auto& moduli : test::catalog_moduli(7)) {
        AbelianGroup g(moduli);
        SubsetS full{test::non_identity(g)};
        for (const auto& a : enumerate_atoms(g, full)) {
            CHECK(is_block(g, a.block.entries));
            CHECK(is_atom(g, a.block));
        }
    }
}

TEST_CASE("HF monotone under subsets and HF implies WHF") {
    for (const auto& moduli : test::catalog_moduli(6)) {
        AbelianGroup g(moduli);
        for (const auto& s : test::all_subsets(g)) {
            bool hf = is_half_factorial(g, s).holds;
            bool whf = is_weakly_half_factorial(g, s).holds;
            if (hf) CHECK(whf);
            if (!hf) continue;
            // drop each element in turn; subsets of an HF set stay HF
            for (size_t i = 0; i < s.elems.size(); ++i) {
                std::vector<int> smaller = s.elems;
                smaller.erase(smaller.begin() + i);
                CHECK(is_half_factorial(g, SubsetS{smaller}).holds);
            }
        }
    }
}

TEST_CASE("singleton subsets are HF with atom g^ord(g)") {
    for (const auto& moduli : test::catalog_moduli(8)) {
        AbelianGroup g(moduli);
        for (int x : test::non_identity(g)) {
            auto atoms = enumerate_atoms(g, SubsetS{{x}});
            REQUIRE(atoms.size() == 1);
            CHECK(static_cast<int>(atoms[0].block.entries.size()) == g.element_order(x));
            CHECK(atoms[0].cross == Rational(1));
            CHECK(is_half_factorial(g, SubsetS{{x}}).holds);
        }
    }
}

TEST_CASE("blocks reject nonabelian groups") {
    TableGroup s3 = TableGroup::parse(
        "6 0 "
        "0 1 2 3 4 5 "
        "1 0 4 5 2 3 "
        "2 5 0 4 3 1 "
        "3 4 5 0 1 2 "
        "4 3 1 2 5 0 "
        "5 2 3 1 0 4 ");
    CHECK_THROWS_AS(is_block(s3, {1, 1}), InputError);
    CHECK_THROWS_AS(enumerate_atoms(s3, SubsetS{{1}}), InputError);
}
