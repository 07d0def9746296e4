#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "aglab/examples.hpp"
#include "aglab/magma.hpp"

using namespace aglab;

namespace {

FiniteMagma load(const char* name) {
    std::ifstream in(std::string(AGLAB_DATA_DIR) + "/" + name);
    REQUIRE(in.good());
    return parse_cayley_table(in);
}

SubsetMask mask_of(std::initializer_list<int> elements) {
    SubsetMask m = 0;
    for (int e : elements) m |= SubsetMask{1} << e;
    return m;
}

} // namespace

TEST_CASE("data files match the built-in tables") {
    CHECK(load("ex.tbl") == examples::ex());
    CHECK(load("e2.tbl") == examples::e2());
    CHECK(load("t.tbl") == examples::t());
    CHECK(examples::ex().label(3) == "d");
}

TEST_CASE("parse and format round trip") {
    auto m = examples::e2();
    CHECK(parse_cayley_table_text(format_cayley_table(m)) == m);
    auto bare = FiniteMagma(2, {0, 0, 0, 0});
    CHECK(parse_cayley_table_text(format_cayley_table(bare)) == bare);
}

TEST_CASE("parser rejects malformed input with line numbers") {
    auto fails_with = [](const char* text, const char* what) {
        try {
            parse_cayley_table_text(text);
            FAIL_CHECK("no exception for: " << text);
        } catch (const std::invalid_argument& e) {
            CHECK(std::string(e.what()).find(what) != std::string::npos);
        }
    };
    fails_with("order 0\n", "line 1");
    fails_with("order 2\n0 0\n", "line");        // missing row
    fails_with("order 2\n0 0 0\n0 0\n", "line 2"); // long row
    fails_with("order 2\n0 2\n0 0\n", "line 2");   // out of range
    fails_with("order 2\nlabels x x\n0 0\n0 0\n", "line 2");
    fails_with("order 2\n0 y\n0 0\n", "line 2");   // unknown label
    fails_with("nonsense\n", "line 1");
}

TEST_CASE("left invertive and the derived laws") {
    for (const auto& m : {examples::ex(), examples::e2(), examples::t()}) {
        CHECK(is_left_invertive(m));
        CHECK_FALSE(left_invertive_violation(m).has_value());
        CHECK(is_medial(m));
        // all three have a left identity, so these follow
        CHECK(is_paramedial(m));
        CHECK(satisfies_law4(m));
    }
    // swapping one entry of t breaks the law and the violation says where
    auto t = examples::t();
    auto broken = t.table;
    broken[2 * 5 + 3] = 0;
    FiniteMagma bad(5, broken);
    CHECK_FALSE(is_left_invertive(bad));
    CHECK(left_invertive_violation(bad).has_value());
}

TEST_CASE("left identities") {
    CHECK(left_identities(examples::ex()) == std::vector<int>{3});
    CHECK(left_identities(examples::e2()) == std::vector<int>{3});
    CHECK(left_identities(examples::t()) == std::vector<int>{1});
    CHECK(left_identities(FiniteMagma(2, {0, 0, 0, 0})).empty());
}

TEST_CASE("regular witnesses") {
    auto ex = examples::ex();
    CHECK(is_regular(ex));
    for (int a = 0; a < 5; ++a) {
        auto w = regular_witness(ex, a);
        REQUIRE(w.has_value());
        CHECK(w->x == a); // each element is its own witness here
        CHECK(ex.at(ex.at(a, w->x), a) == a);
    }

    auto e2 = examples::e2();
    CHECK_FALSE(is_regular(e2));
    CHECK(regular_witness(e2, 0).has_value());
    CHECK_FALSE(regular_witness(e2, 1).has_value());
    CHECK_FALSE(regular_witness(e2, 2).has_value()); // c has no witness
    CHECK(regular_witness(e2, 3).has_value());
    CHECK(regular_witness(e2, 4).has_value());

    CHECK(is_regular(examples::t()));
}

TEST_CASE("intra-regular witnesses") {
    auto t = examples::t();
    CHECK(is_intra_regular(t));
    // the five documented equations, checked literally
    auto sq = [&](int a) { return t.at(a, a); };
    CHECK(t.at(t.at(0, sq(0)), 0) == 0); // a = (a a^2) a
    CHECK(t.at(t.at(2, sq(1)), 4) == 1); // b = (c b^2) e
    CHECK(t.at(t.at(3, sq(2)), 4) == 2); // c = (d c^2) e
    CHECK(t.at(t.at(2, sq(3)), 2) == 3); // d = (c d^2) c
    CHECK(t.at(t.at(1, sq(4)), 4) == 4); // e = (b e^2) e

    // the module returns the lexicographically first witness pair
    std::pair<int, int> expect[] = {{0, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 4}};
    for (int a = 0; a < 5; ++a) {
        auto w = intra_regular_witness(t, a);
        REQUIRE(w.has_value());
        CHECK(std::pair{w->x, w->y} == expect[a]);
    }

    auto e2 = examples::e2();
    CHECK_FALSE(is_intra_regular(e2));
    CHECK_FALSE(intra_regular_witness(e2, 1).has_value());
    CHECK_FALSE(intra_regular_witness(e2, 2).has_value());
    CHECK(intra_regular_witness(e2, 4).has_value());

    CHECK(is_intra_regular(examples::ex()));
}

TEST_CASE("subset product") {
    auto e2 = examples::e2();
    CHECK(subset_product(e2, mask_of({3}), mask_of({1})) == mask_of({1}));
    CHECK(subset_product(e2, mask_of({1, 2}), mask_of({3})) == mask_of({1, 2}));
    CHECK(subset_product(e2, 0, mask_of({1})) == 0);
    auto ex = examples::ex();
    CHECK(subset_product(ex, full_mask(5), full_mask(5)) == full_mask(5));
}

TEST_CASE("ideal predicates reject the empty set") {
    auto m = examples::ex();
    CHECK_THROWS_AS(is_left_ideal(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_ag_subgroupoid(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(is_bi_ideal(m, 0), std::invalid_argument);
    CHECK(is_semiprime_subset(m, 0)); // vacuous
}

TEST_CASE("e2 ideal census") {
    auto e2 = examples::e2();
    std::vector<SubsetMask> lefts = {
        mask_of({0}),          mask_of({0, 4}),       mask_of({0, 1, 4}),
        mask_of({0, 2, 4}),    mask_of({0, 1, 2, 4}), full_mask(5),
    };
    std::sort(lefts.begin(), lefts.end());
    CHECK(all_ideals(e2, IdealKind::Left) == lefts);

    std::vector<SubsetMask> rights = {mask_of({0}), mask_of({0, 4}),
                                      mask_of({0, 1, 2, 4}), full_mask(5)};
    std::sort(rights.begin(), rights.end());
    CHECK(all_ideals(e2, IdealKind::Right) == rights);
    CHECK(all_ideals(e2, IdealKind::TwoSided) == rights);

    // b*b = c*c = e, so the ideals containing e but not b or c are not semiprime
    CHECK(is_semiprime_subset(e2, mask_of({0})));
    CHECK_FALSE(is_semiprime_subset(e2, mask_of({0, 4})));
    CHECK_FALSE(is_semiprime_subset(e2, mask_of({0, 1, 4})));
    CHECK_FALSE(is_semiprime_subset(e2, mask_of({0, 2, 4})));
    CHECK(is_semiprime_subset(e2, mask_of({0, 1, 2, 4})));
    CHECK(is_semiprime_subset(e2, full_mask(5)));
}

TEST_CASE("ideal kind consistency on brute force") {
    // bi = subgroupoid + generalized bi; two-sided = left + right
    for (const auto& m : {examples::ex(), examples::e2(), examples::t()}) {
        for (SubsetMask a = 1; a <= full_mask(m.n); ++a) {
            CHECK(is_two_sided_ideal(m, a) ==
                  (is_left_ideal(m, a) && is_right_ideal(m, a)));
            CHECK(is_bi_ideal(m, a) ==
                  (is_ag_subgroupoid(m, a) && is_generalized_bi_ideal(m, a)));
            if (is_two_sided_ideal(m, a)) {
                CHECK(is_bi_ideal(m, a));
                CHECK(is_one_two_ideal(m, a));
            }
        }
    }
}

TEST_CASE("band and duo classification") {
    CHECK_FALSE(is_ag_band(examples::ex())); // c*c = d, not c
    CHECK_FALSE(is_ag_band(examples::e2()));
    CHECK_FALSE(is_ag_band(examples::t()));
    CHECK(is_ag_band(FiniteMagma(1, {0})));

    auto e2 = examples::e2();
    // {a,b,e} is a left ideal but b*d = c escapes it
    CHECK(is_left_ideal(e2, mask_of({0, 1, 4})));
    CHECK_FALSE(is_right_ideal(e2, mask_of({0, 1, 4})));
    CHECK_FALSE(is_left_duo(e2));

    for (const auto& m : {examples::ex(), examples::e2(), examples::t()}) {
        bool duo = true;
        for (SubsetMask a = 1; a <= full_mask(m.n); ++a)
            if (is_left_ideal(m, a) && !is_right_ideal(m, a)) duo = false;
        CHECK(is_left_duo(m) == duo);
    }
}

TEST_CASE("subset formatting uses labels") {
    auto e2 = examples::e2();
    CHECK(format_subset(e2, mask_of({0, 4})) == "{a,e}");
    CHECK(format_subset(e2, 0) == "{}");
}
