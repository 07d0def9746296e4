#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aglab/examples.hpp"
#include "aglab/ifs.hpp"

using namespace aglab;

TEST_CASE("make_ifs validates grades") {
    CHECK_THROWS_AS(make_ifs({Rat(1, 2)}, {Rat(2, 3)}), std::invalid_argument);
    CHECK_THROWS_AS(make_ifs({Rat(5, 4)}, {Rat::zero()}), std::invalid_argument);
    CHECK_THROWS_AS(make_ifs({Rat(1, 2)}, {Rat(1, 2), Rat::zero()}),
                    std::invalid_argument);
    auto a = make_ifs({Rat(1, 2), Rat::one()}, {Rat(1, 2), Rat::zero()});
    CHECK(a.n() == 2);
    CHECK(point_image(a, 0) == std::pair{Rat(1, 2), Rat(1, 2)});
}

TEST_CASE("characteristic and delta") {
    auto c = characteristic(0b101, 3);
    CHECK(c.mu == std::vector<Rat>{Rat::one(), Rat::zero(), Rat::one()});
    CHECK(c.ga == std::vector<Rat>{Rat::zero(), Rat::one(), Rat::zero()});
    auto d = delta(2);
    CHECK(d.mu == std::vector<Rat>{Rat::one(), Rat::one()});
    CHECK(d.ga == std::vector<Rat>{Rat::zero(), Rat::zero()});
    CHECK(characteristic(full_mask(2), 2) == d);
}

TEST_CASE("pointwise operations") {
    auto a = IFS::unchecked({Rat(1, 2), Rat::one()}, {Rat(1, 4), Rat::zero()});
    auto b = IFS::unchecked({Rat(3, 4), Rat::zero()}, {Rat::zero(), Rat::one()});
    auto lo = ifs_intersect(a, b);
    CHECK(lo.mu == std::vector<Rat>{Rat(1, 2), Rat::zero()});
    CHECK(lo.ga == std::vector<Rat>{Rat(1, 4), Rat::one()});
    auto hi = ifs_union(a, b);
    CHECK(hi.mu == std::vector<Rat>{Rat(3, 4), Rat::one()});
    CHECK(hi.ga == std::vector<Rat>{Rat::zero(), Rat::zero()});
    CHECK(ifs_leq(lo, a));
    CHECK(ifs_leq(lo, b));
    CHECK(ifs_leq(a, hi));
    CHECK_FALSE(ifs_leq(a, b));
}

TEST_CASE("product uses defaults when nothing factors") {
    // constant table: only element 0 is ever a product
    FiniteMagma m(2, {0, 0, 0, 0});
    auto a = IFS::unchecked({Rat(1, 2), Rat(3, 4)}, {Rat(1, 4), Rat(1, 4)});
    auto p = ifs_product(m, a, a);
    CHECK(p.mu[0] == Rat(3, 4)); // best pair is (1,1)
    CHECK(p.ga[0] == Rat(1, 4));
    CHECK(p.mu[1] == Rat::zero());
    CHECK(p.ga[1] == Rat::one());
}

TEST_CASE("characteristic product mirrors the subset product") {
    auto e2 = examples::e2();
    SubsetMask d = 1u << 3, b = 1u << 1;
    CHECK(ifs_product(e2, characteristic(d, 5), characteristic(b, 5)) ==
          characteristic(subset_product(e2, d, b), 5));
    CHECK(ifs_product(e2, characteristic(b, 5), characteristic(b, 5)) ==
          characteristic(subset_product(e2, b, b), 5));
}

TEST_CASE("idempotent assignments") {
    auto e2 = examples::e2();
    CHECK(is_idempotent(e2, characteristic(1, 5))); // {a} is a two-sided ideal
    CHECK(is_idempotent(examples::t(), delta(5)));
    CHECK_FALSE(is_idempotent(e2, characteristic(1u << 1, 5)));
}

TEST_CASE("left but not right assignment") {
    auto e2 = examples::e2();
    auto a = examples::scenario_qer();
    CHECK(is_if_left_ideal(e2, a));
    CHECK_FALSE(is_if_right_ideal(e2, a));
    CHECK_FALSE(left_ideal_violation(e2, a).has_value());
    auto v = right_ideal_violation(e2, a);
    REQUIRE(v.has_value());
    CHECK(*v == std::pair{1, 3}); // b*d = c drops the membership grade
}

TEST_CASE("symmetric values without the ideal property") {
    auto ex = examples::ex();
    auto a = examples::scenario_c1();
    for (int x = 0; x < 5; ++x)
        for (int y = 0; y < 5; ++y)
            CHECK(point_image(a, ex.at(x, y)) == point_image(a, ex.at(y, x)));
    CHECK_FALSE(is_if_two_sided(ex, a));
}

TEST_CASE("spike assignment on ex is not an ideal") {
    auto ex = examples::ex();
    auto a = examples::scenario_ex_two_sided();
    CHECK_FALSE(is_if_two_sided(ex, a));
    // the membership side is fine; the nonmembership side rises at a*c
    auto lv = left_ideal_violation(ex, a);
    REQUIRE(lv.has_value());
    CHECK(*lv == std::pair{0, 2});
    auto rv = right_ideal_violation(ex, a);
    REQUIRE(rv.has_value());
    CHECK(*rv == std::pair{2, 0});
    // the grades are not even jointly admissible at a
    CHECK(a.mu[0] + a.ga[0] > Rat::one());
}

TEST_CASE("no ideal property for the semiprime scenario values") {
    auto e2 = examples::e2();
    auto a = examples::scenario_cor11();
    CHECK_FALSE(is_if_right_ideal(e2, a));
    CHECK_FALSE(is_if_left_ideal(e2, a));
    CHECK(*right_ideal_violation(e2, a) == std::pair{4, 0});
    CHECK(*left_ideal_violation(e2, a) == std::pair{0, 4});
    CHECK_FALSE(is_if_semiprime(e2, a));
    auto sv = semiprime_violation(e2, a);
    REQUIRE(sv.has_value());
    CHECK(*sv == 1); // b*b = e carries a higher grade than b
}

TEST_CASE("squares separate nothing in the aw scenario") {
    auto ex = examples::ex();
    auto a = examples::scenario_aw();
    for (int x = 0; x < 5; ++x)
        CHECK(point_image(a, x) == point_image(a, ex.at(x, x)));
}

TEST_CASE("product of the fgh pair is not the intersection") {
    auto e2 = examples::e2();
    auto a = examples::scenario_fgh_a();
    auto b = examples::scenario_fgh_b();
    CHECK_FALSE(is_if_two_sided(e2, a));
    CHECK_FALSE(is_if_two_sided(e2, b));
    CHECK(ifs_product(e2, a, b) != ifs_intersect(a, b));
}

TEST_CASE("value grids") {
    auto g3 = ValueGrid::parse("0,1/2,1");
    CHECK(g3.size() == 3);
    CHECK(g3.admissible_pairs().size() == 6);
    CHECK(default_grid().size() == 5);
    CHECK(default_grid().admissible_pairs().size() == 15);
    CHECK(ValueGrid::parse("0,1").admissible_pairs().size() == 3);
    CHECK(ValueGrid::parse("1,1/2,0") == g3);      // sorted
    CHECK(ValueGrid::parse("0,1,1/2,1/2") == g3);  // deduplicated
    CHECK(g3.str() == "0,1/2,1");
    CHECK_THROWS_AS(ValueGrid::parse("0,1/2"), std::invalid_argument);
    CHECK_THROWS_AS(ValueGrid::parse("1/2,1"), std::invalid_argument);
    CHECK_THROWS_AS(ValueGrid::parse("0,1,2"), std::invalid_argument);
    CHECK_THROWS_AS(ValueGrid::parse(""), std::invalid_argument);
}

TEST_CASE("grid enumeration is an odometer over admissible pairs") {
    auto g3 = ValueGrid::parse("0,1/2,1");
    CHECK(grid_count(2, g3) == 36);
    CHECK(grid_count(1, default_grid()) == 15);
    CHECK(grid_count(3, ValueGrid::parse("0,1")) == 27);

    std::vector<IFS> seen;
    grid_enumerate(2, g3, [&](const IFS& a) { seen.push_back(a); });
    REQUIRE(seen.size() == 36);
    CHECK(seen.front().mu == std::vector<Rat>{Rat::zero(), Rat::zero()});
    CHECK(seen.front().ga == std::vector<Rat>{Rat::zero(), Rat::zero()});
    CHECK(seen.back() == delta(2)); // last admissible pair is (1,0)
    // rightmost element varies fastest
    CHECK(seen[1].mu == std::vector<Rat>{Rat::zero(), Rat::zero()});
    CHECK(seen[1].ga == std::vector<Rat>{Rat::zero(), Rat(1, 2)});
    for (const auto& a : seen)
        for (int i = 0; i < 2; ++i) CHECK(a.mu[i] + a.ga[i] <= Rat::one());
}

TEST_CASE("ifs text round trip") {
    auto a = examples::scenario_qer(); // not jointly admissible, still round trips
    CHECK(parse_ifs(format_ifs(a)) == a);
    auto c = characteristic(0b01101, 5);
    CHECK(parse_ifs(format_ifs(c)) == c);
    CHECK_THROWS_AS(parse_ifs("mu: 1/2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_ifs("mu: 1/2\ngamma: 0 0\n"), std::invalid_argument);
}
