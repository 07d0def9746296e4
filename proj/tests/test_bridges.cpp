#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aglab/enumerate.hpp"
#include "aglab/ifs.hpp"

using namespace aglab;

// Characteristic assignments must mirror crisp subsets exactly: the
// product of two characteristics is the characteristic of the subset
// product, and every ideal predicate agrees with its crisp original.
// Checked over every labeled table of order <= 3, no sampling.

namespace {

std::vector<FiniteMagma> small_magmas() {
    std::vector<FiniteMagma> out;
    for (int n = 1; n <= 3; ++n) {
        SearchConfig cfg;
        cfg.order = n;
        enumerate_ag_groupoids(cfg, [&](const FiniteMagma& m) { out.push_back(m); });
    }
    return out;
}

} // namespace

TEST_CASE("characteristic product bridge") {
    auto magmas = small_magmas();
    REQUIRE(magmas.size() == 112);
    for (const auto& m : magmas) {
        SubsetMask top = full_mask(m.n);
        for (SubsetMask a = 1; a <= top; ++a)
            for (SubsetMask b = 1; b <= top; ++b)
                CHECK(ifs_product(m, characteristic(a, m.n), characteristic(b, m.n)) ==
                      characteristic(subset_product(m, a, b), m.n));
    }
}

TEST_CASE("characteristic predicate bridge") {
    for (const auto& m : small_magmas()) {
        SubsetMask top = full_mask(m.n);
        for (SubsetMask a = 1; a <= top; ++a) {
            IFS c = characteristic(a, m.n);
            CHECK(is_ag_subgroupoid(m, a) == is_if_subgroupoid(m, c));
            CHECK(is_left_ideal(m, a) == is_if_left_ideal(m, c));
            CHECK(is_right_ideal(m, a) == is_if_right_ideal(m, c));
            CHECK(is_two_sided_ideal(m, a) == is_if_two_sided(m, c));
            CHECK(is_generalized_bi_ideal(m, a) == is_if_generalized_bi(m, c));
            CHECK(is_bi_ideal(m, a) == is_if_bi(m, c));
            CHECK(is_one_two_ideal(m, a) == is_if_one_two(m, c));
        }
    }
}

TEST_CASE("characteristic semiprime bridge") {
    for (const auto& m : small_magmas()) {
        SubsetMask top = full_mask(m.n);
        for (SubsetMask a = 1; a <= top; ++a)
            CHECK(is_semiprime_subset(m, a) ==
                  is_if_semiprime(m, characteristic(a, m.n)));
    }
}
