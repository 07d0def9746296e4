#include "aglab/examples.hpp"

namespace aglab::examples {

namespace {

const std::vector<std::string> kAbcde = {"a", "b", "c", "d", "e"};

IFS tenths(std::initializer_list<int> mu, std::initializer_list<int> ga) {
    std::vector<Rat> m, g;
    for (int v : mu) m.emplace_back(v, 10);
    for (int v : ga) g.emplace_back(v, 10);
    return IFS::unchecked(std::move(m), std::move(g));
}

} // namespace

const FiniteMagma& ex() {
    static const FiniteMagma m(5,
                               {0, 0, 0, 0, 0,
                                0, 1, 1, 1, 1,
                                0, 1, 3, 4, 2,
                                0, 1, 2, 3, 4,
                                0, 1, 4, 2, 3},
                               kAbcde);
    return m;
}

const FiniteMagma& e2() {
    static const FiniteMagma m(5,
                               {0, 0, 0, 0, 0,
                                0, 4, 4, 2, 4,
                                0, 4, 4, 1, 4,
                                0, 1, 2, 3, 4,
                                0, 4, 4, 4, 4},
                               kAbcde);
    return m;
}

const FiniteMagma& t() {
    static const FiniteMagma m(5,
                               {0, 0, 0, 0, 0,
                                0, 1, 2, 3, 4,
                                0, 4, 1, 2, 3,
                                0, 3, 4, 1, 2,
                                0, 2, 3, 4, 1},
                               kAbcde);
    return m;
}

IFS scenario_ex_two_sided() { return tenths({10, 0, 0, 0, 0}, {3, 4, 2, 2, 2}); }

IFS scenario_aw() { return tenths({6, 2, 9, 9, 9}, {7, 3, 10, 10, 10}); }

IFS scenario_fgh_a() { return tenths({3, 3, 3, 1, 4}, {2, 3, 4, 5, 2}); }

IFS scenario_fgh_b() { return tenths({5, 5, 5, 4, 6}, {3, 4, 5, 6, 3}); }

IFS scenario_qer() { return tenths({8, 5, 4, 3, 6}, {1, 7, 6, 8, 3}); }

IFS scenario_c1() { return tenths({1, 2, 6, 4, 6}, {2, 3, 7, 5, 7}); }

IFS scenario_cor11() { return tenths({2, 2, 2, 1, 3}, {2, 5, 5, 6, 3}); }

} // namespace aglab::examples
