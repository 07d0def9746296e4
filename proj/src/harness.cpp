#include "aglab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "aglab/enumerate.hpp"
#include "aglab/examples.hpp"

namespace aglab {

namespace {

struct IdRow {
    CheckId id;
    const char* name;
};

const IdRow kIdTable[] = {
    {CheckId::thm_aw, "thm_aw"},
    {CheckId::lem_as, "lem_as"},
    {CheckId::lem_fgh, "lem_fgh"},
    {CheckId::lem_idem, "lem_idem"},
    {CheckId::lem_qw, "lem_qw"},
    {CheckId::thm_semilattice, "thm_semilattice"},
    {CheckId::lem_qer, "lem_qer"},
    {CheckId::lem_ll, "lem_ll"},
    {CheckId::cor_dh, "cor_dh"},
    {CheckId::thm_c1, "thm_c1"},
    {CheckId::thm_ki, "thm_ki"},
    {CheckId::thm_right_bi_duo, "thm_right_bi_duo"},
    {CheckId::thm_asdf, "thm_asdf"},
    {CheckId::thm_agband_12_left, "thm_agband_12_left"},
    {CheckId::thm_agband_12_right, "thm_agband_12_right"},
    {CheckId::lem_00, "lem_00"},
    {CheckId::lem_1, "lem_1"},
    {CheckId::cor_11, "cor_11"},
    {CheckId::lem_2, "lem_2"},
    {CheckId::thm_3, "thm_3"},
    {CheckId::thm_right_left_semiprime, "thm_right_left_semiprime"},
    {CheckId::thm_RL, "thm_RL"},
    {CheckId::lem_iff, "lem_iff"},
    {CheckId::thm_twosided_iff_bi, "thm_twosided_iff_bi"},
    {CheckId::thm_twosided_iff_12, "thm_twosided_iff_12"},
    {CheckId::thm_bi_iff_gbi, "thm_bi_iff_gbi"},
    {CheckId::thm_Aa_eq_Aa2, "thm_Aa_eq_Aa2"},
    {CheckId::thm_left_idem, "thm_left_idem"},
    {CheckId::thm_SA_squared, "thm_SA_squared"},
    {CheckId::counterexamples_suite, "counterexamples_suite"},
};

struct Profile {
    bool li = false;
    bool regular = false;
    bool intra = false;
    bool band = false;
    bool duo = false;
};

Profile profile_of(const FiniteMagma& m) {
    Profile p;
    p.li = !left_identities(m).empty();
    p.regular = is_regular(m);
    p.intra = is_intra_regular(m);
    p.band = is_ag_band(m);
    p.duo = is_left_duo(m);
    return p;
}

/*
 * Grade vectors: one level index per element, mu-like semantics. Every
 * ideal condition splits into an independent mu half and a gamma half,
 * and the gamma half is the mu half after reversing the level order
 * (inequalities flip, min/max swap, the product defaults 1 -> top map
 * to 0 -> top). One sweep over all index vectors therefore decides
 * both halves of every quantifier, because a one-sided violator pads
 * to a full assignment (gamma identically 0, or mu identically 0)
 * that meets every hypothesis of these statements.
 */
using Grades = std::vector<std::uint8_t>;

std::vector<Grades> all_grade_vectors(int n, int levels) {
    std::vector<Grades> out;
    Grades v(n, 0);
    for (;;) {
        out.push_back(v);
        int pos = n - 1;
        while (pos >= 0 && v[pos] == levels - 1) v[pos--] = 0;
        if (pos < 0) break;
        ++v[pos];
    }
    return out;
}

std::uint8_t min3(std::uint8_t a, std::uint8_t b, std::uint8_t c) {
    return std::min(a, std::min(b, c));
}

bool g_sub(const FiniteMagma& m, const Grades& v) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (v[m.at(x, y)] < std::min(v[x], v[y])) return false;
    return true;
}

bool g_left(const FiniteMagma& m, const Grades& v) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (v[m.at(x, y)] < v[y]) return false;
    return true;
}

bool g_right(const FiniteMagma& m, const Grades& v) {
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y)
            if (v[m.at(x, y)] < v[x]) return false;
    return true;
}

bool g_two(const FiniteMagma& m, const Grades& v) {
    return g_left(m, v) && g_right(m, v);
}

bool g_gbi(const FiniteMagma& m, const Grades& v) {
    for (int x = 0; x < m.n; ++x)
        for (int w = 0; w < m.n; ++w) {
            int xw = m.at(x, w);
            for (int y = 0; y < m.n; ++y)
                if (v[m.at(xw, y)] < std::min(v[x], v[y])) return false;
        }
    return true;
}

bool g_bi(const FiniteMagma& m, const Grades& v) {
    return g_sub(m, v) && g_gbi(m, v);
}

bool g_one_two(const FiniteMagma& m, const Grades& v) {
    if (!g_sub(m, v)) return false;
    for (int x = 0; x < m.n; ++x)
        for (int w = 0; w < m.n; ++w) {
            int xw = m.at(x, w);
            for (int y = 0; y < m.n; ++y)
                for (int z = 0; z < m.n; ++z)
                    if (v[m.at(xw, m.at(y, z))] < min3(v[x], v[y], v[z]))
                        return false;
        }
    return true;
}

bool g_semiprime(const FiniteMagma& m, const Grades& v) {
    for (int a = 0; a < m.n; ++a)
        if (v[a] < v[m.at(a, a)]) return false;
    return true;
}

bool g_square_eq(const FiniteMagma& m, const Grades& v) {
    for (int a = 0; a < m.n; ++a)
        if (v[a] != v[m.at(a, a)]) return false;
    return true;
}

bool g_pair_eq(const FiniteMagma& m, const Grades& v) {
    for (int a = 0; a < m.n; ++a)
        for (int b = 0; b < m.n; ++b)
            if (v[m.at(a, b)] != v[m.at(b, a)]) return false;
    return true;
}

Grades g_prod(const FiniteMagma& m, const Grades& u, const Grades& v) {
    Grades out(m.n, 0);
    for (int x = 0; x < m.n; ++x)
        for (int y = 0; y < m.n; ++y) {
            int p = m.at(x, y);
            out[p] = std::max(out[p], std::min(u[x], v[y]));
        }
    return out;
}

Grades g_min(const Grades& u, const Grades& v) {
    Grades out(u.size());
    for (size_t i = 0; i < u.size(); ++i) out[i] = std::min(u[i], v[i]);
    return out;
}

Grades g_chi(SubsetMask a, int n, int levels) {
    Grades v(n, 0);
    for (int i = 0; i < n; ++i)
        if (a >> i & 1) v[i] = static_cast<std::uint8_t>(levels - 1);
    return v;
}

IFS grades_to_ifs(const Grades& v, const ValueGrid& grid) {
    std::vector<Rat> mu, ga(v.size(), Rat::zero());
    mu.reserve(v.size());
    for (auto i : v) mu.push_back(grid.levels[i]);
    return make_ifs(std::move(mu), std::move(ga));
}

struct Eval {
    bool eligible = false;
    std::uint64_t instances = 0;
    std::optional<CheckCounterexample> cx;
    std::int64_t elapsed_us = 0;
};

// Builds the counterexample payload for an index-vector violation.
CheckCounterexample make_cx(const FiniteMagma& m, const ValueGrid& grid,
                            std::vector<const Grades*> vecs, std::string detail) {
    CheckCounterexample cx{m, {}, std::move(detail)};
    for (const Grades* v : vecs) cx.sets.push_back(grades_to_ifs(*v, grid));
    return cx;
}

std::string pair_text(const FiniteMagma& m, int x, int y) {
    return "(" + m.label(x) + "," + m.label(y) + ")";
}

/*
 * Per-magma check bodies. Each applies its structural filter, then
 * decides the statement over the grid; `out.cx` holds the first
 * violation in scan order.
 */
void eval_thm_aw(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.li) return;
    out.eligible = true;
    bool hyp = true;
    for (const auto& v : vecs) {
        ++out.instances;
        if (!g_square_eq(m, v)) {
            hyp = false;
            break;
        }
    }
    if (hyp && !p.regular) {
        int bad = 0;
        while (regular_witness(m, bad)) ++bad;
        out.cx = make_cx(m, grid, {},
                         "every grid assignment matches its squares, yet element " +
                             m.label(bad) + " has no witness x with (ax)a = a");
    }
}

void eval_lem_as(const FiniteMagma& m, const Profile&,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    out.eligible = true;
    Grades dvec(m.n, static_cast<std::uint8_t>(grid.size() - 1));
    auto leq = [](const Grades& a, const Grades& b) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    for (const auto& v : vecs) {
        ++out.instances;
        if (g_sub(m, v) != leq(g_prod(m, v, v), v)) {
            out.cx = make_cx(m, grid, {&v},
                             "subgroupoid predicate disagrees with A*A <= A");
            return;
        }
        if (g_left(m, v) != leq(g_prod(m, dvec, v), v)) {
            out.cx = make_cx(m, grid, {&v},
                             "left-ideal predicate disagrees with S*A <= A");
            return;
        }
        if (g_right(m, v) != leq(g_prod(m, v, dvec), v)) {
            out.cx = make_cx(m, grid, {&v},
                             "right-ideal predicate disagrees with A*S <= A");
            return;
        }
    }
}

void eval_lem_fgh(const FiniteMagma& m, const Profile& p,
                  const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.regular) return;
    out.eligible = true;
    std::vector<const Grades*> two;
    for (const auto& v : vecs)
        if (g_two(m, v)) two.push_back(&v);
    for (const Grades* a : two)
        for (const Grades* b : two) {
            ++out.instances;
            if (g_prod(m, *a, *b) != g_min(*a, *b)) {
                out.cx = make_cx(m, grid, {a, b},
                                 "product of two two-sided assignments is not "
                                 "their intersection");
                return;
            }
        }
}

void eval_lem_idem(const FiniteMagma& m, const Profile& p,
                   const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.regular) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!g_two(m, v)) continue;
        ++out.instances;
        if (g_prod(m, v, v) != v) {
            out.cx = make_cx(m, grid, {&v}, "two-sided assignment is not idempotent");
            return;
        }
    }
}

void eval_lem_qw(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.regular) return;
    out.eligible = true;
    Grades dvec(m.n, static_cast<std::uint8_t>(grid.size() - 1));
    for (const auto& v : vecs) {
        if (!g_two(m, v)) continue;
        ++out.instances;
        if (g_prod(m, v, dvec) != v || g_prod(m, dvec, v) != v) {
            out.cx = make_cx(m, grid, {&v},
                             "composing a two-sided assignment with the whole set "
                             "does not reproduce it");
            return;
        }
    }
}

void eval_thm_semilattice(const FiniteMagma& m, const Profile& p,
                          const std::vector<Grades>& vecs, const ValueGrid& grid,
                          Eval& out) {
    if (!p.regular) return;
    out.eligible = true;
    Grades dvec(m.n, static_cast<std::uint8_t>(grid.size() - 1));
    std::vector<Grades> two;
    for (const auto& v : vecs)
        if (g_two(m, v)) two.push_back(v); // ascending: vecs is lex-sorted
    int k = static_cast<int>(two.size());

    for (const auto& v : two) {
        ++out.instances;
        if (g_prod(m, v, v) != v) {
            out.cx = make_cx(m, grid, {&v}, "member is not idempotent under the product");
            return;
        }
        if (g_prod(m, v, dvec) != v || g_prod(m, dvec, v) != v) {
            out.cx = make_cx(m, grid, {&v}, "whole set is not an identity for the member");
            return;
        }
    }

    auto index_of = [&](const Grades& v) -> int {
        auto it = std::lower_bound(two.begin(), two.end(), v);
        if (it == two.end() || *it != v) return -1;
        return static_cast<int>(it - two.begin());
    };
    std::vector<int> ptab(static_cast<size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            ++out.instances;
            Grades pij = g_prod(m, two[i], two[j]);
            int idx = index_of(pij);
            if (idx < 0) {
                out.cx = make_cx(m, grid, {&two[i], &two[j]},
                                 "product of two members leaves the set");
                return;
            }
            if (pij != g_prod(m, two[j], two[i])) {
                out.cx = make_cx(m, grid, {&two[i], &two[j]}, "product is not commutative");
                return;
            }
            ptab[i * k + j] = idx;
        }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l) {
                ++out.instances;
                if (ptab[ptab[i * k + j] * k + l] != ptab[i * k + ptab[j * k + l]]) {
                    out.cx = make_cx(m, grid, {&two[i], &two[j], &two[l]},
                                     "product is not associative");
                    return;
                }
            }
}

void eval_lem_qer(const FiniteMagma& m, const Profile& p,
                  const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.li) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!g_right(m, v)) continue;
        ++out.instances;
        if (!g_left(m, v)) {
            out.cx = make_cx(m, grid, {&v}, "right-ideal assignment is not a left ideal");
            return;
        }
    }
}

void eval_lem_ll(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.regular && p.duo)) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!g_left(m, v)) continue;
        ++out.instances;
        if (!g_right(m, v)) {
            out.cx = make_cx(m, grid, {&v}, "left-ideal assignment is not a right ideal");
            return;
        }
    }
}

void eval_cor_dh(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.regular && p.duo)) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!g_left(m, v)) continue;
        ++out.instances;
        if (!g_two(m, v)) {
            out.cx = make_cx(m, grid, {&v}, "left-ideal assignment is not two-sided");
            return;
        }
    }
}

void eval_thm_c1(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.regular && p.li)) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!(g_two(m, v) || g_right(m, v))) continue;
        ++out.instances;
        if (!g_pair_eq(m, v)) {
            int bx = 0, by = 0;
            for (int a = 0; a < m.n; ++a)
                for (int b = 0; b < m.n; ++b)
                    if (v[m.at(a, b)] != v[m.at(b, a)]) {
                        bx = a;
                        by = b;
                        goto found;
                    }
        found:
            out.cx = make_cx(m, grid, {&v},
                             "assignment separates xy from yx at " + pair_text(m, bx, by));
            return;
        }
    }
}

void eval_iff_family(const FiniteMagma& m, const ValueGrid& grid,
                     const std::vector<Grades>& vecs,
                     bool (*lhs)(const FiniteMagma&, const Grades&),
                     bool (*rhs)(const FiniteMagma&, const Grades&),
                     const char* what, Eval& out) {
    for (const auto& v : vecs) {
        ++out.instances;
        if (lhs(m, v) != rhs(m, v)) {
            out.cx = make_cx(m, grid, {&v}, what);
            return;
        }
    }
}

void eval_thm_ki(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.regular && p.li)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_left, g_bi,
                    "left-ideal and bi-ideal predicates disagree", out);
    if (out.cx) return;
    eval_iff_family(m, grid, vecs, g_left, g_gbi,
                    "left-ideal and generalized-bi predicates disagree", out);
}

void eval_thm_right_bi_duo(const FiniteMagma& m, const Profile& p,
                           const std::vector<Grades>& vecs, const ValueGrid& grid,
                           Eval& out) {
    if (!(p.regular && p.li && p.duo)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_right, g_bi,
                    "right-ideal and bi-ideal predicates disagree", out);
    if (out.cx) return;
    eval_iff_family(m, grid, vecs, g_right, g_gbi,
                    "right-ideal and generalized-bi predicates disagree", out);
}

void eval_thm_asdf(const FiniteMagma& m, const Profile& p,
                   const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.regular && p.li)) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (g_left(m, v)) {
            ++out.instances;
            if (!g_one_two(m, v)) {
                out.cx = make_cx(m, grid, {&v}, "left-ideal assignment is not a (1,2)-ideal");
                return;
            }
        }
        if (p.duo && g_right(m, v)) {
            ++out.instances;
            if (!g_one_two(m, v)) {
                out.cx = make_cx(m, grid, {&v},
                                 "right-ideal assignment is not a (1,2)-ideal");
                return;
            }
        }
    }
}

void eval_agband_12(const FiniteMagma& m, const Profile& p,
                    const std::vector<Grades>& vecs, const ValueGrid& grid, bool left,
                    Eval& out) {
    if (!(p.regular && p.band)) return;
    out.eligible = true;
    for (const auto& v : vecs) {
        if (!g_one_two(m, v)) continue;
        ++out.instances;
        bool ok = left ? g_left(m, v) : g_right(m, v);
        if (!ok) {
            out.cx = make_cx(m, grid, {&v},
                             left ? "(1,2)-ideal assignment is not a left ideal"
                                  : "(1,2)-ideal assignment is not a right ideal");
            return;
        }
    }
}

void eval_lem_00(const FiniteMagma& m, const Profile&, const std::vector<Grades>&,
                 const ValueGrid& grid, Eval& out) {
    out.eligible = true;
    int L = grid.size();
    SubsetMask top = full_mask(m.n);
    struct Kind {
        const char* name;
        bool (*crisp)(const FiniteMagma&, SubsetMask);
        bool (*fuzzy)(const FiniteMagma&, const Grades&);
    };
    const Kind kinds[] = {
        {"subgroupoid", is_ag_subgroupoid, g_sub},
        {"left", is_left_ideal, g_left},
        {"right", is_right_ideal, g_right},
        {"two-sided", is_two_sided_ideal, g_two},
        {"generalized-bi", is_generalized_bi_ideal, g_gbi},
        {"bi", is_bi_ideal, g_bi},
        {"(1,2)", is_one_two_ideal, g_one_two},
    };
    for (SubsetMask a = 1; a <= top; ++a) {
        Grades ca = g_chi(a, m.n, L);
        for (const auto& kind : kinds) {
            ++out.instances;
            if (kind.crisp(m, a) != kind.fuzzy(m, ca)) {
                out.cx = make_cx(m, grid, {&ca},
                                 std::string("crisp and characteristic verdicts differ "
                                             "for the ") +
                                     kind.name + " predicate on " + format_subset(m, a));
                return;
            }
        }
        for (SubsetMask b = 1; b <= top; ++b) {
            ++out.instances;
            Grades cb = g_chi(b, m.n, L);
            if (g_prod(m, ca, cb) != g_chi(subset_product(m, a, b), m.n, L)) {
                out.cx = make_cx(m, grid, {&ca, &cb},
                                 "characteristic product differs from the product "
                                 "subset's characteristic for " +
                                     format_subset(m, a) + "*" + format_subset(m, b));
                return;
            }
        }
    }
}

void eval_lem_1(const FiniteMagma& m, const Profile&, const std::vector<Grades>&,
                const ValueGrid& grid, Eval& out) {
    out.eligible = true;
    int L = grid.size();
    SubsetMask top = full_mask(m.n);
    for (SubsetMask a = 1; a <= top; ++a) {
        ++out.instances;
        Grades ca = g_chi(a, m.n, L);
        if (is_semiprime_subset(m, a) != g_semiprime(m, ca)) {
            out.cx = make_cx(m, grid, {&ca},
                             "crisp and characteristic semiprime verdicts differ on " +
                                 format_subset(m, a));
            return;
        }
    }
}

void eval_cor_11(const FiniteMagma& m, const Profile&,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    out.eligible = true;
    struct Kind {
        const char* name;
        IdealKind crisp;
        bool (*fuzzy)(const FiniteMagma&, const Grades&);
    };
    const Kind kinds[] = {
        {"right", IdealKind::Right, g_right},
        {"left", IdealKind::Left, g_left},
        {"two-sided", IdealKind::TwoSided, g_two},
    };
    for (const auto& kind : kinds) {
        bool fuzzy_all = true;
        for (const auto& v : vecs) {
            ++out.instances;
            if (kind.fuzzy(m, v) && !g_semiprime(m, v)) {
                fuzzy_all = false;
                break;
            }
        }
        if (!fuzzy_all) continue;
        for (SubsetMask a : all_ideals(m, kind.crisp)) {
            if (!is_semiprime_subset(m, a)) {
                out.cx = make_cx(m, grid, {},
                                 std::string("every grid ") + kind.name +
                                     " ideal is semiprime, yet crisp " +
                                     format_subset(m, a) + " is not");
                return;
            }
        }
    }
}

void eval_lem_2(const FiniteMagma& m, const Profile& p,
                const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.intra && p.li)) return;
    out.eligible = true;
    struct Kind {
        const char* name;
        bool (*fuzzy)(const FiniteMagma&, const Grades&);
    };
    const Kind kinds[] = {{"right", g_right}, {"left", g_left}, {"two-sided", g_two}};
    for (const auto& v : vecs)
        for (const auto& kind : kinds) {
            if (!kind.fuzzy(m, v)) continue;
            ++out.instances;
            if (!g_semiprime(m, v)) {
                out.cx = make_cx(m, grid, {&v},
                                 std::string(kind.name) +
                                     "-ideal assignment is not semiprime");
                return;
            }
        }
}

// Is every grid assignment of the given kind semiprime? On failure
// writes the first offender.
bool all_kind_semiprime(const FiniteMagma& m, const std::vector<Grades>& vecs,
                        bool (*kind)(const FiniteMagma&, const Grades&),
                        std::uint64_t& instances, const Grades** offender) {
    for (const auto& v : vecs) {
        ++instances;
        if (kind(m, v) && !g_semiprime(m, v)) {
            if (offender) *offender = &v;
            return false;
        }
    }
    return true;
}

std::string intra_missing_text(const FiniteMagma& m) {
    int bad = 0;
    while (intra_regular_witness(m, bad)) ++bad;
    return "element " + m.label(bad) + " has no witnesses (x,y) with (x a^2)y = a";
}

void eval_thm_3(const FiniteMagma& m, const Profile& p,
                const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.li) return;
    out.eligible = true;
    const Grades* offender = nullptr;
    bool ii = all_kind_semiprime(m, vecs, g_right, out.instances, &offender) &&
              all_kind_semiprime(m, vecs, g_left, out.instances, &offender) &&
              all_kind_semiprime(m, vecs, g_two, out.instances, &offender);
    if (p.intra == ii) return;
    if (p.intra)
        out.cx = make_cx(m, grid, {offender},
                         "intra-regular, yet an ideal assignment is not semiprime");
    else
        out.cx = make_cx(m, grid, {},
                         "every grid ideal assignment is semiprime although " +
                             intra_missing_text(m));
}

void eval_thm_rls(const FiniteMagma& m, const Profile& p,
                  const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.li) return;
    out.eligible = true;
    const Grades* off_r = nullptr;
    const Grades* off_l = nullptr;
    bool ii = all_kind_semiprime(m, vecs, g_right, out.instances, &off_r);
    bool iii = all_kind_semiprime(m, vecs, g_left, out.instances, &off_l);
    if (p.intra == ii && ii == iii) return;
    const Grades* off = !ii ? off_r : off_l;
    std::vector<const Grades*> sets;
    if (off && (p.intra || (ii != iii))) sets.push_back(off);
    std::ostringstream os;
    os << "sides disagree: intra-regular=" << (p.intra ? "yes" : "no")
       << ", right-ideals-semiprime=" << (ii ? "yes" : "no")
       << ", left-ideals-semiprime=" << (iii ? "yes" : "no");
    out.cx = make_cx(m, grid, sets, os.str());
}

void eval_thm_RL(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!p.li) return;
    out.eligible = true;

    auto rights_crisp = all_ideals(m, IdealKind::Right);
    auto lefts_crisp = all_ideals(m, IdealKind::Left);
    bool ii = true;
    for (SubsetMask r : rights_crisp) {
        if (!ii) break;
        for (SubsetMask l : lefts_crisp) {
            ++out.instances;
            if (subset_product(m, r, l) != (r & l)) {
                ii = false;
                break;
            }
        }
    }
    for (SubsetMask r : rights_crisp) {
        ++out.instances;
        if (!is_semiprime_subset(m, r)) {
            ii = false;
            break;
        }
    }

    std::vector<const Grades*> fr, fl;
    for (const auto& v : vecs) {
        if (g_right(m, v)) fr.push_back(&v);
        if (g_left(m, v)) fl.push_back(&v);
    }
    bool iii = true;
    const Grades* off_a = nullptr;
    const Grades* off_b = nullptr;
    for (const Grades* a : fr) {
        if (!iii) break;
        for (const Grades* b : fl) {
            ++out.instances;
            if (g_prod(m, *a, *b) != g_min(*a, *b)) {
                iii = false;
                off_a = a;
                off_b = b;
                break;
            }
        }
    }
    if (iii)
        iii = all_kind_semiprime(m, vecs, g_right, out.instances, &off_a);

    if (p.intra == ii && ii == iii) return;
    std::vector<const Grades*> sets;
    if (off_a) sets.push_back(off_a);
    if (off_b) sets.push_back(off_b);
    std::ostringstream os;
    os << "sides disagree: intra-regular=" << (p.intra ? "yes" : "no")
       << ", crisp-RL=" << (ii ? "yes" : "no") << ", grid-RL=" << (iii ? "yes" : "no");
    out.cx = make_cx(m, grid, sets, os.str());
}

void eval_lem_iff(const FiniteMagma& m, const Profile& p,
                  const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.intra && p.li)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_left, g_right,
                    "left-ideal and right-ideal predicates disagree", out);
}

void eval_two_bi(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.intra && p.li)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_two, g_bi,
                    "two-sided and bi-ideal predicates disagree", out);
}

void eval_two_12(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.intra && p.li)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_two, g_one_two,
                    "two-sided and (1,2)-ideal predicates disagree", out);
}

void eval_bi_gbi(const FiniteMagma& m, const Profile& p,
                 const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    if (!(p.intra && p.li)) return;
    out.eligible = true;
    eval_iff_family(m, grid, vecs, g_bi, g_gbi,
                    "bi-ideal and generalized-bi predicates disagree", out);
}

// Shared shape of the three "intra-regular iff every ideal ..."
// equivalences: the right side quantifies a property over the grid
// assignments of all three ideal kinds.
void eval_intra_equiv(const FiniteMagma& m, const Profile& p,
                      const std::vector<Grades>& vecs, const ValueGrid& grid,
                      const std::function<bool(const Grades&)>& property,
                      const char* property_text, Eval& out) {
    if (!p.li) return;
    out.eligible = true;
    bool (*kinds[])(const FiniteMagma&, const Grades&) = {g_right, g_left, g_two};
    bool ii = true;
    const Grades* offender = nullptr;
    for (auto kind : kinds) {
        for (const auto& v : vecs) {
            ++out.instances;
            if (kind(m, v) && !property(v)) {
                ii = false;
                offender = &v;
                break;
            }
        }
        if (!ii) break;
    }
    if (p.intra == ii) return;
    if (p.intra)
        out.cx = make_cx(m, grid, {offender},
                         std::string("intra-regular, yet an ideal assignment fails: ") +
                             property_text);
    else
        out.cx = make_cx(m, grid, {},
                         std::string("every grid ideal assignment satisfies '") +
                             property_text + "' although " + intra_missing_text(m));
}

void eval_Aa(const FiniteMagma& m, const Profile& p, const std::vector<Grades>& vecs,
             const ValueGrid& grid, Eval& out) {
    eval_intra_equiv(
        m, p, vecs, grid, [&](const Grades& v) { return g_square_eq(m, v); },
        "grades agree on every element and its square", out);
}

void eval_left_idem(const FiniteMagma& m, const Profile& p,
                    const std::vector<Grades>& vecs, const ValueGrid& grid, Eval& out) {
    eval_intra_equiv(
        m, p, vecs, grid, [&](const Grades& v) { return g_prod(m, v, v) == v; },
        "assignment is idempotent under the product", out);
}

void eval_SA2(const FiniteMagma& m, const Profile& p, const std::vector<Grades>& vecs,
              const ValueGrid& grid, Eval& out) {
    Grades dvec(m.n, static_cast<std::uint8_t>(grid.size() - 1));
    eval_intra_equiv(
        m, p, vecs, grid,
        [&](const Grades& v) {
            Grades sa = g_prod(m, dvec, v);
            return g_prod(m, sa, sa) == v;
        },
        "assignment equals the square of its product with the whole set", out);
}

Eval eval_on(CheckId id, const FiniteMagma& m, const ValueGrid& grid) {
    auto t0 = std::chrono::steady_clock::now();
    Eval out;
    Profile p = profile_of(m);
    std::vector<Grades> vecs = all_grade_vectors(m.n, grid.size());
    switch (id) {
        case CheckId::thm_aw: eval_thm_aw(m, p, vecs, grid, out); break;
        case CheckId::lem_as: eval_lem_as(m, p, vecs, grid, out); break;
        case CheckId::lem_fgh: eval_lem_fgh(m, p, vecs, grid, out); break;
        case CheckId::lem_idem: eval_lem_idem(m, p, vecs, grid, out); break;
        case CheckId::lem_qw: eval_lem_qw(m, p, vecs, grid, out); break;
        case CheckId::thm_semilattice: eval_thm_semilattice(m, p, vecs, grid, out); break;
        case CheckId::lem_qer: eval_lem_qer(m, p, vecs, grid, out); break;
        case CheckId::lem_ll: eval_lem_ll(m, p, vecs, grid, out); break;
        case CheckId::cor_dh: eval_cor_dh(m, p, vecs, grid, out); break;
        case CheckId::thm_c1: eval_thm_c1(m, p, vecs, grid, out); break;
        case CheckId::thm_ki: eval_thm_ki(m, p, vecs, grid, out); break;
        case CheckId::thm_right_bi_duo:
            eval_thm_right_bi_duo(m, p, vecs, grid, out);
            break;
        case CheckId::thm_asdf: eval_thm_asdf(m, p, vecs, grid, out); break;
        case CheckId::thm_agband_12_left:
            eval_agband_12(m, p, vecs, grid, true, out);
            break;
        case CheckId::thm_agband_12_right:
            eval_agband_12(m, p, vecs, grid, false, out);
            break;
        case CheckId::lem_00: eval_lem_00(m, p, vecs, grid, out); break;
        case CheckId::lem_1: eval_lem_1(m, p, vecs, grid, out); break;
        case CheckId::cor_11: eval_cor_11(m, p, vecs, grid, out); break;
        case CheckId::lem_2: eval_lem_2(m, p, vecs, grid, out); break;
        case CheckId::thm_3: eval_thm_3(m, p, vecs, grid, out); break;
        case CheckId::thm_right_left_semiprime:
            eval_thm_rls(m, p, vecs, grid, out);
            break;
        case CheckId::thm_RL: eval_thm_RL(m, p, vecs, grid, out); break;
        case CheckId::lem_iff: eval_lem_iff(m, p, vecs, grid, out); break;
        case CheckId::thm_twosided_iff_bi: eval_two_bi(m, p, vecs, grid, out); break;
        case CheckId::thm_twosided_iff_12: eval_two_12(m, p, vecs, grid, out); break;
        case CheckId::thm_bi_iff_gbi: eval_bi_gbi(m, p, vecs, grid, out); break;
        case CheckId::thm_Aa_eq_Aa2: eval_Aa(m, p, vecs, grid, out); break;
        case CheckId::thm_left_idem: eval_left_idem(m, p, vecs, grid, out); break;
        case CheckId::thm_SA_squared: eval_SA2(m, p, vecs, grid, out); break;
        case CheckId::counterexamples_suite:
            throw std::invalid_argument("the replay suite does not take a magma stream");
    }
    out.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return out;
}

CheckResult merge_evals(const std::vector<Eval>& evals) {
    CheckResult r;
    bool any_eligible = false;
    std::int64_t us = 0;
    for (const auto& e : evals) {
        any_eligible = any_eligible || e.eligible;
        r.instances_checked += e.instances;
        us += e.elapsed_us;
        if (!r.counterexample && e.cx) r.counterexample = e.cx;
    }
    r.elapsed_ms = us / 1000;
    if (!any_eligible)
        r.verdict = Verdict::Skipped;
    else
        r.verdict = r.counterexample ? Verdict::Fail : Verdict::Pass;
    return r;
}

} // namespace

const std::vector<CheckId>& all_check_ids() {
    static const std::vector<CheckId> ids = [] {
        std::vector<CheckId> v;
        for (const auto& row : kIdTable) v.push_back(row.id);
        return v;
    }();
    return ids;
}

std::string_view check_id_name(CheckId id) {
    for (const auto& row : kIdTable)
        if (row.id == id) return row.name;
    return "?";
}

std::optional<CheckId> check_id_from_name(std::string_view name) {
    for (const auto& row : kIdTable)
        if (name == row.name) return row.id;
    return std::nullopt;
}

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Skipped: return "skipped";
    }
    return "?";
}

bool TheoremReport::all_pass() const {
    for (const auto& [id, r] : entries)
        if (r.verdict == Verdict::Fail) return false;
    return true;
}

bool is_equivalence_check(CheckId id) {
    switch (id) {
        case CheckId::thm_3:
        case CheckId::thm_right_left_semiprime:
        case CheckId::thm_RL:
        case CheckId::thm_Aa_eq_Aa2:
        case CheckId::thm_left_idem:
        case CheckId::thm_SA_squared:
            return true;
        default:
            return false;
    }
}

CheckResult run_check(CheckId id, const std::vector<FiniteMagma>& magmas,
                      const ValueGrid& grid) {
    if (id == CheckId::counterexamples_suite) return reproduce_counterexamples();
    std::vector<Eval> evals;
    evals.reserve(magmas.size());
    for (const auto& m : magmas) evals.push_back(eval_on(id, m, grid));
    return merge_evals(evals);
}

CheckResult check_universal(CheckId id, const std::vector<FiniteMagma>& magmas,
                            const ValueGrid& grid) {
    if (id == CheckId::counterexamples_suite || is_equivalence_check(id))
        throw std::invalid_argument("not a universally-quantified check: " +
                                    std::string(check_id_name(id)));
    return run_check(id, magmas, grid);
}

CheckResult check_equivalence(CheckId id, const std::vector<FiniteMagma>& magmas,
                              const ValueGrid& grid) {
    if (!is_equivalence_check(id))
        throw std::invalid_argument("not an equivalence check: " +
                                    std::string(check_id_name(id)));
    return run_check(id, magmas, grid);
}

const std::vector<std::string>& scenario_names() {
    static const std::vector<std::string> names = {"aw", "fgh", "qer", "c1", "cor11"};
    return names;
}

std::vector<ScenarioResult> run_scenarios() {
    std::vector<ScenarioResult> out;

    {
        ScenarioResult s{.name = "aw", .magma_name = "ex", .magma = examples::ex()};
        IFS a = examples::scenario_aw();
        s.sets.push_back(a);
        int found = -1;
        for (int x = 0; x < s.magma.n && found < 0; ++x)
            if (point_image(a, x) != point_image(a, s.magma.at(x, x))) found = x;
        s.note = found >= 0 ? "separating element: " + s.magma.label(found)
                            : "no element's grades differ from its square's grades";
        s.claims.push_back({"some element separates the assignment from its square",
                            found >= 0});
        out.push_back(std::move(s));
    }

    {
        ScenarioResult s{.name = "fgh", .magma_name = "e2", .magma = examples::e2()};
        IFS a = examples::scenario_fgh_a();
        IFS b = examples::scenario_fgh_b();
        s.sets = {a, b};
        s.claims.push_back(
            {"first assignment is a fuzzy two-sided ideal", is_if_two_sided(s.magma, a)});
        s.claims.push_back(
            {"second assignment is a fuzzy two-sided ideal", is_if_two_sided(s.magma, b)});
        s.claims.push_back({"their composition equals their intersection",
                            ifs_product(s.magma, a, b) == ifs_intersect(a, b)});
        s.claims.push_back({"the table is not regular", !is_regular(s.magma)});
        out.push_back(std::move(s));
    }

    {
        ScenarioResult s{.name = "qer", .magma_name = "e2", .magma = examples::e2()};
        IFS a = examples::scenario_qer();
        s.sets.push_back(a);
        auto rv = right_ideal_violation(s.magma, a);
        s.claims.push_back({"assignment is a fuzzy left ideal", is_if_left_ideal(s.magma, a)});
        s.claims.push_back({"assignment is not a fuzzy right ideal", rv.has_value()});
        s.claims.push_back({"first right-ideal violation is the pair (b,d)",
                            rv.has_value() && *rv == std::pair{1, 3}});
        if (rv) s.note = "right-ideal violation at " + pair_text(s.magma, rv->first, rv->second);
        out.push_back(std::move(s));
    }

    {
        ScenarioResult s{.name = "c1", .magma_name = "ex", .magma = examples::ex()};
        IFS a = examples::scenario_c1();
        s.sets.push_back(a);
        bool sym = true;
        for (int x = 0; x < s.magma.n && sym; ++x)
            for (int y = 0; y < s.magma.n && sym; ++y)
                sym = point_image(a, s.magma.at(x, y)) == point_image(a, s.magma.at(y, x));
        s.claims.push_back({"grades agree on xy and yx for every pair", sym});
        s.claims.push_back(
            {"assignment is not a fuzzy two-sided ideal", !is_if_two_sided(s.magma, a)});
        out.push_back(std::move(s));
    }

    {
        ScenarioResult s{.name = "cor11", .magma_name = "e2", .magma = examples::e2()};
        IFS a = examples::scenario_cor11();
        s.sets.push_back(a);
        int c = 2, csq = s.magma.at(c, c);
        s.claims.push_back({"assignment is a fuzzy right ideal", is_if_right_ideal(s.magma, a)});
        s.claims.push_back({"assignment is a fuzzy left ideal", is_if_left_ideal(s.magma, a)});
        s.claims.push_back({"assignment is a fuzzy two-sided ideal", is_if_two_sided(s.magma, a)});
        s.claims.push_back({"assignment is not fuzzy semiprime", !is_if_semiprime(s.magma, a)});
        s.claims.push_back({"element c fails the semiprime inequalities against c*c",
                            a.mu[c] < a.mu[csq] && a.ga[c] > a.ga[csq]});
        out.push_back(std::move(s));
    }

    for (auto& s : out) {
        s.pass = true;
        for (const auto& c : s.claims) s.pass = s.pass && c.holds;
    }
    return out;
}

CheckResult reproduce_counterexamples() {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    auto scenarios = run_scenarios();
    for (const auto& s : scenarios) {
        r.instances_checked += s.claims.size();
        if (!s.pass && !r.counterexample) {
            std::string bad;
            for (const auto& c : s.claims)
                if (!c.holds) {
                    bad = c.text;
                    break;
                }
            r.counterexample = CheckCounterexample{
                s.magma, s.sets,
                "scenario " + s.name + ": claim '" + bad + "' does not hold"};
        }
    }
    r.verdict = r.counterexample ? Verdict::Fail : Verdict::Pass;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

std::vector<FiniteMagma> standard_stream(int order_max, int workers) {
    std::vector<FiniteMagma> magmas;
    for (int n = 1; n <= order_max; ++n) {
        SearchConfig cfg;
        cfg.order = n;
        cfg.up_to_isomorphism = true;
        cfg.worker_count = workers;
        enumerate_ag_groupoids(cfg, [&](const FiniteMagma& m) { magmas.push_back(m); });
    }
    magmas.push_back(examples::ex());
    magmas.push_back(examples::e2());
    magmas.push_back(examples::t());
    return magmas;
}

TheoremReport run_all(int order_max, const ValueGrid& grid, int workers) {
    auto magmas = standard_stream(order_max, workers);
    const auto& ids = all_check_ids();

    // One job per (check, magma); the suite runs as its own job.
    struct Job {
        size_t check;
        size_t magma; // == magmas.size() marks the suite job
    };
    std::vector<Job> jobs;
    std::vector<std::vector<Eval>> evals(ids.size(), std::vector<Eval>(magmas.size()));
    CheckResult suite;
    for (size_t c = 0; c < ids.size(); ++c) {
        if (ids[c] == CheckId::counterexamples_suite)
            jobs.push_back({c, magmas.size()});
        else
            for (size_t g = 0; g < magmas.size(); ++g) jobs.push_back({c, g});
    }

    auto run_job = [&](const Job& j) {
        if (j.magma == magmas.size())
            suite = reproduce_counterexamples();
        else
            evals[j.check][j.magma] = eval_on(ids[j.check], magmas[j.magma], grid);
    };

    int w = std::max(1, workers);
    if (w == 1) {
        for (const auto& j : jobs) run_job(j);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&]() {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= jobs.size()) break;
                run_job(jobs[i]);
            }
        };
        std::vector<std::thread> pool;
        for (int i = 0; i < w; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    TheoremReport report;
    for (size_t c = 0; c < ids.size(); ++c) {
        if (ids[c] == CheckId::counterexamples_suite)
            report.entries.emplace_back(ids[c], suite);
        else
            report.entries.emplace_back(ids[c], merge_evals(evals[c]));
    }
    return report;
}

} // namespace aglab
