#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aglab/magma.hpp"
#include "aglab/rational.hpp"

namespace aglab {

/*
 * Intuitionistic fuzzy set over a carrier of size n: a membership grade
 * mu(x) and a nonmembership grade ga(x) per element, both in [0,1] with
 * mu(x) + ga(x) <= 1 pointwise. make_ifs enforces the constraint;
 * IFS::unchecked skips it so that deliberately malformed assignments can
 * still be replayed through the predicates.
 */
struct IFS {
    std::vector<Rat> mu;
    std::vector<Rat> ga;

    int n() const { return static_cast<int>(mu.size()); }
    bool operator==(const IFS&) const = default;

    static IFS unchecked(std::vector<Rat> mu, std::vector<Rat> ga);
};

// Validated constructor; throws std::invalid_argument naming the first
// element where mu + ga > 1 or a grade leaves [0,1].
IFS make_ifs(std::vector<Rat> mu, std::vector<Rat> ga);

// mu = 1 on a, 0 elsewhere; ga = 0 on a, 1 elsewhere.
IFS characteristic(SubsetMask a, int n);

// The whole-carrier set: mu identically 1, ga identically 0.
IFS delta(int n);

IFS ifs_intersect(const IFS& a, const IFS& b); // min mu, max ga
IFS ifs_union(const IFS& a, const IFS& b);     // max mu, min ga
bool ifs_leq(const IFS& a, const IFS& b);      // mu <=, ga >= pointwise

// Sup-min composition: mu(a) = max over factorizations a = b*c of
// min(mu_A(b), mu_B(c)), defaulting to 0 when none exist; ga dually
// with min/max and default 1.
IFS ifs_product(const FiniteMagma& m, const IFS& a, const IFS& b);

bool is_if_subgroupoid(const FiniteMagma& m, const IFS& a);
bool is_if_left_ideal(const FiniteMagma& m, const IFS& a);
bool is_if_right_ideal(const FiniteMagma& m, const IFS& a);
bool is_if_two_sided(const FiniteMagma& m, const IFS& a);
bool is_if_generalized_bi(const FiniteMagma& m, const IFS& a);
bool is_if_bi(const FiniteMagma& m, const IFS& a);
bool is_if_one_two(const FiniteMagma& m, const IFS& a);

// mu(x) >= mu(x^2) and ga(x) <= ga(x^2) for all x.
bool is_if_semiprime(const FiniteMagma& m, const IFS& a);

// A composed with itself equals A.
bool is_idempotent(const FiniteMagma& m, const IFS& a);

// The pair (mu(x), ga(x)).
std::pair<Rat, Rat> point_image(const IFS& a, int x);

// First (x,y) in lexicographic order where the left/right ideal
// inequality fails, or absent. Feeds counterexample reports.
std::optional<std::pair<int, int>> left_ideal_violation(const FiniteMagma& m, const IFS& a);
std::optional<std::pair<int, int>> right_ideal_violation(const FiniteMagma& m, const IFS& a);
// First x where the semiprime inequality fails.
std::optional<int> semiprime_violation(const FiniteMagma& m, const IFS& a);

/*
 * Finite value grid: the levels at which "for all IFS" quantifiers are
 * exhausted. Sorted, distinct, and always containing 0 and 1.
 */
struct ValueGrid {
    std::vector<Rat> levels;

    explicit ValueGrid(std::vector<Rat> ls);
    int size() const { return static_cast<int>(levels.size()); }
    bool operator==(const ValueGrid&) const = default;

    // (mu, ga) level pairs with mu + ga <= 1, ordered mu-major.
    std::vector<std::pair<Rat, Rat>> admissible_pairs() const;

    std::string str() const;               // "0,1/4,1/2,3/4,1"
    static ValueGrid parse(const std::string& text);
};

ValueGrid default_grid(); // {0, 1/4, 1/2, 3/4, 1}

// Streams every IFS whose grades lie on the grid, p^n of them where p
// is the admissible pair count. Order: element 0 varies slowest, the
// pair sequence from admissible_pairs at each position.
void grid_enumerate(int n, const ValueGrid& grid,
                    const std::function<void(const IFS&)>& sink);
std::uint64_t grid_count(int n, const ValueGrid& grid);

// Two-line literal: "mu: v1 ... vn" and "gamma: v1 ... vn"; values are
// rationals, decimals accepted on input. Parsing validates nothing
// beyond shape, so malformed assignments round-trip.
std::string format_ifs(const IFS& a);
IFS parse_ifs(const std::string& text);

} // namespace aglab
