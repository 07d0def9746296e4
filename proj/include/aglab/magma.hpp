#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace aglab {

/*
 * Finite magma as a row-major Cayley table over elements 0..n-1.
 * Row = left operand: table[x*n + y] holds x*y.
 * Immutable after construction; labels are presentation-only.
 */
struct FiniteMagma {
    int n = 0;
    std::vector<std::uint8_t> table;     // n*n entries, each < n
    std::vector<std::string> labels;     // empty, or n distinct names

    FiniteMagma() = default;
    FiniteMagma(int order, std::vector<std::uint8_t> t,
                std::vector<std::string> names = {});

    int at(int x, int y) const { return table[x * n + y]; }

    std::string label(int x) const;
    bool operator==(const FiniteMagma& o) const {
        return n == o.n && table == o.table;
    }
    bool operator<(const FiniteMagma& o) const {
        return n != o.n ? n < o.n : table < o.table;
    }
};

// Text format: '#' comment lines, a header "order N", an optional
// "labels x1 ... xN" line, then N rows of N entries. Parse failures
// throw std::runtime_error naming the offending line.
FiniteMagma parse_cayley_table(std::istream& in);
FiniteMagma parse_cayley_table_text(const std::string& text);
std::string format_cayley_table(const FiniteMagma& m, bool with_labels = true);

// Law checks. A violation is the smallest offending tuple in
// lexicographic order, or absent when the law holds.
bool is_left_invertive(const FiniteMagma& m);                       // (ab)c = (cb)a
std::optional<std::array<int, 3>> left_invertive_violation(const FiniteMagma& m);
bool is_medial(const FiniteMagma& m);                               // (ab)(cd) = (ac)(bd)
bool is_paramedial(const FiniteMagma& m);                           // (ab)(cd) = (dc)(ba)
bool satisfies_law4(const FiniteMagma& m);                          // a(bc) = b(ac)

// All e with e*x = x for every x. At most one in a left-invertive magma.
std::vector<int> left_identities(const FiniteMagma& m);

enum class WitnessKind { Regular, IntraRegular };

struct Witness {
    WitnessKind kind;
    int element;
    int x;
    int y = -1; // IntraRegular only
};

// Smallest x with (a*x)*a = a, or absent.
std::optional<Witness> regular_witness(const FiniteMagma& m, int a);
// Smallest (x,y) with (x*a^2)*y = a, or absent.
std::optional<Witness> intra_regular_witness(const FiniteMagma& m, int a);
bool is_regular(const FiniteMagma& m);
bool is_intra_regular(const FiniteMagma& m);

/*
 * Crisp subsets as bit masks over the carrier. The ideal predicates
 * follow the convention that ideals are non-empty; passing an empty
 * mask throws std::invalid_argument.
 */
using SubsetMask = std::uint32_t;

SubsetMask full_mask(int n);
std::string format_subset(const FiniteMagma& m, SubsetMask a);

// Complexwise product {x*y : x in a, y in b}.
SubsetMask subset_product(const FiniteMagma& m, SubsetMask a, SubsetMask b);

bool is_ag_subgroupoid(const FiniteMagma& m, SubsetMask a);      // AA subset of A
bool is_left_ideal(const FiniteMagma& m, SubsetMask a);          // SA subset of A
bool is_right_ideal(const FiniteMagma& m, SubsetMask a);         // AS subset of A
bool is_two_sided_ideal(const FiniteMagma& m, SubsetMask a);
bool is_generalized_bi_ideal(const FiniteMagma& m, SubsetMask a); // (AS)A subset of A
bool is_bi_ideal(const FiniteMagma& m, SubsetMask a);
bool is_one_two_ideal(const FiniteMagma& m, SubsetMask a);       // (AS)A^2 subset of A

// a^2 in A implies a in A. Defined for any subset, empty included.
bool is_semiprime_subset(const FiniteMagma& m, SubsetMask a);

bool is_ag_band(const FiniteMagma& m);   // every element idempotent
bool is_left_duo(const FiniteMagma& m);  // every left ideal also right

enum class IdealKind {
    Subgroupoid,
    Left,
    Right,
    TwoSided,
    GeneralizedBi,
    Bi,
    OneTwo,
};

const char* ideal_kind_name(IdealKind k);

// All non-empty subsets satisfying the kind's predicate, ascending by
// mask. Scans 2^n subsets; orders above the cap throw.
std::vector<SubsetMask> all_ideals(const FiniteMagma& m, IdealKind kind,
                                   int order_cap = 16);

} // namespace aglab
