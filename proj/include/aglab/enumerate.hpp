#pragma once

#include <cstdint>
#include <functional>

#include "aglab/magma.hpp"

namespace aglab {

struct SearchConfig {
    int order = 2;
    bool require_left_identity = false;
    bool up_to_isomorphism = false;
    int worker_count = 1;
    int hard_cap = 5;
};

struct EnumerationStats {
    std::uint64_t tables_visited = 0; // cell assignments tried
    std::uint64_t magmas_emitted = 0;
    std::int64_t elapsed_ms = 0;
};

/*
 * Emits every order-n table satisfying (ab)c = (cb)a, filtered per the
 * config, in ascending row-major table order regardless of worker
 * count. Workers partition the search space by first-row prefix; with
 * more than one worker, results are buffered per prefix and merged.
 */
void enumerate_ag_groupoids(const SearchConfig& cfg,
                            const std::function<void(const FiniteMagma&)>& sink,
                            EnumerationStats* stats = nullptr);

// Independent brute-force count scanning all n^(n*n) tables with no
// pruning or shared search code. Orders above 3 throw.
std::uint64_t oracle_count(int order, bool require_left_identity);

// Lexicographically least table among all relabelings. Two magmas are
// isomorphic iff their canonical forms coincide.
FiniteMagma canonical_form(const FiniteMagma& m);

// n! / |Aut(m)|: the number of distinct labelings of m.
std::uint64_t orbit_size(const FiniteMagma& m);

} // namespace aglab
