#pragma once

#include "aglab/ifs.hpp"
#include "aglab/magma.hpp"

namespace aglab::examples {

// The three bundled order-5 tables (labels a..e). ex and t are regular;
// e2 is not (element c has no regular witness); t is intra-regular.
const FiniteMagma& ex();
const FiniteMagma& e2();
const FiniteMagma& t();

/*
 * Grade assignments used by the replay scenarios. Built unchecked on
 * purpose: several violate mu + gamma <= 1, and the scenarios exist to
 * report how each assignment actually behaves under the predicates.
 */
IFS scenario_ex_two_sided(); // on ex: mu = 1 at a, else 0
IFS scenario_aw();           // on ex
IFS scenario_fgh_a();        // on e2
IFS scenario_fgh_b();        // on e2
IFS scenario_qer();          // on e2: left ideal, not right
IFS scenario_c1();           // on ex
IFS scenario_cor11();        // on e2

} // namespace aglab::examples
