#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aglab/ifs.hpp"
#include "aglab/magma.hpp"

namespace aglab {

/*
 * Stable check identifiers. Most checks quantify a statement over
 * (magma stream x grid assignments); each carries a structural filter
 * (left identity / regular / intra-regular / left duo / band) that a
 * magma must satisfy before the statement applies to it.
 */
enum class CheckId {
    thm_aw,
    lem_as,
    lem_fgh,
    lem_idem,
    lem_qw,
    thm_semilattice,
    lem_qer,
    lem_ll,
    cor_dh,
    thm_c1,
    thm_ki,
    thm_right_bi_duo,
    thm_asdf,
    thm_agband_12_left,
    thm_agband_12_right,
    lem_00,
    lem_1,
    cor_11,
    lem_2,
    thm_3,
    thm_right_left_semiprime,
    thm_RL,
    lem_iff,
    thm_twosided_iff_bi,
    thm_twosided_iff_12,
    thm_bi_iff_gbi,
    thm_Aa_eq_Aa2,
    thm_left_idem,
    thm_SA_squared,
    counterexamples_suite,
};

const std::vector<CheckId>& all_check_ids();
std::string_view check_id_name(CheckId id);
std::optional<CheckId> check_id_from_name(std::string_view name);

enum class Verdict { Pass, Fail, Skipped };
std::string_view verdict_name(Verdict v);

struct CheckCounterexample {
    FiniteMagma magma;
    std::vector<IFS> sets;  // grade assignments involved, possibly none
    std::string detail;     // the violating tuple / failed claim
};

struct CheckResult {
    Verdict verdict = Verdict::Skipped;
    std::uint64_t instances_checked = 0;
    std::int64_t elapsed_ms = 0;
    std::optional<CheckCounterexample> counterexample;
};

struct TheoremReport {
    std::vector<std::pair<CheckId, CheckResult>> entries;
    bool all_pass() const; // no Fail among entries (Skipped allowed)
};

// One-directional and characterization checks: the statement is
// verified for every grid assignment meeting its own hypotheses, on
// every magma passing the structural filter. Fails carry a replayable
// counterexample; a check with no eligible magma reports Skipped.
CheckResult check_universal(CheckId id, const std::vector<FiniteMagma>& magmas,
                            const ValueGrid& grid);

// Equivalence-shaped checks (structural property on the left, a
// grid-quantified ideal property on the right): both directions are
// decided by comparing the two sides as booleans per magma. The grid
// contains 0 and 1, so the crisp characteristic witnesses that break
// the quantified side on structurally deficient magmas are grid
// members and the reverse direction is exercised for real. Only the
// ids listed in is_equivalence_check are accepted.
CheckResult check_equivalence(CheckId id, const std::vector<FiniteMagma>& magmas,
                              const ValueGrid& grid);
bool is_equivalence_check(CheckId id);

/*
 * Replay scenarios: fixed grade assignments whose documented behavior
 * is re-verified claim by claim. A scenario passes when every claim
 * holds as documented.
 */
struct ScenarioClaim {
    std::string text;
    bool holds;
};

struct ScenarioResult {
    std::string name;
    std::string magma_name;
    FiniteMagma magma;
    std::vector<IFS> sets;
    std::vector<ScenarioClaim> claims;
    std::string note; // e.g. which element witnesses a separation, if any
    bool pass;
};

std::vector<ScenarioResult> run_scenarios();
const std::vector<std::string>& scenario_names();

// The counterexamples_suite entry: pass iff every scenario passes.
CheckResult reproduce_counterexamples();

// The default magma stream: one representative per isomorphism class
// for each order <= order_max, then the three bundled examples.
std::vector<FiniteMagma> standard_stream(int order_max, int workers = 1);

// Every check over all AG-groupoids of order <= order_max (one per
// isomorphism class) plus the three bundled examples. workers > 1
// spreads (check, magma) jobs across threads; results are identical
// for any worker count.
TheoremReport run_all(int order_max, const ValueGrid& grid, int workers = 1);

// Single-check dispatch used by run_all and the CLI.
CheckResult run_check(CheckId id, const std::vector<FiniteMagma>& magmas,
                      const ValueGrid& grid);

} // namespace aglab
