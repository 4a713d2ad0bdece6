#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mopdom/mop.hpp"
#include "mopdom/solvers.hpp"

namespace mopdom {

/// How a sub-solution is turned back into a solution of the larger mop.
/// Rules are tried in order; the first applicable rule whose result verifies
/// wins.  Vertex labels refer to the mop the step applies to.
struct LiftRule {
    enum class When { MergedIn, ContainsAll, Otherwise };
    When when = When::Otherwise;
    std::vector<int> trigger;  // for ContainsAll
    std::vector<int> remove;
    std::vector<int> add;
};

struct ReductionStep {
    std::string rule_id;
    std::vector<int> deleted;
    std::optional<std::pair<int, int>> contracted;  // edge present after deletion
    std::vector<LiftRule> lifts;
    int budget = 0;
    std::vector<int> augment_pool;  // extra vertices the lift search may draw on

    // Filled in when the step is applied.
    int n_before = 0, n_after = 0, k_before = 0, k_after = 0;
    std::vector<int> augment_used;
};

struct RuleTemplate {
    std::string rule_id;
    std::string pattern;   // matching condition, human readable
    int n_drop = 0;        // vertices removed including contraction
    int k_drop_min = 0;    // guaranteed decrease of the degree-2 count
    bool contracts = false;
    int budget = 0;
};

/// The static rule table; every entry satisfies 2(n_drop + k_drop_min) >=
/// 9 * budget, which makes the step's growth budget sound for the bound.
const std::vector<RuleTemplate>& reduction_catalogue();
bool catalogue_budget_sound();

struct ConstructionTrace {
    std::vector<ReductionStep> steps;  // outermost first; labels are stage-local
    std::string base_case;  // SMALL-7..SMALL-12, EXACT-SMALL, EXACT-FALLBACK, GREEDY-FALLBACK
    DisjunctiveSet final_set;
    int bound_value = 0;
    bool used_fallback = false;
    std::vector<std::string> anomalies;
};

/// The small-order constructions (7 <= n <= 12), each branch guarded by an
/// explicit verification.
DisjunctiveSet construct_small(const Mop& m);

/// First catalogued reduction that applies structurally to m (n >= 13).
std::optional<ReductionStep> find_applicable_reduction(const Mop& m);

/// Applies the step's lift rules to a verified sub-solution of the reduced
/// mop.  Throws std::runtime_error when no rule yields a verified set.
DisjunctiveSet apply_and_lift(const Mop& m, const ReductionStep& step,
                              const DisjunctiveSet& sub);

/// Main entry: a verified 2DD-set of size <= floor(2(n+k)/9) for n >= 7.
ConstructionTrace construct_bounded_2dd(const Mop& m);

/// One JSON object per step: rule_id, deleted, contracted, augment,
/// n_before/n_after, k_before/k_after.
std::string trace_to_jsonl(const ConstructionTrace& t);

}  // namespace mopdom
