#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pebbling/report.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

enum class AnalysisLevel {
    bounds_only, // metrics, domination, bound ladder, predicates
    with_exact,  // plus exact pebbling numbers and witnesses
    full_checks, // plus constructions and the whole per-graph check suite
};

struct AnalyzeOptions {
    AnalysisLevel level = AnalysisLevel::bounds_only;
    SearchBudget budget;
    std::optional<int> root;      // rooted exact value instead of f(G)
    int k = 1;                    // k-pebbling target
    std::optional<std::string> corrupt_bound; // self-test fault injection
};

/// Runs the per-graph pipeline at the requested level.
BoundReport analyze_graph(const std::string& graph_id, const Graph& g, const AnalyzeOptions& opt);

/// paths n=2..6, complete n=2..6, stars r=2..5, doublestar n=2,4,
/// cycles n=3..6, coronas of cycles 3 and 4.
std::vector<std::string> default_corpus();

struct VerifyOptions {
    std::vector<std::string> corpus; // empty = default_corpus()
    SearchBudget budget;
    int jobs = 1;
    bool global_checks = true;
    std::optional<std::string> corrupt_bound;
};

struct VerifyResult {
    std::vector<BoundReport> reports;      // input order, regardless of jobs
    std::vector<CheckResult> global_checks;
    bool all_passed = false;
    bool budget_exceeded = false;
};

/// The full check suite: per-graph checks over the corpus plus the
/// corpus-independent grid and oracle checks. Results do not depend on jobs.
VerifyResult run_verify(const VerifyOptions& opt);

/// Checked payload of a verify run (reports without timing + global checks),
/// suitable for byte-for-byte determinism comparisons.
std::string verify_checked_payload(const VerifyResult& result);

} // namespace pebbling
