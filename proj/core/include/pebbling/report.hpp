#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/bounds.hpp"
#include "pebbling/constructions.hpp"
#include "pebbling/domination.hpp"
#include "pebbling/solver.hpp"

namespace pebbling {

struct PredicateValue {
    std::string name;
    bool applicable = false;
    bool holds = false;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

struct ConstructionsReport {
    std::vector<PathSet> path_sets;                // one per root
    std::vector<RootDisjointPathSystem> systems;   // one per root
    std::optional<Decomposition> efficient_cells;  // thm3 variant
    std::vector<Decomposition> general_cells;      // thm4 variant, one per root
};

/// Per-graph record: invariants, domination certificates, the full bound
/// ladder, predicate evaluations, exact values when computed, and check
/// outcomes. Everything except `timing_ms` is the checked payload and is
/// byte-for-byte deterministic for fixed inputs and budgets.
struct BoundReport {
    std::string graph_id;
    int n = 0;
    int m = 0;
    int d = 0;
    std::vector<int> ecc;
    int gamma = 0;
    std::optional<int> gamma_eff;
    std::vector<int> dominating_set;
    std::optional<std::vector<int>> efficient_dominating_set;
    std::vector<BoundValue> bounds;
    std::vector<PredicateValue> predicates;
    std::string best_name;
    std::int64_t best_value = 0;
    std::optional<ExactResult> exact;
    std::optional<std::string> exact_error; // budget aborts: "budget-exceeded [lo,hi]"
    std::optional<ConstructionsReport> constructions;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, double>> timing_ms;
};

/// JSON with stable key order. include_timing = false yields the checked
/// payload used for determinism comparisons.
std::string report_to_json(const BoundReport& r, bool include_timing = true);
BoundReport report_from_json(const std::string& json_text);

/// Flat CSV view: one row per graph.
std::string csv_header();
std::string report_to_csv_row(const BoundReport& r);

/// Fields of one CSV row, in column order. Parsing an emitted row and
/// re-serializing it reproduces the row byte-for-byte.
struct CsvRecord {
    std::vector<std::string> fields;

    bool operator==(const CsvRecord&) const = default;
};

CsvRecord csv_record(const BoundReport& r);
CsvRecord parse_csv_row(const std::string& line);
std::string csv_row_to_string(const CsvRecord& rec);

} // namespace pebbling
