#include "doctest.h"
#include "pebbling/report.hpp"
#include "pebbling/verify.hpp"

using namespace pebbling;

namespace {

BoundReport analyzed(const char* spec, AnalysisLevel level) {
    AnalyzeOptions opt;
    opt.level = level;
    return analyze_graph(spec, generate(spec), opt);
}

} // namespace

TEST_CASE("bounds report content") {
    const BoundReport r = analyzed("star:4", AnalysisLevel::bounds_only);
    CHECK(r.n == 5);
    CHECK(r.d == 2);
    CHECK(r.gamma == 1);
    REQUIRE(r.gamma_eff.has_value());
    CHECK(*r.gamma_eff == 1);
    CHECK(r.best_name == "pachter");
    CHECK(r.best_value == 6);
    bool saw_thm3 = false;
    for (const BoundValue& b : r.bounds) {
        if (b.name == "thm3") {
            saw_thm3 = true;
            CHECK(b.applicable);
            CHECK(b.value == 10);
        }
    }
    CHECK(saw_thm3);
    CHECK_FALSE(r.exact.has_value());
    CHECK(r.checks.empty());
}

TEST_CASE("exact report for complete:6") {
    const BoundReport r = analyzed("complete:6", AnalysisLevel::with_exact);
    REQUIRE(r.exact.has_value());
    CHECK(r.exact->value == 6);
    // hand ladder: eq1u 6, thm1 6, thm2 6, thm3 7, thm4 8
    auto value_of = [&](const char* name) -> std::int64_t {
        for (const BoundValue& b : r.bounds)
            if (b.name == name) return b.value;
        return -1;
    };
    CHECK(value_of("eq1_upper") == 6);
    CHECK(value_of("thm1") == 6);
    CHECK(value_of("thm2") == 6);
    CHECK(value_of("thm3") == 7);
    CHECK(value_of("thm4") == 8);
}

TEST_CASE("json round trip") {
    const BoundReport r = analyzed("star:3", AnalysisLevel::full_checks);
    REQUIRE(r.exact.has_value());
    CHECK(r.exact->value == 5);
    const std::string text = report_to_json(r, true);
    const BoundReport back = report_from_json(text);
    CHECK(report_to_json(back, true) == text);
    // checked payload drops the timing field only
    const std::string payload = report_to_json(r, false);
    CHECK(payload.find("timing_ms") == std::string::npos);
    CHECK(payload.find("\"checks\"") != std::string::npos);
}

TEST_CASE("csv round trip") {
    const std::string header = csv_header();
    CHECK(header.substr(0, 6) == "graph,");
    const BoundReport r = analyzed("doublestar:4", AnalysisLevel::with_exact);
    const CsvRecord rec = csv_record(r);
    CHECK(rec.fields.size() == parse_csv_row(header).fields.size());
    const std::string row = csv_row_to_string(rec);
    CHECK(parse_csv_row(row) == rec);
    CHECK(rec.fields[0] == "doublestar:4");
    CHECK(rec.fields[15] == "10"); // exact_f column

    // quoting survives fields with commas
    CsvRecord tricky;
    tricky.fields = {"a,b", "plain", "say \"hi\"", ""};
    CHECK(parse_csv_row(csv_row_to_string(tricky)) == tricky);
}

TEST_CASE("checked payload is deterministic") {
    const BoundReport a = analyzed("cycle:5", AnalysisLevel::full_checks);
    const BoundReport b = analyzed("cycle:5", AnalysisLevel::full_checks);
    CHECK(report_to_json(a, false) == report_to_json(b, false));
}

TEST_CASE("verify on a small corpus passes and is jobs-invariant") {
    VerifyOptions opt;
    opt.corpus = {"path:3", "star:3", "cycle:4"};
    opt.global_checks = false;
    opt.jobs = 1;
    const VerifyResult one = run_verify(opt);
    CHECK(one.all_passed);
    CHECK_FALSE(one.budget_exceeded);
    for (const BoundReport& r : one.reports) CHECK_FALSE(r.checks.empty());

    opt.jobs = 4;
    const VerifyResult four = run_verify(opt);
    CHECK(verify_checked_payload(one) == verify_checked_payload(four));
}

TEST_CASE("corrupted bound is caught and named") {
    VerifyOptions opt;
    opt.corpus = {"star:3"};
    opt.global_checks = false;
    opt.corrupt_bound = "thm1";
    const VerifyResult res = run_verify(opt);
    CHECK_FALSE(res.all_passed);
    bool named = false;
    for (const CheckResult& c : res.reports[0].checks)
        if (c.name == "bound-soundness" && !c.pass) named = true;
    CHECK(named);
}

TEST_CASE("rooted and k analyses") {
    AnalyzeOptions opt;
    opt.level = AnalysisLevel::with_exact;
    opt.root = 0;
    const BoundReport rooted = analyze_graph("star:3", generate("star:3"), opt);
    REQUIRE(rooted.exact.has_value());
    CHECK(rooted.exact->value == 4); // the center is the easy root
    CHECK(rooted.exact->per_root.empty());

    AnalyzeOptions kopt;
    kopt.level = AnalysisLevel::with_exact;
    kopt.k = 2;
    const BoundReport k2 = analyze_graph("star:3", generate("star:3"), kopt);
    REQUIRE(k2.exact.has_value());
    CHECK(k2.exact->value == 9); // 4k + m - 3 at k=2, m=4
}

TEST_CASE("budget exceeded is reported, not silently degraded") {
    AnalyzeOptions opt;
    opt.level = AnalysisLevel::with_exact;
    opt.budget.max_configs = 200;
    const BoundReport r = analyze_graph("path:6", generate("path:6"), opt);
    CHECK_FALSE(r.exact.has_value());
    REQUIRE(r.exact_error.has_value());
    CHECK(r.exact_error->find("budget-exceeded") == 0);
}
