// pebble: exact graph pebbling numbers, bound ladders, and corpus verification.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pebbling/report.hpp"
#include "pebbling/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudget = 3;

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
};

std::ostream& open_sink(const OutputOptions& opt, std::ofstream& file) {
    if (opt.out_path.empty()) return std::cout;
    file.open(opt.out_path);
    if (!file) throw pebbling::Error(pebbling::errc::bad_input,
                                     "cannot open output file '" + opt.out_path + "'");
    return file;
}

void emit_reports(const std::vector<pebbling::BoundReport>& reports, const OutputOptions& opt) {
    std::ofstream file;
    std::ostream& out = open_sink(opt, file);
    if (opt.format == "csv") {
        out << pebbling::csv_header() << "\n";
        for (const auto& r : reports) out << pebbling::report_to_csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) out << pebbling::report_to_json(r) << "\n";
    }
}

void add_output_flags(CLI::App* cmd, OutputOptions& out) {
    cmd->add_option("--format", out.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    cmd->add_option("--out", out.out_path, "Write the report to a file instead of stdout");
}

void add_budget_flags(CLI::App* cmd, pebbling::SearchBudget& budget) {
    cmd->add_option("--max-pebbles", budget.max_pebbles,
                    "Abort exact searches whose witness box exceeds this many pebbles")
        ->envname("PEBBLE_MAX_PEBBLES")
        ->capture_default_str();
    cmd->add_option("--max-configs", budget.max_configs,
                    "Abort exact searches after visiting this many configurations")
        ->envname("PEBBLE_MAX_CONFIGS")
        ->capture_default_str();
    cmd->add_option("--max-n", budget.max_n, "Largest graph order the solver accepts")
        ->envname("PEBBLE_MAX_N")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact graph pebbling numbers, upper/lower bound ladders, and corpus checks"};
    app.require_subcommand(1);

    std::string input;
    OutputOptions output;
    pebbling::SearchBudget budget;
    std::optional<int> root;
    int k = 1;

    CLI::App* bounds = app.add_subcommand(
        "bounds", "Metrics, domination certificates, and every bound (no exact solve)");
    bounds->add_option("graph", input, "family spec (e.g. star:4) or edge-list file")->required();
    add_output_flags(bounds, output);

    CLI::App* exact = app.add_subcommand(
        "exact", "Exact pebbling number with witness and certificates, plus the bounds");
    exact->add_option("graph", input, "family spec or edge-list file")->required();
    exact->add_option("--root", root, "Rooted value f(G,v) instead of f(G)");
    exact->add_option("--k", k, "k-pebbling target")->check(CLI::PositiveNumber);
    add_output_flags(exact, output);
    add_budget_flags(exact, budget);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the full check suite over a corpus; exit 0 iff every check passes");
    std::vector<std::string> families;
    int jobs = 1;
    bool no_global_checks = false;
    std::optional<std::string> corrupt_bound;
    verify->add_option("--family", families,
                       "Corpus entries (repeatable); default is the built-in corpus");
    verify->add_option("--jobs", jobs, "Process corpus entries concurrently")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_flag("--no-global-checks", no_global_checks,
                     "Skip the corpus-independent grid and oracle checks");
    verify
        ->add_option("--inject-corrupt-bound", corrupt_bound,
                     "Self-test: corrupt the named bound and expect the suite to catch it")
        ->group("");
    add_output_flags(verify, output);
    add_budget_flags(verify, budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bounds->parsed() || exact->parsed()) {
            pebbling::AnalyzeOptions opt;
            opt.budget = budget;
            if (exact->parsed()) {
                opt.level = pebbling::AnalysisLevel::with_exact;
                opt.root = root;
                opt.k = k;
            }
            const pebbling::Graph g = pebbling::load_graph(input);
            if (root && (*root < 0 || *root >= g.vertex_count()))
                throw pebbling::Error(pebbling::errc::invalid_parameter, "root out of range");
            const pebbling::BoundReport report = pebbling::analyze_graph(input, g, opt);
            emit_reports({report}, output);
            if (report.exact_error) {
                std::cerr << "pebble: " << *report.exact_error << "\n";
                return kExitBudget;
            }
            return kExitOk;
        }

        // verify
        pebbling::VerifyOptions vopt;
        vopt.corpus = families;
        vopt.budget = budget;
        vopt.jobs = jobs;
        vopt.global_checks = !no_global_checks;
        vopt.corrupt_bound = corrupt_bound;
        const pebbling::VerifyResult result = pebbling::run_verify(vopt);
        emit_reports(result.reports, output);

        int failed = 0;
        for (const auto& r : result.reports)
            for (const auto& c : r.checks)
                if (!c.pass) {
                    std::cerr << "pebble: check failed: " << c.name << " on " << r.graph_id << ": "
                              << c.details << "\n";
                    ++failed;
                }
        for (const auto& c : result.global_checks) {
            std::cerr << "pebble: global check " << c.name << ": "
                      << (c.pass ? "pass" : "FAIL") << " (" << c.details << ")\n";
            if (!c.pass) ++failed;
        }
        if (result.budget_exceeded) {
            std::cerr << "pebble: budget exceeded during verification\n";
            return kExitBudget;
        }
        if (failed > 0) {
            std::cerr << "pebble: " << failed << " check(s) failed\n";
            return kExitCheckFailed;
        }
        std::cerr << "pebble: all checks passed on " << result.reports.size() << " graph(s)\n";
        return kExitOk;
    } catch (const pebbling::BudgetExceeded& e) {
        std::cerr << "pebble: budget-exceeded [" << e.lower() << "," << e.upper()
                  << "]: " << e.what() << "\n";
        return kExitBudget;
    } catch (const pebbling::Error& e) {
        if (e.code() == pebbling::errc::budget_exceeded) {
            std::cerr << "pebble: " << e.what() << "\n";
            return kExitBudget;
        }
        std::cerr << "pebble: " << pebbling::errc_name(e.code()) << ": " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "pebble: " << e.what() << "\n";
        return kExitInvalidInput;
    }
}
