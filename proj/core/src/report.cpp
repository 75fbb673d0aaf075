#include "pebbling/report.hpp"

#include <sstream>

#include "json.hpp"

namespace pebbling {

namespace {

using json = nlohmann::ordered_json;

json bound_to_json(const BoundValue& b) {
    json j;
    j["name"] = b.name;
    j["applicable"] = b.applicable;
    if (b.applicable) j["value"] = b.value;
    json inputs = json::object();
    for (const auto& [key, val] : b.inputs) inputs[key] = val;
    j["inputs"] = inputs;
    return j;
}

BoundValue bound_from_json(const json& j) {
    BoundValue b;
    b.name = j.at("name").get<std::string>();
    b.applicable = j.at("applicable").get<bool>();
    if (b.applicable) b.value = j.at("value").get<std::int64_t>();
    for (const auto& [key, val] : j.at("inputs").items())
        b.inputs.emplace_back(key, val.get<std::int64_t>());
    return b;
}

json moves_to_json(const MoveSequence& moves) {
    json arr = json::array();
    for (const Move& mv : moves) arr.push_back(json::array({mv.from, mv.to}));
    return arr;
}

MoveSequence moves_from_json(const json& arr) {
    MoveSequence moves;
    for (const auto& step : arr) moves.push_back({step.at(0).get<int>(), step.at(1).get<int>()});
    return moves;
}

json exact_to_json(const ExactResult& e) {
    json j;
    j["f"] = e.value;
    j["k"] = e.k;
    j["per_root"] = e.per_root;
    j["witness"] = {{"root", e.witness_root}, {"counts", e.witness.counts}};
    json checks = json::array();
    for (const SolveCertificate& c : e.spot_checks) {
        checks.push_back({{"root", c.root},
                          {"k", c.k},
                          {"counts", c.dist.counts},
                          {"moves", moves_to_json(c.moves)}});
    }
    j["spot_checks"] = checks;
    return j;
}

ExactResult exact_from_json(const json& j) {
    ExactResult e;
    e.value = j.at("f").get<std::int64_t>();
    e.k = j.at("k").get<int>();
    e.per_root = j.at("per_root").get<std::vector<std::int64_t>>();
    e.witness_root = j.at("witness").at("root").get<int>();
    e.witness = Distribution(j.at("witness").at("counts").get<std::vector<int>>());
    for (const auto& c : j.at("spot_checks")) {
        SolveCertificate cert;
        cert.root = c.at("root").get<int>();
        cert.k = c.at("k").get<int>();
        cert.dist = Distribution(c.at("counts").get<std::vector<int>>());
        cert.moves = moves_from_json(c.at("moves"));
        e.spot_checks.push_back(std::move(cert));
    }
    return e;
}

json constructions_to_json(const ConstructionsReport& c) {
    json j;
    json path_sets = json::array();
    for (const PathSet& ps : c.path_sets)
        path_sets.push_back({{"root", ps.root}, {"paths", ps.paths}, {"lengths", ps.lengths}});
    j["path_sets"] = path_sets;
    json systems = json::array();
    for (const RootDisjointPathSystem& s : c.systems)
        systems.push_back({{"root", s.root}, {"terminals", s.terminals}, {"paths", s.paths}});
    j["systems"] = systems;
    auto decomposition_to_json = [](const Decomposition& d) {
        json out;
        out["root"] = d.root;
        out["centers"] = d.centers;
        out["connectors"] = d.connectors;
        out["cells"] = d.cells;
        return out;
    };
    j["efficient_cells"] =
        c.efficient_cells ? decomposition_to_json(*c.efficient_cells) : json(nullptr);
    json general = json::array();
    for (const Decomposition& d : c.general_cells) general.push_back(decomposition_to_json(d));
    j["general_cells"] = general;
    return j;
}

ConstructionsReport constructions_from_json(const json& j) {
    ConstructionsReport c;
    for (const auto& ps : j.at("path_sets")) {
        PathSet p;
        p.root = ps.at("root").get<int>();
        p.paths = ps.at("paths").get<std::vector<std::vector<int>>>();
        p.lengths = ps.at("lengths").get<std::vector<int>>();
        c.path_sets.push_back(std::move(p));
    }
    for (const auto& sj : j.at("systems")) {
        RootDisjointPathSystem s;
        s.root = sj.at("root").get<int>();
        s.terminals = sj.at("terminals").get<std::vector<int>>();
        s.paths = sj.at("paths").get<std::vector<std::vector<int>>>();
        c.systems.push_back(std::move(s));
    }
    auto decomposition_from_json = [](const json& dj) {
        Decomposition d;
        d.root = dj.at("root").get<int>();
        d.centers = dj.at("centers").get<std::vector<int>>();
        d.connectors = dj.at("connectors").get<std::vector<int>>();
        d.cells = dj.at("cells").get<std::vector<std::vector<int>>>();
        return d;
    };
    if (!j.at("efficient_cells").is_null())
        c.efficient_cells = decomposition_from_json(j.at("efficient_cells"));
    for (const auto& dj : j.at("general_cells")) c.general_cells.push_back(decomposition_from_json(dj));
    return c;
}

json report_to_json_obj(const BoundReport& r, bool include_timing) {
    json j;
    j["graph"] = r.graph_id;
    j["n"] = r.n;
    j["m"] = r.m;
    j["diameter"] = r.d;
    j["ecc"] = r.ecc;
    j["gamma"] = r.gamma;
    j["gamma_eff"] = r.gamma_eff ? json(*r.gamma_eff) : json(nullptr);
    j["dominating_set"] = r.dominating_set;
    j["efficient_dominating_set"] =
        r.efficient_dominating_set ? json(*r.efficient_dominating_set) : json(nullptr);
    json bounds = json::array();
    for (const BoundValue& b : r.bounds) bounds.push_back(bound_to_json(b));
    j["bounds"] = bounds;
    json preds = json::array();
    for (const PredicateValue& p : r.predicates) {
        json pj;
        pj["name"] = p.name;
        pj["applicable"] = p.applicable;
        if (p.applicable) pj["holds"] = p.holds;
        preds.push_back(pj);
    }
    j["predicates"] = preds;
    j["best_upper"] = {{"name", r.best_name}, {"value", r.best_value}};
    j["exact"] = r.exact ? exact_to_json(*r.exact) : json(nullptr);
    j["exact_error"] = r.exact_error ? json(*r.exact_error) : json(nullptr);
    j["constructions"] = r.constructions ? constructions_to_json(*r.constructions) : json(nullptr);
    json checks = json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    j["checks"] = checks;
    if (include_timing) {
        json t = json::object();
        for (const auto& [phase, ms] : r.timing_ms) t[phase] = ms;
        j["timing_ms"] = t;
    }
    return j;
}

} // namespace

std::string report_to_json(const BoundReport& r, bool include_timing) {
    return report_to_json_obj(r, include_timing).dump(2);
}

BoundReport report_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    BoundReport r;
    r.graph_id = j.at("graph").get<std::string>();
    r.n = j.at("n").get<int>();
    r.m = j.at("m").get<int>();
    r.d = j.at("diameter").get<int>();
    r.ecc = j.at("ecc").get<std::vector<int>>();
    r.gamma = j.at("gamma").get<int>();
    if (!j.at("gamma_eff").is_null()) r.gamma_eff = j.at("gamma_eff").get<int>();
    r.dominating_set = j.at("dominating_set").get<std::vector<int>>();
    if (!j.at("efficient_dominating_set").is_null())
        r.efficient_dominating_set = j.at("efficient_dominating_set").get<std::vector<int>>();
    for (const auto& b : j.at("bounds")) r.bounds.push_back(bound_from_json(b));
    for (const auto& p : j.at("predicates")) {
        PredicateValue pv;
        pv.name = p.at("name").get<std::string>();
        pv.applicable = p.at("applicable").get<bool>();
        if (pv.applicable) pv.holds = p.at("holds").get<bool>();
        r.predicates.push_back(pv);
    }
    r.best_name = j.at("best_upper").at("name").get<std::string>();
    r.best_value = j.at("best_upper").at("value").get<std::int64_t>();
    if (!j.at("exact").is_null()) r.exact = exact_from_json(j.at("exact"));
    if (!j.at("exact_error").is_null()) r.exact_error = j.at("exact_error").get<std::string>();
    if (!j.at("constructions").is_null())
        r.constructions = constructions_from_json(j.at("constructions"));
    for (const auto& c : j.at("checks")) {
        r.checks.push_back({c.at("name").get<std::string>(), c.at("pass").get<bool>(),
                            c.at("details").get<std::string>()});
    }
    if (j.contains("timing_ms"))
        for (const auto& [phase, ms] : j.at("timing_ms").items())
            r.timing_ms.emplace_back(phase, ms.get<double>());
    return r;
}

namespace {

const char* kCsvColumns[] = {"graph",   "n",       "m",          "d",        "gamma",
                             "gamma_eff", "eq1_lower", "eq1_upper", "thm1",   "thm2",
                             "thm3",    "thm4",    "pachter",    "best_name", "best_value",
                             "exact_f", "eq3",     "eq4",        "eq5",      "eq6",
                             "eq7",     "eq8",     "checks_passed", "checks_failed"};

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string csv_header() {
    std::string out;
    for (const char* col : kCsvColumns) {
        if (!out.empty()) out += ',';
        out += col;
    }
    return out;
}

CsvRecord csv_record(const BoundReport& r) {
    CsvRecord rec;
    auto add = [&rec](const std::string& s) { rec.fields.push_back(s); };
    add(r.graph_id);
    add(std::to_string(r.n));
    add(std::to_string(r.m));
    add(std::to_string(r.d));
    add(std::to_string(r.gamma));
    add(r.gamma_eff ? std::to_string(*r.gamma_eff) : "");
    auto bound_field = [&](const std::string& name) {
        for (const BoundValue& b : r.bounds)
            if (b.name == name) return b.applicable ? std::to_string(b.value) : std::string();
        return std::string();
    };
    add(bound_field("eq1_lower"));
    add(bound_field("eq1_upper"));
    add(bound_field("thm1"));
    add(bound_field("thm2"));
    add(bound_field("thm3"));
    add(bound_field("thm4"));
    add(bound_field("pachter"));
    add(r.best_name);
    add(std::to_string(r.best_value));
    add(r.exact ? std::to_string(r.exact->value) : "");
    auto pred_field = [&](const std::string& name) {
        for (const PredicateValue& p : r.predicates)
            if (p.name == name) return p.applicable ? std::string(p.holds ? "true" : "false") : std::string();
        return std::string();
    };
    for (const char* p : {"eq3", "eq4", "eq5", "eq6", "eq7", "eq8"}) add(pred_field(p));
    int passed = 0, failed = 0;
    for (const CheckResult& c : r.checks) (c.pass ? passed : failed)++;
    add(std::to_string(passed));
    add(std::to_string(failed));
    return rec;
}

std::string csv_row_to_string(const CsvRecord& rec) {
    std::string out;
    for (size_t i = 0; i < rec.fields.size(); ++i) {
        if (i) out += ',';
        out += csv_escape(rec.fields[i]);
    }
    return out;
}

std::string report_to_csv_row(const BoundReport& r) { return csv_row_to_string(csv_record(r)); }

CsvRecord parse_csv_row(const std::string& line) {
    CsvRecord rec;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            rec.fields.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    rec.fields.push_back(cur);
    return rec;
}

} // namespace pebbling
