#include "pebbling/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "pebbling/naive_oracle.hpp"

namespace pebbling {

namespace {

struct FamilyInfo {
    std::string name;
    int param = 0;          // numeric parameter for non-corona families
    std::string base;       // corona base spec
};

std::optional<FamilyInfo> parse_family(const std::string& id) {
    if (!is_family_spec(id)) return std::nullopt;
    FamilyInfo info;
    const auto colon = id.find(':');
    info.name = id.substr(0, colon);
    const std::string rest = id.substr(colon + 1);
    if (info.name == "corona") {
        info.base = rest;
    } else {
        try {
            info.param = std::stoi(rest);
        } catch (...) {
            return std::nullopt;
        }
    }
    return info;
}

std::optional<std::int64_t> known_exact_f(const FamilyInfo& fam) {
    if (fam.name == "path") return std::int64_t{1} << (fam.param - 1);
    if (fam.name == "complete") return fam.param;
    if (fam.name == "star" && fam.param >= 2) return fam.param + 2;
    if (fam.name == "star") return 2; // star:1 is a single edge
    if (fam.name == "doublestar") return fam.param + 6;
    return std::nullopt;
}

std::string join_ints(const std::vector<int>& v) {
    std::string out = "[";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + "]";
}

class CheckRecorder {
public:
    explicit CheckRecorder(std::vector<CheckResult>& sink) : sink_(sink) {}

    void add(const std::string& name, bool pass, const std::string& details) {
        sink_.push_back({name, pass, details});
    }

    // collects failures; passes when nothing was reported
    class Scope {
    public:
        Scope(CheckRecorder& rec, std::string name) : rec_(rec), name_(std::move(name)) {}

        void require(bool ok, const std::string& why) {
            if (!ok && failures_ < 5) {
                if (!details_.empty()) details_ += "; ";
                details_ += why;
            }
            if (!ok) ++failures_;
        }

        void note(const std::string& text) {
            if (!details_.empty()) details_ += "; ";
            details_ += text;
        }

        ~Scope() {
            std::string d = details_;
            if (failures_ > 5) d += "; (+" + std::to_string(failures_ - 5) + " more)";
            if (failures_ == 0 && d.empty()) d = "ok";
            rec_.add(name_, failures_ == 0, d);
        }

    private:
        CheckRecorder& rec_;
        std::string name_;
        std::string details_;
        int failures_ = 0;
    };

    Scope scope(const std::string& name) { return Scope(*this, name); }

private:
    std::vector<CheckResult>& sink_;
};

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(static_cast<size_t>(n),
                                    std::vector<int>(static_cast<size_t>(n), inf));
    for (int v = 0; v < n; ++v) d[static_cast<size_t>(v)][static_cast<size_t>(v)] = 0;
    for (auto [u, v] : g.edges()) {
        d[static_cast<size_t>(u)][static_cast<size_t>(v)] = 1;
        d[static_cast<size_t>(v)][static_cast<size_t>(u)] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                    std::min(d[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             d[static_cast<size_t>(i)][static_cast<size_t>(k)] +
                                 d[static_cast<size_t>(k)][static_cast<size_t>(j)]);
    return d;
}

// all distributions of the given size over n vertices, lex order; fn returns
// true to stop early (propagated)
bool for_each_distribution(int n, std::int64_t size,
                           const std::function<bool(const Distribution&)>& fn) {
    Distribution d(n);
    std::function<bool(int, std::int64_t)> rec = [&](int idx, std::int64_t rem) {
        if (idx == n - 1) {
            d[idx] = static_cast<int>(rem);
            return fn(d);
        }
        for (std::int64_t c = 0; c <= rem; ++c) {
            d[idx] = static_cast<int>(c);
            if (rec(idx + 1, rem - c)) return true;
        }
        return false;
    };
    if (n == 0) return false;
    return rec(0, size);
}

Distribution random_distribution(int n, std::int64_t size, std::mt19937& rng) {
    Distribution d(n);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (std::int64_t i = 0; i < size; ++i) d[pick(rng)] += 1;
    return d;
}

bool edge_mask_connected(int n, unsigned mask) {
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit)) {
                adj[static_cast<size_t>(i)].push_back(j);
                adj[static_cast<size_t>(j)].push_back(i);
            }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : adj[static_cast<size_t>(u)]) {
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::vector<Edge> edge_mask_edges(int n, unsigned mask) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
            if (mask & (1u << bit)) edges.emplace_back(i, j);
    return edges;
}

struct ReplayItem {
    Distribution dist;
    int root = 0;
    int k = 1;
    MoveSequence moves;
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}

    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void run_graph_checks(const std::string& id, const Graph& g, const GraphMetrics& met,
                      Solver& solver, BoundReport& r) {
    CheckRecorder rec(r.checks);
    const int n = g.vertex_count();
    const int d = met.diameter;
    const auto fam = parse_family(id);
    std::vector<ReplayItem> replays;

    { // distance matrix against an independent all-pairs algorithm
        auto sc = rec.scope("metrics-cross-check");
        const auto fw = floyd_warshall(g);
        sc.require(fw == met.dist, "BFS and Floyd-Warshall distance matrices differ");
        for (int i = 0; i < n; ++i) {
            sc.require(met.dist[size_t(i)][size_t(i)] == 0, "nonzero diagonal");
            for (int j = 0; j < n; ++j) {
                sc.require(met.dist[size_t(i)][size_t(j)] == met.dist[size_t(j)][size_t(i)],
                           "asymmetric distances");
                for (int k = 0; k < n; ++k)
                    sc.require(met.dist[size_t(i)][size_t(j)] <=
                                   met.dist[size_t(i)][size_t(k)] + met.dist[size_t(k)][size_t(j)],
                               "triangle inequality violated");
            }
            sc.require(met.ecc[size_t(i)] ==
                           *std::max_element(met.dist[size_t(i)].begin(), met.dist[size_t(i)].end()),
                       "eccentricity mismatch");
        }
        sc.require(d == *std::max_element(met.ecc.begin(), met.ecc.end()), "diameter mismatch");
    }

    { // generated families: counts, closed-form diameter, determinism
        auto sc = rec.scope("family-closed-forms");
        if (fam) {
            const Graph again = generate(id);
            sc.require(again.edges() == g.edges(), "generator is not deterministic");
            if (fam->name == "path") {
                sc.require(n == fam->param && d == n - 1, "path closed form");
            } else if (fam->name == "cycle") {
                sc.require(n == fam->param && d == n / 2, "cycle closed form");
            } else if (fam->name == "complete") {
                sc.require(n == fam->param && d == (n == 1 ? 0 : 1), "complete closed form");
            } else if (fam->name == "star") {
                sc.require(n == fam->param + 1 && d == (fam->param == 1 ? 1 : 2),
                           "star closed form");
            } else if (fam->name == "doublestar") {
                sc.require(n == fam->param + 2 && g.edge_count() == fam->param + 1 && d == 3,
                           "double star closed form");
            } else if (fam->name == "corona") {
                const Graph base = generate(fam->base);
                const int b = base.vertex_count();
                sc.require(n == 2 * b && g.edge_count() == base.edge_count() + b,
                           "corona closed form");
                const int expect_d = b == 1 ? 1 : metrics(base).diameter + 2;
                sc.require(d == expect_d, "corona diameter");
            }
        } else {
            sc.note("not a generated family");
        }
    }

    { // gamma certificate is minimal and deterministic
        auto sc = rec.scope("domination-minimality");
        sc.require(is_dominating(g, r.dominating_set), "reported set does not dominate");
        sc.require(static_cast<int>(r.dominating_set.size()) == r.gamma, "gamma size mismatch");
        if (r.gamma > 1) {
            bool smaller = false;
            std::vector<int> pick(static_cast<size_t>(r.gamma - 1));
            std::function<bool(int, int)> try_all = [&](int start, int depth) {
                if (depth == r.gamma - 1) return is_dominating(g, pick);
                for (int v = start; v < n; ++v) {
                    pick[static_cast<size_t>(depth)] = v;
                    if (try_all(v + 1, depth + 1)) return true;
                }
                return false;
            };
            smaller = try_all(0, 0);
            sc.require(!smaller, "a dominating set smaller than gamma exists");
        }
        sc.require(min_dominating_set(g).set == r.dominating_set,
                   "repeated search returned a different certificate");
        if (r.efficient_dominating_set) {
            const auto& s = *r.efficient_dominating_set;
            sc.require(is_perfect(g, s) && is_independent(g, s),
                       "efficient set is not perfect+independent");
            std::int64_t closed = 0;
            for (int v : s) closed += 1 + g.degree(v);
            sc.require(closed == n, "closed neighborhoods do not partition V");
        }
    }

    { // per-graph predicate soundness against the actual ladder values
        auto sc = rec.scope("predicate-soundness");
        auto value_of = [&](const std::string& name) -> std::optional<std::int64_t> {
            for (const BoundValue& b : r.bounds)
                if (b.name == name && b.applicable) return b.value;
            return std::nullopt;
        };
        auto implies = [&](const std::string& pred, const std::string& lhs,
                           const std::string& rhs) {
            for (const PredicateValue& p : r.predicates) {
                if (p.name != pred || !p.applicable || !p.holds) continue;
                auto a = value_of(lhs), b = value_of(rhs);
                sc.require(a && b && *a <= *b, pred + " true but " + lhs + " > " + rhs);
            }
        };
        implies("eq3", "thm3", "eq1_upper");
        implies("eq4", "thm4", "eq1_upper");
        implies("eq5", "thm3", "thm1");
        implies("eq6", "thm4", "thm1");
        implies("eq7", "thm3", "thm2");
        implies("eq8", "thm4", "thm2");
        if (n >= 2) sc.require(phi_monotone_check(n), "phi not monotone");
    }

    if (r.exact) {
        const std::int64_t f = r.exact->value;

        { // families with closed-form pebbling numbers
            auto sc = rec.scope("exact-known-value");
            if (fam) {
                if (auto expect = known_exact_f(*fam)) {
                    sc.require(f == *expect, id + ": f = " + std::to_string(f) + ", expected " +
                                                 std::to_string(*expect));
                } else {
                    sc.note("no closed form for this family");
                }
            } else {
                sc.note("not a generated family");
            }
        }

        { // lower <= f <= every applicable upper, and applicability gates
            auto sc = rec.scope("bound-soundness");
            for (const BoundValue& b : r.bounds) {
                if (b.name == "eq1_lower") {
                    sc.require(b.applicable && b.value <= f,
                               "lower bound " + std::to_string(b.value) + " above f");
                } else if (b.applicable) {
                    sc.require(b.value >= f, b.name + " = " + std::to_string(b.value) +
                                                 " below f = " + std::to_string(f));
                }
                if (b.name == "pachter")
                    sc.require(b.applicable == (d == 2), "pachter applicability gate");
                if (b.name == "thm3")
                    sc.require(b.applicable == r.gamma_eff.has_value(), "thm3 applicability gate");
            }
        }

        { // sharpness claims per family
            auto sc = rec.scope("sharpness");
            auto value_of = [&](const std::string& name) -> std::optional<std::int64_t> {
                for (const BoundValue& b : r.bounds)
                    if (b.name == name && b.applicable) return b.value;
                return std::nullopt;
            };
            if (fam && fam->name == "complete" && fam->param >= 2) {
                sc.require(value_of("thm1") == f, "thm1 not sharp on complete");
                sc.require(value_of("thm2") == f, "thm2 not sharp on complete");
                sc.require(value_of("thm3") == f + 1, "thm3 != n+1 on complete");
            } else if (fam && fam->name == "path") {
                sc.require(value_of("thm1") == f, "thm1 not sharp on path");
                if (fam->param >= 3)
                    sc.require(value_of("thm2") > f, "thm2 not strictly above f on path");
            } else if (fam && fam->name == "star" && fam->param >= 2) {
                sc.require(value_of("thm3") == fam->param + 6, "thm3 != leaves+6 on star");
            } else if (fam && fam->name == "doublestar") {
                sc.require(value_of("thm4") == fam->param + 29,
                           "thm4 != n+29 on double star");
            } else {
                sc.note("no sharpness claim for this graph");
            }
        }

        { // the two canonical unsolvable distributions, for every root
            auto sc = rec.scope("witness-canonical");
            for (int root = 0; root < n; ++root) {
                auto ws = solver.witness_distributions(root);
                sc.require(ws.size() == 2, "expected two canonical witnesses");
                for (size_t i = 0; i < ws.size(); ++i)
                    sc.require(!solver.is_k_solvable(ws[i], root, 1),
                               "canonical witness " + std::to_string(i) + " solvable for root " +
                                   std::to_string(root));
            }
        }

        { // reported witness is unsolvable at f-1; all size-f solvable (n <= 6)
            auto sc = rec.scope("witness-maximal");
            sc.require(r.exact->witness.size() == f - 1, "witness size is not f-1");
            sc.require(!solver.is_k_solvable(r.exact->witness, r.exact->witness_root, r.exact->k),
                       "reported witness is solvable");
            if (n <= 6 && r.exact->k == 1 && r.exact->per_root.size() == static_cast<size_t>(n)) {
                bool all_ok = true;
                std::int64_t tested = 0;
                for_each_distribution(n, f, [&](const Distribution& dist) {
                    ++tested;
                    if (!solver.is_solvable(dist)) {
                        all_ok = false;
                        return true;
                    }
                    return false;
                });
                sc.require(all_ok, "a size-f distribution is unsolvable");
                sc.note("exhausted " + std::to_string(tested) + " distributions of size " +
                        std::to_string(f));
            } else {
                sc.note("exhaustive sweep skipped (n > 6 or rooted/k-run)");
            }
        }

        if (fam && fam->name == "doublestar") {
            // The often-quoted worst case for this family (no pebbles on
            // the two centers, one pebble on each of n/2-1 leaves per side,
            // eight pebbles on another vertex) totals n+6 and is solvable,
            // so it cannot be a witness; the report records the solver's
            // derived maximal witness next to it.
            auto sc = rec.scope("doublestar-witness-note");
            const int half = fam->param / 2;
            Distribution described(n);
            for (int i = 0; i < half - 1; ++i) described[2 + i] = 1;
            for (int i = 0; i < half - 1; ++i) described[2 + half + i] = 1;
            described[n - 1] = 8;
            sc.require(described.size() == fam->param + 6,
                       "described configuration does not total n+6");
            sc.require(solver.is_solvable(described),
                       "described configuration unexpectedly unsolvable");
            sc.note("described size-" + std::to_string(described.size()) +
                    " configuration is solvable, not a witness; solver witness " +
                    join_ints(r.exact->witness.counts) + " at size " +
                    std::to_string(r.exact->witness.size()) + " for root " +
                    std::to_string(r.exact->witness_root));
        }

        { // f equals the max over roots, recomputed with a fresh solver
            auto sc = rec.scope("rooted-max-consistency");
            if (r.exact->per_root.size() == static_cast<size_t>(n)) {
                Solver fresh(g, SearchBudget{});
                std::int64_t best = 0;
                for (int root = 0; root < n; ++root) {
                    const ExactResult rr = fresh.rooted_pebbling_number(root, r.exact->k);
                    sc.require(rr.value == r.exact->per_root[static_cast<size_t>(root)],
                               "rooted value changed on recomputation, root " +
                                   std::to_string(root));
                    best = std::max(best, rr.value);
                }
                sc.require(best == f, "max of rooted values differs from f");
            } else {
                sc.note("skipped for rooted runs");
            }
        }

        if (fam && fam->name == "star" && fam->param >= 2) {
            // eq (2) on stars: exact f_k matches 4k+m-3, and the in-cell
            // greedy realizes it on every distribution of that size
            auto sc = rec.scope("star-kpebbling");
            const int m = n; // star on m vertices
            std::vector<int> leaves;
            for (int v = 1; v < n; ++v) leaves.push_back(v);
            for (int k = 1; k <= 3; ++k) {
                const std::int64_t expect = moews_star(k, m);
                const ExactResult ek = Solver(g, SearchBudget{}).pebbling_number(k);
                sc.require(ek.value == expect, "f_" + std::to_string(k) + " = " +
                                                   std::to_string(ek.value) + ", eq(2) says " +
                                                   std::to_string(expect));
                bool transports = true;
                std::int64_t seen = 0;
                for_each_distribution(n, expect, [&](const Distribution& dist) {
                    for (int target = 0; target < n; ++target) {
                        auto moves = star_k_transport(g, 0, leaves, dist, target, k);
                        if (!moves) {
                            transports = false;
                            return true;
                        }
                        if (++seen % 101 == 0) replays.push_back({dist, target, k, *moves});
                    }
                    return false;
                });
                sc.require(transports, "greedy star transport failed at size 4k+m-3, k = " +
                                           std::to_string(k));
                // the witness at size 4k+m-4 must defeat the greedy too
                sc.require(!star_k_transport(g, 0, leaves, ek.witness, ek.witness_root, k),
                           "greedy star transport succeeded on the witness");
            }
        }

    }

    { // proof constructions, their invariants, and their counting bounds
        auto sc = rec.scope("construction-path-set");
        ConstructionsReport cons;
        std::mt19937 rng(0xC0FFEE);
        for (int root = 0; root < n; ++root) {
            const PathSet ps = build_path_set(g, met, root);
            const int e = met.ecc[static_cast<size_t>(root)];
            std::vector<char> covered(static_cast<size_t>(n), 0);
            for (size_t i = 0; i < ps.paths.size(); ++i) {
                const auto& p = ps.paths[i];
                sc.require(p.back() == root, "path does not end at the root");
                sc.require(static_cast<int>(p.size()) - 1 == ps.lengths[i], "length mismatch");
                sc.require(ps.lengths[i] <= e, "path longer than the eccentricity");
                for (size_t j = 0; j + 1 < p.size(); ++j)
                    sc.require(g.has_edge(p[j], p[j + 1]), "path step is not an edge");
                std::set<int> uniq(p.begin(), p.end());
                sc.require(uniq.size() == p.size(), "path is not simple");
                for (int v : p) covered[static_cast<size_t>(v)] = 1;
            }
            sc.require(std::all_of(covered.begin(), covered.end(), [](char c) { return c == 1; }),
                       "paths do not cover V");
            sc.require(static_cast<int>(ps.paths.size()) <= n - e, "more than n-e(v) paths");
            const std::int64_t psb = path_set_bound(ps);
            const std::int64_t formula =
                e == 0 ? 1 : (static_cast<std::int64_t>(n) - e) * ((std::int64_t{1} << e) - 1) + 1;
            sc.require(psb <= formula, "path-set count exceeds the closed form");
            if (r.exact && r.exact->per_root.size() == static_cast<size_t>(n) && r.exact->k == 1)
                sc.require(r.exact->per_root[static_cast<size_t>(root)] <= psb,
                           "rooted value exceeds the path-set count");

            // pigeonhole at the threshold: some path always transports
            for (int trial = 0; trial < 5; ++trial) {
                const Distribution dist = random_distribution(n, psb, rng);
                bool delivered = false;
                for (const auto& p : ps.paths) {
                    if (auto moves = path_transport(g, dist, p)) {
                        replays.push_back({dist, root, 1, *moves});
                        delivered = true;
                        break;
                    }
                }
                sc.require(delivered, "no path transported at the pigeonhole threshold");
            }
            cons.path_sets.push_back(ps);
        }
        r.constructions = std::move(cons);
    }

    {
        auto sc = rec.scope("construction-root-disjoint");
        for (int root = 0; root < n; ++root) {
            const RootDisjointPathSystem sys = build_root_disjoint_system(g, met, root);
            const int e = met.ecc[static_cast<size_t>(root)];
            const int k = static_cast<int>(sys.paths.size());
            sc.require(k >= 1, "no path system found");
            if (e >= 1) {
                sc.require(k <= (n - 1) / e, "k exceeds floor((n-1)/e)");
                std::set<int> terms(sys.terminals.begin(), sys.terminals.end());
                sc.require(terms.size() == sys.terminals.size(), "terminals repeat");
                std::set<int> interior;
                for (size_t i = 0; i < sys.paths.size(); ++i) {
                    const auto& p = sys.paths[i];
                    sc.require(p.front() == root && p.back() == sys.terminals[i],
                               "path endpoints wrong");
                    sc.require(static_cast<int>(p.size()) - 1 == e, "path length is not e(v)");
                    sc.require(met.dist[size_t(root)][size_t(p.back())] == e,
                               "terminal not at maximum distance");
                    for (size_t j = 1; j < p.size(); ++j) {
                        sc.require(interior.insert(p[j]).second,
                                   "paths share a vertex besides the root");
                        if (j + 1 < p.size())
                            sc.require(g.has_edge(p[j - 1], p[j]) && g.has_edge(p[j], p[j + 1]),
                                       "path step is not an edge");
                    }
                }
            }
            r.constructions->systems.push_back(sys);
        }
    }

    {
        auto sc = rec.scope("construction-decomposition");
        if (r.efficient_dominating_set) {
            DominationCertificate cert{*r.efficient_dominating_set, DominationKind::efficient,
                                       static_cast<int>(r.efficient_dominating_set->size())};
            try {
                const Decomposition dec = build_decomposition_thm3(g, cert);
                std::int64_t total = 0;
                for (const auto& cell : dec.cells) total += static_cast<std::int64_t>(cell.size());
                sc.require(total == n, "efficient cells do not sum to n");
                if (n >= 2) {
                    auto tb = thm3_bound(n, d, static_cast<std::int64_t>(cert.set.size()));
                    sc.require(decomposition_bound(dec, d) == tb.value,
                               "efficient-cell count differs from thm3");
                }
                r.constructions->efficient_cells = dec;
            } catch (const Error& e) {
                sc.require(false, std::string("thm3 decomposition failed: ") + e.what());
            }
        } else {
            sc.note("no efficient dominating set");
        }
        DominationCertificate gcert{r.dominating_set, DominationKind::dominating, r.gamma};
        for (int root = 0; root < n; ++root) {
            try {
                const Decomposition dec = build_decomposition_thm4(g, met, root, gcert);
                const std::int64_t db = decomposition_bound(dec, d);
                if (n >= 2) {
                    auto tb = thm4_bound(n, d, r.gamma);
                    sc.require(db <= tb.value, "general-cell count exceeds thm4");
                    if (r.exact && r.exact->per_root.size() == static_cast<size_t>(n) &&
                        r.exact->k == 1)
                        sc.require(r.exact->per_root[static_cast<size_t>(root)] <= db,
                                   "rooted value exceeds the general-cell count");
                }
                r.constructions->general_cells.push_back(dec);
            } catch (const Error& e) {
                sc.require(false, std::string("thm4 decomposition failed at root ") +
                                      std::to_string(root) + ": " + e.what());
            }
        }
    }

    { // every move sequence emitted above replays legally and reaches its goal
        auto sc = rec.scope("certificate-replay");
        if (r.exact)
            for (const SolveCertificate& cert : r.exact->spot_checks)
                replays.push_back({cert.dist, cert.root, cert.k, cert.moves});
        std::int64_t ok = 0;
        for (const ReplayItem& item : replays) {
            if (verify_certificate(g, item.dist, item.root, item.k, item.moves))
                ++ok;
            else
                sc.require(false,
                           "certificate failed to replay (root " + std::to_string(item.root) + ")");
        }
        sc.note(std::to_string(ok) + "/" + std::to_string(replays.size()) +
                " certificates replayed");
    }
}

BoundReport analyze_one(const std::string& graph_id, const Graph& g, const AnalyzeOptions& opt) {
    BoundReport r;
    r.graph_id = graph_id;

    Timer t_metrics;
    const GraphMetrics met = metrics(g);
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.d = met.diameter;
    r.ecc = met.ecc;
    r.timing_ms.emplace_back("metrics", t_metrics.ms());

    Timer t_dom;
    const DominationCertificate dom = min_dominating_set(g);
    r.gamma = dom.size;
    r.dominating_set = dom.set;
    if (auto eff = find_efficient_dominating_set(g)) {
        r.gamma_eff = eff->size;
        r.efficient_dominating_set = eff->set;
    }
    r.timing_ms.emplace_back("domination", t_dom.ms());

    Timer t_bounds;
    const std::int64_t nn = r.n;
    const std::int64_t dd = r.d;
    std::optional<std::int64_t> geff;
    if (r.gamma_eff) geff = *r.gamma_eff;
    const TrivialBounds triv = trivial_bounds(nn, dd);
    r.bounds = {triv.lower,
                triv.upper,
                thm1_bound(nn, dd),
                thm2_bound(nn, dd),
                thm3_bound(nn, dd, geff),
                thm4_bound(nn, dd, r.gamma),
                pachter_diam2_bound(nn, dd)};
    const ComparisonPredicates preds = comparison_predicates(nn, dd, r.gamma, geff);
    auto pv = [](const char* name, const PredicateResult& p) {
        return PredicateValue{name, p.applicable, p.holds};
    };
    r.predicates = {pv("eq3", preds.eq3), pv("eq4", preds.eq4), pv("eq5", preds.eq5),
                    pv("eq6", preds.eq6), pv("eq7", preds.eq7), pv("eq8", preds.eq8)};
    const BestBound best = best_upper_bound(nn, dd, r.gamma, geff);
    r.best_name = best.name;
    r.best_value = best.value;
    r.timing_ms.emplace_back("bounds", t_bounds.ms());

    Solver solver(g, opt.budget);
    if (opt.level != AnalysisLevel::bounds_only) {
        Timer t_exact;
        try {
            if (opt.root)
                r.exact = solver.rooted_pebbling_number(*opt.root, opt.k);
            else
                r.exact = solver.pebbling_number(opt.k);
        } catch (const BudgetExceeded& e) {
            std::ostringstream msg;
            msg << "budget-exceeded [" << e.lower() << "," << e.upper() << "]: " << e.what();
            r.exact_error = msg.str();
        }
        r.timing_ms.emplace_back("exact", t_exact.ms());
    }

    // self-test fault injection: push the named bound below/above the truth
    if (opt.corrupt_bound) {
        for (BoundValue& b : r.bounds) {
            if (b.name != *opt.corrupt_bound || !b.applicable) continue;
            if (b.name == "eq1_lower")
                b.value = r.exact ? r.exact->value + 1 : b.value + 1;
            else
                b.value = r.exact ? r.exact->value - 1 : b.value - 1;
        }
    }

    if (opt.level == AnalysisLevel::full_checks) {
        Timer t_checks;
        run_graph_checks(graph_id, g, met, solver, r);
        r.timing_ms.emplace_back("checks", t_checks.ms());
    }
    return r;
}

void run_global_checks(const SearchBudget& budget, std::vector<CheckResult>& out) {
    CheckRecorder rec(out);

    { // bound dominance identities on the (n, d) grid
        auto sc = rec.scope("grid-dominance");
        std::string crossover;
        for (std::int64_t d = 2; d <= 8; ++d) {
            // smallest n at which thm2 undercuts thm1 (no closed form is
            // asserted anywhere; this is a measured, informational value)
            std::int64_t first_n = 0;
            for (std::int64_t n = d + 1; n <= 40; ++n) {
                if (thm2_bound(n, d).value < thm1_bound(n, d).value) {
                    first_n = n;
                    break;
                }
            }
            if (!crossover.empty()) crossover += ",";
            crossover += "d=" + std::to_string(d) + ":" +
                         (first_n ? "n>=" + std::to_string(first_n) : "none<=40");
        }
        for (std::int64_t n = 2; n <= 40; ++n) {
            sc.require(phi_monotone_check(n), "phi not monotone at n = " + std::to_string(n));
            for (std::int64_t d = 1; d <= n - 1; ++d) {
                const std::int64_t eq1u = trivial_bounds(n, d).upper.value;
                const std::int64_t t1 = thm1_bound(n, d).value;
                const std::int64_t t2 = thm2_bound(n, d).value;
                sc.require(t1 <= eq1u, "thm1 above eq1 at n=" + std::to_string(n) +
                                           ",d=" + std::to_string(d));
                sc.require(t2 <= eq1u, "thm2 above eq1 at n=" + std::to_string(n) +
                                           ",d=" + std::to_string(d));
                sc.require((t2 == eq1u) == (d == 1),
                           "thm2/eq1 equality gate at n=" + std::to_string(n) +
                               ",d=" + std::to_string(d));
                if (d == 1)
                    sc.require(t1 == n && t2 == n,
                               "thm1/thm2 at d=1 differ from n at n=" + std::to_string(n));
            }
        }
        sc.note("thm2 first beats thm1 at " + crossover);
    }

    { // every true predicate implies its bound inequality, exact arithmetic
        auto sc = rec.scope("grid-predicate-soundness");
        for (std::int64_t n = 2; n <= 40; ++n) {
            for (std::int64_t d = 1; d <= n - 1; ++d) {
                const std::int64_t eq1u = trivial_bounds(n, d).upper.value;
                const std::int64_t t1 = thm1_bound(n, d).value;
                const std::int64_t t2 = thm2_bound(n, d).value;
                for (std::int64_t gamma = 1; gamma <= (n + 1) / 2; ++gamma) {
                    const auto p = comparison_predicates(n, d, gamma, gamma);
                    const std::int64_t t3 = thm3_bound(n, d, gamma).value;
                    const std::int64_t t4 = thm4_bound(n, d, gamma).value;
                    auto imp = [&](const PredicateResult& pr, std::int64_t lhs, std::int64_t rhs,
                                   const char* what) {
                        if (pr.applicable && pr.holds && !(lhs <= rhs))
                            sc.require(false, std::string(what) + " violated at n=" +
                                                  std::to_string(n) + ",d=" + std::to_string(d) +
                                                  ",gamma=" + std::to_string(gamma));
                    };
                    imp(p.eq3, t3, eq1u, "eq3");
                    imp(p.eq4, t4, eq1u, "eq4");
                    imp(p.eq5, t3, t1, "eq5");
                    imp(p.eq6, t4, t1, "eq6");
                    imp(p.eq7, t3, t2, "eq7");
                    imp(p.eq8, t4, t2, "eq8");
                }
            }
        }
    }

    { // solver agrees with the exhaustive reference oracle
        auto sc = rec.scope("oracle-equivalence");
        std::int64_t compared = 0;
        for (int n = 1; n <= 4; ++n) {
            const int bits = n * (n - 1) / 2;
            for (unsigned mask = 0; mask < (1u << bits); ++mask) {
                if (!edge_mask_connected(n, mask)) continue;
                const Graph g(n, edge_mask_edges(n, mask));
                Solver solver(g, budget);
                for (std::int64_t size = 0; size <= 8; ++size) {
                    for_each_distribution(n, size, [&](const Distribution& dist) {
                        for (int root = 0; root < n; ++root) {
                            for (int k = 1; k <= 2; ++k) {
                                const bool fast = solver.is_k_solvable(dist, root, k);
                                const bool slow = naive_k_solvable(g, dist, root, k);
                                ++compared;
                                if (fast != slow)
                                    sc.require(false,
                                               "disagreement on n=" + std::to_string(n) +
                                                   " mask=" + std::to_string(mask) + " dist=" +
                                                   join_ints(dist.counts) + " root=" +
                                                   std::to_string(root) + " k=" +
                                                   std::to_string(k));
                            }
                        }
                        return false;
                    });
                }
            }
        }
        std::mt19937 rng(20020803);
        const int n5 = 5;
        const int bits5 = n5 * (n5 - 1) / 2;
        std::uniform_int_distribution<unsigned> mask_pick(0, (1u << bits5) - 1);
        std::uniform_int_distribution<int> size_pick(0, 10);
        std::uniform_int_distribution<int> root_pick(0, n5 - 1);
        std::uniform_int_distribution<int> k_pick(1, 2);
        for (int trial = 0; trial < 1000; ++trial) {
            unsigned mask = mask_pick(rng);
            while (!edge_mask_connected(n5, mask)) mask = mask_pick(rng);
            const Graph g(n5, edge_mask_edges(n5, mask));
            const Distribution dist = random_distribution(n5, size_pick(rng), rng);
            const int root = root_pick(rng);
            const int k = k_pick(rng);
            Solver solver(g, budget);
            const bool fast = solver.is_k_solvable(dist, root, k);
            const bool slow = naive_k_solvable(g, dist, root, k);
            ++compared;
            if (fast != slow)
                sc.require(false, "random trial disagreement, mask=" + std::to_string(mask) +
                                      " dist=" + join_ints(dist.counts) + " root=" +
                                      std::to_string(root) + " k=" + std::to_string(k));
        }
        sc.note(std::to_string(compared) + " solvability queries compared");
    }
}

} // namespace

BoundReport analyze_graph(const std::string& graph_id, const Graph& g, const AnalyzeOptions& opt) {
    return analyze_one(graph_id, g, opt);
}

std::vector<std::string> default_corpus() {
    std::vector<std::string> corpus;
    for (int n = 2; n <= 6; ++n) corpus.push_back("path:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) corpus.push_back("complete:" + std::to_string(n));
    for (int r = 2; r <= 5; ++r) corpus.push_back("star:" + std::to_string(r));
    corpus.push_back("doublestar:2");
    corpus.push_back("doublestar:4");
    for (int n = 3; n <= 6; ++n) corpus.push_back("cycle:" + std::to_string(n));
    corpus.push_back("corona:cycle:3");
    corpus.push_back("corona:cycle:4");
    return corpus;
}

VerifyResult run_verify(const VerifyOptions& opt) {
    VerifyResult result;
    const std::vector<std::string> corpus = opt.corpus.empty() ? default_corpus() : opt.corpus;
    result.reports.resize(corpus.size());

    AnalyzeOptions aopt;
    aopt.level = AnalysisLevel::full_checks;
    aopt.budget = opt.budget;
    aopt.corrupt_bound = opt.corrupt_bound;

    const int jobs = std::max(1, opt.jobs);
    std::atomic<size_t> next{0};
    std::vector<std::exception_ptr> errors(corpus.size());
    auto worker = [&]() {
        while (true) {
            const size_t i = next.fetch_add(1);
            if (i >= corpus.size()) break;
            try {
                const Graph g = load_graph(corpus[i]);
                result.reports[i] = analyze_one(corpus[i], g, aopt);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    if (opt.global_checks) run_global_checks(opt.budget, result.global_checks);

    result.all_passed = true;
    for (const BoundReport& r : result.reports) {
        if (r.exact_error) result.budget_exceeded = true;
        for (const CheckResult& c : r.checks)
            if (!c.pass) result.all_passed = false;
    }
    for (const CheckResult& c : result.global_checks)
        if (!c.pass) result.all_passed = false;
    if (result.budget_exceeded) result.all_passed = false;
    return result;
}

std::string verify_checked_payload(const VerifyResult& result) {
    std::ostringstream out;
    for (const BoundReport& r : result.reports) out << report_to_json(r, false) << "\n";
    for (const CheckResult& c : result.global_checks)
        out << c.name << ":" << (c.pass ? "pass" : "fail") << ":" << c.details << "\n";
    return out.str();
}

} // namespace pebbling
