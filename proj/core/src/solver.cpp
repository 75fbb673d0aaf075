#include "pebbling/solver.hpp"

#include <algorithm>
#include <cstring>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

namespace pebbling {

std::optional<Distribution> replay_moves(const Graph& g, const Distribution& d,
                                         const MoveSequence& moves) {
    if (static_cast<int>(d.counts.size()) != g.vertex_count()) return std::nullopt;
    Distribution cur = d;
    for (const Move& mv : moves) {
        if (mv.from < 0 || mv.from >= g.vertex_count() || mv.to < 0 || mv.to >= g.vertex_count())
            return std::nullopt;
        if (!g.has_edge(mv.from, mv.to)) return std::nullopt;
        if (cur[mv.from] < 2) return std::nullopt;
        cur[mv.from] -= 2;
        cur[mv.to] += 1;
    }
    return cur;
}

bool verify_certificate(const Graph& g, const Distribution& d, int root, int k,
                        const MoveSequence& moves) {
    auto final = replay_moves(g, d, moves);
    return final && root >= 0 && root < g.vertex_count() && (*final)[root] >= k;
}

namespace {

constexpr int kMaxSolverN = 16;
constexpr int kMaxCount = 65535;
constexpr std::int64_t kMaxK = 1'000'000;

struct Cfg {
    std::array<std::uint16_t, kMaxSolverN> a{};

    bool operator==(const Cfg&) const = default;
};

struct CfgHash {
    size_t operator()(const Cfg& c) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto x : c.a) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

struct MoveUV {
    std::uint8_t from = 0;
    std::uint8_t to = 0;
};

// thrown internally; public entry points convert to BudgetExceeded
struct BudgetStop {};

} // namespace

struct Solver::Impl {
    Graph g;
    GraphMetrics met;
    SearchBudget budget;
    std::int64_t visited = 0;

    struct RootCtx {
        int root = 0;
        int k = 1;
        int ecc = 0;
        std::vector<int> dist;              // dist to root
        std::vector<std::int64_t> threshold; // k * 2^dist; at or above => solvable
        std::vector<int> shift;             // ecc - dist (potential weight exponent)
        std::int64_t potential_target = 0;  // k * 2^ecc
        std::vector<MoveUV> moves;          // directed edges, progress moves first
        std::vector<int> parent;            // smallest closer neighbor (-1 at root)
        std::vector<int> far_order;         // non-root vertices, farthest first
        std::vector<Cfg> max_unsolvable;    // dominance store: known maximal unsolvable
        std::unordered_map<Cfg, bool, CfgHash> memo;
    };

    std::map<std::pair<int, int>, std::unique_ptr<RootCtx>> contexts;

    Impl(const Graph& graph, SearchBudget b) : g(graph), met(metrics(graph)), budget(b) {}

    int n() const { return g.vertex_count(); }

    void check_graph_budget() const {
        if (n() > budget.max_n || n() > kMaxSolverN)
            throw Error(errc::budget_exceeded,
                        "graph order " + std::to_string(n()) + " exceeds solver cap " +
                            std::to_string(std::min(budget.max_n, kMaxSolverN)));
    }

    void count_node() {
        if (++visited > budget.max_configs) throw BudgetStop{};
    }

    RootCtx& get_ctx(int root, int k) {
        auto key = std::make_pair(root, k);
        auto it = contexts.find(key);
        if (it != contexts.end()) return *it->second;

        auto ctx = std::make_unique<RootCtx>();
        ctx->root = root;
        ctx->k = k;
        ctx->dist = met.dist[static_cast<size_t>(root)];
        ctx->ecc = met.ecc[static_cast<size_t>(root)];
        ctx->potential_target = static_cast<std::int64_t>(k) << ctx->ecc;
        ctx->threshold.resize(static_cast<size_t>(n()));
        ctx->shift.resize(static_cast<size_t>(n()));
        ctx->parent.assign(static_cast<size_t>(n()), -1);
        for (int u = 0; u < n(); ++u) {
            const int du = ctx->dist[static_cast<size_t>(u)];
            ctx->threshold[static_cast<size_t>(u)] = static_cast<std::int64_t>(k) << du;
            ctx->shift[static_cast<size_t>(u)] = ctx->ecc - du;
            if (u != root) {
                for (int v : g.neighbors(u)) {
                    if (ctx->dist[static_cast<size_t>(v)] == du - 1) {
                        ctx->parent[static_cast<size_t>(u)] = v;
                        break; // neighbors sorted: smallest wins
                    }
                }
            }
        }
        for (auto [u, v] : g.edges()) {
            ctx->moves.push_back({static_cast<std::uint8_t>(u), static_cast<std::uint8_t>(v)});
            ctx->moves.push_back({static_cast<std::uint8_t>(v), static_cast<std::uint8_t>(u)});
        }
        std::sort(ctx->moves.begin(), ctx->moves.end(), [&](const MoveUV& x, const MoveUV& y) {
            const int dx = ctx->dist[x.to], dy = ctx->dist[y.to];
            if (dx != dy) return dx < dy;
            if (x.from != y.from) return x.from < y.from;
            return x.to < y.to;
        });
        for (int u = 0; u < n(); ++u)
            if (u != root) ctx->far_order.push_back(u);
        std::sort(ctx->far_order.begin(), ctx->far_order.end(), [&](int x, int y) {
            const int dx = ctx->dist[static_cast<size_t>(x)], dy = ctx->dist[static_cast<size_t>(y)];
            if (dx != dy) return dx > dy;
            return x < y;
        });

        // canonical unsolvable distributions seed the dominance store
        if (k - 1 <= kMaxCount) {
            Cfg a{};
            for (int u = 0; u < n(); ++u) a.a[static_cast<size_t>(u)] = 1;
            a.a[static_cast<size_t>(root)] = static_cast<std::uint16_t>(k - 1);
            ctx->max_unsolvable.push_back(a);
        }
        if (n() > 1) {
            int w = ctx->far_order.front(); // smallest index at maximum distance
            std::int64_t pile = ctx->threshold[static_cast<size_t>(w)] - 1;
            if (pile <= kMaxCount) {
                Cfg b{};
                b.a[static_cast<size_t>(w)] = static_cast<std::uint16_t>(pile);
                ctx->max_unsolvable.push_back(b);
            }
        }

        auto& ref = *ctx;
        contexts.emplace(key, std::move(ctx));
        return ref;
    }

    // +1 solvable, -1 unsolvable, 0 unknown
    int quick(const Cfg& cfg, RootCtx& ctx) {
        if (cfg.a[static_cast<size_t>(ctx.root)] >= ctx.k) return 1;
        std::int64_t phi = 0;
        for (int u = 0; u < n(); ++u) {
            const std::int64_t c = cfg.a[static_cast<size_t>(u)];
            if (c >= ctx.threshold[static_cast<size_t>(u)]) return 1;
            phi += c << ctx.shift[static_cast<size_t>(u)];
        }
        if (phi < ctx.potential_target) return -1;
        for (const Cfg& dom : ctx.max_unsolvable) {
            bool below = true;
            for (int u = 0; u < n(); ++u) {
                if (cfg.a[static_cast<size_t>(u)] > dom.a[static_cast<size_t>(u)]) {
                    below = false;
                    break;
                }
            }
            if (below) return -1;
        }
        auto it = ctx.memo.find(cfg);
        if (it != ctx.memo.end()) return it->second ? 1 : -1;
        return 0;
    }

    // Far-to-near halving sweep toward the root along BFS parents. Sound but
    // incomplete; resolves most solvable configurations without expansion.
    bool greedy_probe(const Cfg& cfg, RootCtx& ctx, MoveSequence* out) {
        std::array<std::int32_t, kMaxSolverN> c{};
        for (int u = 0; u < n(); ++u) c[static_cast<size_t>(u)] = cfg.a[static_cast<size_t>(u)];
        const int root = ctx.root;
        if (c[static_cast<size_t>(root)] >= ctx.k) return true;
        for (int u : ctx.far_order) {
            std::int32_t t = c[static_cast<size_t>(u)] / 2;
            if (t <= 0) continue;
            const int p = ctx.parent[static_cast<size_t>(u)];
            if (p == root) t = std::min(t, ctx.k - c[static_cast<size_t>(root)]);
            c[static_cast<size_t>(u)] -= 2 * t;
            c[static_cast<size_t>(p)] += t;
            if (out)
                for (std::int32_t i = 0; i < t; ++i) out->push_back({u, p});
            if (c[static_cast<size_t>(root)] >= ctx.k) return true;
        }
        return false;
    }

    struct Frame {
        Cfg cfg;
        std::uint32_t mi = 0;
    };

    bool dfs(const Cfg& start, RootCtx& ctx) {
        std::vector<Frame> st;
        st.push_back({start, 0});
        bool ret = false;
        bool returning = false;
        while (!st.empty()) {
            Frame& f = st.back();
            if (returning && ret) {
                ctx.memo.emplace(f.cfg, true);
                st.pop_back();
                continue;
            }
            returning = false;
            bool solved = false;
            bool descended = false;
            while (f.mi < ctx.moves.size()) {
                const MoveUV mv = ctx.moves[f.mi++];
                if (f.cfg.a[mv.from] < 2) continue;
                Cfg child = f.cfg;
                child.a[mv.from] -= 2;
                child.a[mv.to] += 1;
                const int q = quick(child, ctx);
                if (q > 0) {
                    solved = true;
                    break;
                }
                if (q < 0) continue;
                count_node();
                st.push_back({child, 0});
                descended = true;
                break;
            }
            if (descended) continue;
            ctx.memo.emplace(st.back().cfg, solved);
            st.pop_back();
            ret = solved;
            returning = true;
        }
        return ret;
    }

    bool decide(const Cfg& cfg, RootCtx& ctx) {
        const int q = quick(cfg, ctx);
        if (q != 0) return q > 0;
        count_node();
        if (greedy_probe(cfg, ctx, nullptr)) {
            ctx.memo.emplace(cfg, true);
            return true;
        }
        return dfs(cfg, ctx);
    }

    // Canonical move extraction: a deterministic function of (cfg, root, k),
    // independent of what the caches currently hold.
    void extract_moves(Cfg cfg, RootCtx& ctx, MoveSequence& out) {
        out.clear();
        while (cfg.a[static_cast<size_t>(ctx.root)] < ctx.k) {
            MoveSequence greedy;
            if (greedy_probe(cfg, ctx, &greedy)) {
                out.insert(out.end(), greedy.begin(), greedy.end());
                return;
            }
            bool stepped = false;
            for (const MoveUV& mv : ctx.moves) {
                if (cfg.a[mv.from] < 2) continue;
                Cfg child = cfg;
                child.a[mv.from] -= 2;
                child.a[mv.to] += 1;
                if (decide(child, ctx)) {
                    out.push_back({mv.from, mv.to});
                    cfg = child;
                    stepped = true;
                    break;
                }
            }
            if (!stepped)
                throw Error(errc::invalid_invariants,
                            "certificate extraction stalled on a solvable configuration");
        }
    }

    Cfg to_cfg(const Distribution& d) const {
        if (static_cast<int>(d.counts.size()) != n())
            throw Error(errc::invalid_parameter, "distribution length does not match graph order");
        Cfg cfg{};
        std::int64_t total = 0;
        for (int u = 0; u < n(); ++u) {
            const int c = d.counts[static_cast<size_t>(u)];
            if (c < 0) throw Error(errc::invalid_parameter, "negative pebble count");
            if (c > kMaxCount)
                throw Error(errc::budget_exceeded, "per-vertex count exceeds solver cap");
            total += c;
            cfg.a[static_cast<size_t>(u)] = static_cast<std::uint16_t>(c);
        }
        if (total > budget.max_pebbles || total > kMaxCount)
            throw Error(errc::budget_exceeded, "distribution size exceeds max_pebbles budget");
        return cfg;
    }

    Distribution to_distribution(const Cfg& cfg) const {
        Distribution d(n());
        for (int u = 0; u < n(); ++u) d[u] = cfg.a[static_cast<size_t>(u)];
        return d;
    }

    static void validate_root_k(int root, int k, int n) {
        if (root < 0 || root >= n) throw Error(errc::invalid_parameter, "root out of range");
        if (k < 1 || k > kMaxK) throw Error(errc::invalid_parameter, "k must be in [1, 1e6]");
    }

    bool solvable_query(const Distribution& d, int root, int k, MoveSequence* moves) {
        check_graph_budget();
        validate_root_k(root, k, n());
        Cfg cfg = to_cfg(d);
        RootCtx& ctx = get_ctx(root, k);
        try {
            const bool ok = decide(cfg, ctx);
            if (ok && moves) extract_moves(cfg, ctx, *moves);
            return ok;
        } catch (const BudgetStop&) {
            throw BudgetExceeded("solvability search exceeded max_configs", 0,
                                 std::numeric_limits<std::int64_t>::max());
        }
    }

    // first unsolvable distribution in the capped box at size s, lex order
    std::optional<Cfg> first_unsolvable_at(const std::vector<std::int64_t>& caps, std::int64_t s,
                                           RootCtx& ctx) {
        const int nn = n();
        std::vector<std::int64_t> suffix(static_cast<size_t>(nn) + 1, 0);
        for (int i = nn - 1; i >= 0; --i)
            suffix[static_cast<size_t>(i)] = suffix[static_cast<size_t>(i) + 1] +
                                             caps[static_cast<size_t>(i)];
        Cfg cfg{};
        std::optional<Cfg> hit;
        std::function<bool(int, std::int64_t)> rec = [&](int idx, std::int64_t rem) {
            if (idx == nn) {
                if (!decide(cfg, ctx)) {
                    hit = cfg;
                    return true;
                }
                return false;
            }
            const std::int64_t lo = std::max<std::int64_t>(0, rem - suffix[static_cast<size_t>(idx) + 1]);
            const std::int64_t hi = std::min(caps[static_cast<size_t>(idx)], rem);
            for (std::int64_t c = lo; c <= hi; ++c) {
                cfg.a[static_cast<size_t>(idx)] = static_cast<std::uint16_t>(c);
                if (rec(idx + 1, rem - c)) return true;
            }
            cfg.a[static_cast<size_t>(idx)] = 0;
            return false;
        };
        rec(0, s);
        return hit;
    }

    ExactResult rooted(int root, int k) {
        check_graph_budget();
        validate_root_k(root, k, n());
        RootCtx& ctx = get_ctx(root, k);

        std::vector<std::int64_t> caps(static_cast<size_t>(n()));
        std::int64_t box_total = 0;
        for (int u = 0; u < n(); ++u) {
            caps[static_cast<size_t>(u)] = ctx.threshold[static_cast<size_t>(u)] - 1;
            box_total += caps[static_cast<size_t>(u)];
        }
        // f >= n+k-1 (k-1 on the root, one pebble elsewhere is unsolvable)
        // and f >= k*2^ecc (a pile of k*2^ecc-1 at maximum distance is unsolvable)
        const std::int64_t known_lower =
            std::max<std::int64_t>(static_cast<std::int64_t>(n()) + k - 1, ctx.potential_target);
        const std::int64_t max_cap =
            *std::max_element(caps.begin(), caps.end());
        if (box_total > budget.max_pebbles || max_cap > kMaxCount)
            throw BudgetExceeded("witness box size " + std::to_string(box_total) +
                                     " exceeds max_pebbles budget",
                                 known_lower, box_total + 1);

        ExactResult res;
        res.k = k;
        res.witness_root = root;
        for (std::int64_t s = box_total;; --s) {
            std::optional<Cfg> witness;
            try {
                witness = first_unsolvable_at(caps, s, ctx);
            } catch (const BudgetStop&) {
                throw BudgetExceeded("exact search exceeded max_configs at size " +
                                         std::to_string(s),
                                     known_lower, s + 1);
            }
            if (witness) {
                res.value = s + 1;
                res.witness = to_distribution(*witness);
                ctx.max_unsolvable.push_back(*witness);
                break;
            }
            if (s == 0) {
                // cannot happen: the empty distribution is never k-solvable
                throw Error(errc::invalid_invariants, "no unsolvable distribution found");
            }
        }
        return res;
    }

    void add_spot_checks(ExactResult& res) {
        const int root = res.witness_root;
        const int k = res.k;
        RootCtx& ctx = get_ctx(root, k);
        const std::int64_t f = res.value;
        std::vector<Distribution> samples;

        Distribution bumped = res.witness;
        if (n() > 1) {
            bumped[ctx.far_order.front()] += 1;
        } else {
            bumped[root] += 1;
        }
        samples.push_back(bumped);

        if (n() > 1 && f <= kMaxCount) {
            Distribution pile(n());
            pile[ctx.far_order.front()] = static_cast<int>(f);
            samples.push_back(pile);
        }

        Distribution spread(n());
        const std::int64_t base = f / n();
        const std::int64_t extra = f % n();
        if (base + 1 <= kMaxCount) {
            for (int u = 0; u < n(); ++u)
                spread[u] = static_cast<int>(base + (u < extra ? 1 : 0));
            samples.push_back(spread);
        }

        for (const Distribution& d : samples) {
            SolveCertificate cert;
            cert.root = root;
            cert.k = k;
            cert.dist = d;
            try {
                extract_moves(to_cfg(d), ctx, cert.moves);
            } catch (const BudgetStop&) {
                throw BudgetExceeded("certificate extraction exceeded max_configs", res.value,
                                     res.value);
            }
            res.spot_checks.push_back(std::move(cert));
        }
    }
};

Solver::Solver(const Graph& g, SearchBudget budget)
    : impl_(std::make_unique<Impl>(g, budget)) {}

Solver::~Solver() = default;

const Graph& Solver::graph() const { return impl_->g; }
const GraphMetrics& Solver::metric() const { return impl_->met; }
std::int64_t Solver::configs_visited() const { return impl_->visited; }

bool Solver::is_k_solvable(const Distribution& d, int root, int k, MoveSequence* moves) {
    return impl_->solvable_query(d, root, k, moves);
}

bool Solver::is_solvable(const Distribution& d) {
    for (int v = 0; v < impl_->n(); ++v)
        if (!impl_->solvable_query(d, v, 1, nullptr)) return false;
    return true;
}

ExactResult Solver::rooted_pebbling_number(int root, int k) {
    ExactResult res = impl_->rooted(root, k);
    impl_->add_spot_checks(res);
    return res;
}

ExactResult Solver::pebbling_number(int k) {
    impl_->check_graph_budget();
    const int nn = impl_->n();
    std::vector<ExactResult> rooted;
    rooted.reserve(static_cast<size_t>(nn));
    for (int v = 0; v < nn; ++v) {
        try {
            rooted.push_back(impl_->rooted(v, k));
        } catch (const BudgetExceeded& e) {
            // remaining roots contribute their box upper bounds
            std::int64_t lower = e.lower();
            std::int64_t upper = e.upper();
            for (const ExactResult& r : rooted) {
                lower = std::max(lower, r.value);
                upper = std::max(upper, r.value);
            }
            for (int w = v + 1; w < nn; ++w) {
                auto& wctx = impl_->get_ctx(w, k);
                std::int64_t box = 0;
                for (int u = 0; u < nn; ++u)
                    box += wctx.threshold[static_cast<size_t>(u)] - 1;
                upper = std::max(upper, box + 1);
            }
            throw BudgetExceeded(e.what(), lower, upper);
        }
    }
    int worst = 0;
    for (int v = 1; v < nn; ++v)
        if (rooted[static_cast<size_t>(v)].value > rooted[static_cast<size_t>(worst)].value)
            worst = v;
    ExactResult res = rooted[static_cast<size_t>(worst)];
    for (const ExactResult& r : rooted) res.per_root.push_back(r.value);
    impl_->add_spot_checks(res);
    return res;
}

std::vector<Distribution> Solver::witness_distributions(int root) const {
    const int nn = impl_->n();
    if (root < 0 || root >= nn) throw Error(errc::invalid_parameter, "root out of range");
    std::vector<Distribution> out;
    Distribution a(nn);
    for (int u = 0; u < nn; ++u) a[u] = (u == root) ? 0 : 1;
    out.push_back(a);

    const auto& dist = impl_->met.dist[static_cast<size_t>(root)];
    int w = root;
    for (int u = 0; u < nn; ++u)
        if (dist[static_cast<size_t>(u)] > dist[static_cast<size_t>(w)]) w = u;
    const int dw = dist[static_cast<size_t>(w)];
    if (dw > 30)
        throw Error(errc::overflow,
                    "2^" + std::to_string(dw) + " - 1 pebbles exceed the count range");
    Distribution b(nn);
    b[w] = (1 << dw) - 1;
    out.push_back(b);
    return out;
}

bool is_k_solvable(const Graph& g, const Distribution& d, int root, int k, MoveSequence* moves,
                   const SearchBudget& budget) {
    Solver s(g, budget);
    return s.is_k_solvable(d, root, k, moves);
}

bool is_solvable(const Graph& g, const Distribution& d, const SearchBudget& budget) {
    Solver s(g, budget);
    return s.is_solvable(d);
}

ExactResult rooted_pebbling_number(const Graph& g, int root, int k, const SearchBudget& budget) {
    Solver s(g, budget);
    return s.rooted_pebbling_number(root, k);
}

ExactResult pebbling_number(const Graph& g, int k, const SearchBudget& budget) {
    Solver s(g, budget);
    return s.pebbling_number(k);
}

std::vector<Distribution> witness_distributions(const Graph& g, int root) {
    Solver s(g);
    return s.witness_distributions(root);
}

} // namespace pebbling
