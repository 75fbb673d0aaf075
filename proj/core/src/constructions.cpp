#include "pebbling/constructions.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace pebbling {

namespace {

// Shortest path from u to root as [u, ..., root], stepping to the
// smallest-index closer neighbor at every hop.
std::vector<int> shortest_path_to(const Graph& g, const GraphMetrics& m, int u, int root) {
    const auto& dist = m.dist[static_cast<size_t>(root)];
    std::vector<int> path{u};
    int cur = u;
    while (cur != root) {
        for (int v : g.neighbors(cur)) {
            if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(cur)] - 1) {
                path.push_back(v);
                cur = v;
                break;
            }
        }
    }
    return path;
}

std::int64_t checked_pow2(int e) {
    if (e < 0 || e > 62) throw Error(errc::overflow, "2^" + std::to_string(e) + " out of range");
    return std::int64_t{1} << e;
}

} // namespace

PathSet build_path_set(const Graph& g, const GraphMetrics& m, int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw Error(errc::invalid_parameter, "root out of range");
    const auto& dist = m.dist[static_cast<size_t>(root)];
    const int e = m.ecc[static_cast<size_t>(root)];

    PathSet ps;
    ps.root = root;
    std::vector<char> covered(static_cast<size_t>(n), 0);
    auto add_path = [&](int from) {
        std::vector<int> p = shortest_path_to(g, m, from, root);
        for (int v : p) covered[static_cast<size_t>(v)] = 1;
        ps.lengths.push_back(static_cast<int>(p.size()) - 1);
        ps.paths.push_back(std::move(p));
    };

    int far = root;
    for (int u = 0; u < n; ++u)
        if (dist[static_cast<size_t>(u)] == e) {
            far = u;
            break;
        }
    add_path(far);
    for (int u = 0; u < n; ++u)
        if (!covered[static_cast<size_t>(u)]) add_path(u);
    return ps;
}

std::int64_t path_set_bound(const PathSet& ps) {
    std::int64_t total = 1;
    for (int q : ps.lengths) total += checked_pow2(q) - 1;
    return total;
}

std::optional<MoveSequence> path_transport(const Graph& g, const Distribution& d,
                                           const std::vector<int>& path) {
    if (path.empty()) throw Error(errc::invalid_parameter, "empty path");
    for (int v : path)
        if (v < 0 || v >= g.vertex_count())
            throw Error(errc::invalid_parameter, "path vertex out of range");
    std::set<int> seen(path.begin(), path.end());
    if (seen.size() != path.size()) throw Error(errc::invalid_parameter, "path repeats a vertex");
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw Error(errc::invalid_parameter, "path step is not an edge");

    const size_t L = path.size() - 1;
    std::vector<std::int64_t> c(path.size());
    for (size_t i = 0; i < path.size(); ++i) c[i] = d[path[i]];
    if (c[L] >= 1) return MoveSequence{};

    MoveSequence moves;
    for (size_t i = 0; i < L; ++i) {
        const std::int64_t t = c[i] / 2;
        c[i] -= 2 * t;
        c[i + 1] += t;
        for (std::int64_t j = 0; j < t; ++j) moves.push_back({path[i], path[i + 1]});
        if (c[L] >= 1) return moves;
    }
    return std::nullopt;
}

RootDisjointPathSystem build_root_disjoint_system(const Graph& g, const GraphMetrics& m,
                                                  int root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw Error(errc::invalid_parameter, "root out of range");
    const int e = m.ecc[static_cast<size_t>(root)];

    RootDisjointPathSystem sys;
    sys.root = root;
    if (e == 0) { // single vertex
        sys.terminals = {root};
        sys.paths = {{root}};
        return sys;
    }

    // every shortest path from the root to every most-distant vertex
    const auto& dist = m.dist[static_cast<size_t>(root)];
    std::vector<std::vector<int>> candidates; // stored root-first
    std::vector<int> partial{root};
    std::function<void(int)> grow = [&](int cur) {
        if (dist[static_cast<size_t>(cur)] == e) {
            candidates.push_back(partial);
            return;
        }
        for (int v : g.neighbors(cur)) {
            if (dist[static_cast<size_t>(v)] == dist[static_cast<size_t>(cur)] + 1) {
                partial.push_back(v);
                grow(v);
                partial.pop_back();
            }
        }
    };
    grow(root);
    std::sort(candidates.begin(), candidates.end());

    // max set of candidates pairwise sharing only the root; include-first DFS
    // over the sorted candidates keeps the lex-smallest maximum system
    std::vector<size_t> best, cur;
    std::function<void(size_t)> pick = [&](size_t idx) {
        if (cur.size() + (candidates.size() - idx) <= best.size()) return;
        if (idx == candidates.size()) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        bool compatible = true;
        for (size_t chosen : cur) {
            const auto& a = candidates[chosen];
            const auto& b = candidates[idx];
            for (size_t i = 1; i < a.size() && compatible; ++i)
                for (size_t j = 1; j < b.size(); ++j)
                    if (a[i] == b[j]) {
                        compatible = false;
                        break;
                    }
            if (!compatible) break;
        }
        if (compatible) {
            cur.push_back(idx);
            pick(idx + 1);
            cur.pop_back();
        }
        pick(idx + 1);
    };
    pick(0);

    for (size_t idx : best) {
        sys.paths.push_back(candidates[idx]);
        sys.terminals.push_back(candidates[idx].back());
    }
    return sys;
}

Decomposition build_decomposition_thm3(const Graph& g, const DominationCertificate& cert) {
    if (!is_efficient(g, cert.set))
        throw Error(errc::not_efficient, "certificate is not an efficient dominating set");
    Decomposition dec;
    dec.centers = cert.set;
    std::vector<int> owner(static_cast<size_t>(g.vertex_count()), -1);
    for (int s : cert.set) {
        std::vector<int> cell{s};
        for (int v : g.neighbors(s)) cell.push_back(v);
        std::sort(cell.begin(), cell.end());
        for (int v : cell) {
            if (owner[static_cast<size_t>(v)] != -1)
                throw Error(errc::invalid_invariants, "closed neighborhoods overlap");
            owner[static_cast<size_t>(v)] = s;
        }
        dec.cells.push_back(std::move(cell));
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (owner[static_cast<size_t>(v)] == -1)
            throw Error(errc::invalid_invariants, "closed neighborhoods miss a vertex");
    return dec;
}

Decomposition build_decomposition_thm4(const Graph& g, const GraphMetrics& m, int root,
                                       const DominationCertificate& cert) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw Error(errc::invalid_parameter, "root out of range");
    if (!is_dominating(g, cert.set))
        throw Error(errc::not_dominating, "certificate is not a dominating set");

    std::vector<char> in_s(static_cast<size_t>(n), 0);
    for (int s : cert.set) in_s[static_cast<size_t>(s)] = 1;

    Decomposition dec;
    dec.root = root;
    dec.centers = cert.set;
    std::vector<char> used_nbr(static_cast<size_t>(n), 0); // union of earlier N_{s_j}
    for (int s : cert.set) {
        int w = s;
        if (m.dist[static_cast<size_t>(root)][static_cast<size_t>(s)] >= 2) {
            // predecessor of s on a shortest path from the root
            std::vector<int> p = shortest_path_to(g, m, s, root); // [s, w, ..., root]
            w = p[1];
        }
        dec.connectors.push_back(w);

        std::set<int> cell{w, s};
        for (int v : g.neighbors(s))
            if (!in_s[static_cast<size_t>(v)] && !used_nbr[static_cast<size_t>(v)]) cell.insert(v);
        for (int v : g.neighbors(s))
            if (!in_s[static_cast<size_t>(v)]) used_nbr[static_cast<size_t>(v)] = 1;
        dec.cells.emplace_back(cell.begin(), cell.end());
    }

    // proof obligations: cover V, diameter <= 2, sum |A_i| <= n + gamma,
    // and the root can be served from every cell
    std::vector<char> covered(static_cast<size_t>(n), 0);
    std::int64_t total = 0;
    const int d = m.diameter;
    for (size_t i = 0; i < dec.cells.size(); ++i) {
        const auto& cell = dec.cells[i];
        total += static_cast<std::int64_t>(cell.size());
        bool root_in_cell = false;
        for (int v : cell) {
            covered[static_cast<size_t>(v)] = 1;
            if (v == root) root_in_cell = true;
            for (int u : cell)
                if (m.dist[static_cast<size_t>(v)][static_cast<size_t>(u)] > 2)
                    throw Error(errc::invalid_invariants, "cell diameter exceeds 2");
        }
        const int wi = dec.connectors[i];
        if (!root_in_cell &&
            m.dist[static_cast<size_t>(root)][static_cast<size_t>(wi)] > std::max(d - 1, 0))
            throw Error(errc::invalid_invariants, "connector too far from the root");
    }
    for (int v = 0; v < n; ++v)
        if (!covered[static_cast<size_t>(v)])
            throw Error(errc::invalid_invariants, "cells do not cover the vertex set");
    if (total > static_cast<std::int64_t>(n) + static_cast<std::int64_t>(cert.set.size()))
        throw Error(errc::invalid_invariants, "cell sizes exceed n + gamma");
    return dec;
}

std::int64_t decomposition_bound(const Decomposition& dec, int diameter) {
    std::int64_t total = 1;
    for (const auto& cell : dec.cells)
        total += checked_pow2(diameter + 1) + static_cast<std::int64_t>(cell.size()) - 4;
    return total;
}

std::optional<MoveSequence> star_k_transport(const Graph& g, int center,
                                             const std::vector<int>& leaves,
                                             const Distribution& d, int target, int k) {
    if (k < 1) throw Error(errc::invalid_parameter, "k must be positive");
    for (int l : leaves)
        if (!g.has_edge(center, l))
            throw Error(errc::invalid_parameter, "leaf not adjacent to the star center");
    const bool target_is_center = target == center;
    if (!target_is_center && std::find(leaves.begin(), leaves.end(), target) == leaves.end())
        throw Error(errc::invalid_parameter, "target outside the star");

    MoveSequence moves;
    std::int64_t got = d[target];
    if (got >= k) return moves;

    if (target_is_center) {
        for (int l : leaves) {
            const std::int64_t t = std::min<std::int64_t>(d[l] / 2, k - got);
            for (std::int64_t i = 0; i < t; ++i) moves.push_back({l, center});
            got += t;
            if (got >= k) return moves;
        }
        return std::nullopt;
    }

    // accumulate pairs on the center from the other leaves, then push pairs
    // down to the target; optimal on a star
    std::int64_t on_center = d[center];
    const std::int64_t need_on_center = 2 * (k - got);
    for (int l : leaves) {
        if (l == target || on_center >= need_on_center) continue;
        const std::int64_t t = std::min<std::int64_t>(d[l] / 2, need_on_center - on_center);
        for (std::int64_t i = 0; i < t; ++i) moves.push_back({l, center});
        on_center += t;
    }
    const std::int64_t push = std::min(on_center / 2, k - got);
    for (std::int64_t i = 0; i < push; ++i) moves.push_back({center, target});
    got += push;
    if (got >= k) return moves;
    return std::nullopt;
}

} // namespace pebbling
