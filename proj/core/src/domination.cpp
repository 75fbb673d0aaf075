#include "pebbling/domination.hpp"

#include <algorithm>
#include <functional>

namespace pebbling {

const char* domination_kind_name(DominationKind kind) {
    switch (kind) {
    case DominationKind::dominating: return "dominating";
    case DominationKind::perfect: return "perfect";
    case DominationKind::independent: return "independent";
    case DominationKind::efficient: return "efficient";
    }
    return "unknown";
}

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& s) {
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : s) in.at(static_cast<size_t>(v)) = 1;
    return in;
}

/// Enumerates size-k vertex subsets in lexicographic order until fn returns true.
bool first_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
    std::vector<int> pick(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<size_t>(i)] = i;
    if (k > n) return false;
    while (true) {
        if (fn(pick)) return true;
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) return false;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
}

} // namespace

bool is_dominating(const Graph& g, const std::vector<int>& s) {
    auto in = membership(g, s);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        bool covered = false;
        for (int u : g.neighbors(v)) {
            if (in[static_cast<size_t>(u)]) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_perfect(const Graph& g, const std::vector<int>& s) {
    auto in = membership(g, s);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in[static_cast<size_t>(v)]) continue;
        int hits = 0;
        for (int u : g.neighbors(v))
            if (in[static_cast<size_t>(u)]) ++hits;
        if (hits != 1) return false;
    }
    return true;
}

bool is_independent(const Graph& g, const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j)
            if (g.has_edge(s[i], s[j])) return false;
    return true;
}

bool is_efficient(const Graph& g, const std::vector<int>& s) {
    return !s.empty() && is_perfect(g, s) && is_independent(g, s);
}

DominationCertificate min_dominating_set(const Graph& g) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> found;
        if (first_subset(n, k, [&](const std::vector<int>& pick) {
                if (!is_dominating(g, pick)) return false;
                found = pick;
                return true;
            })) {
            return DominationCertificate{found, DominationKind::dominating, k};
        }
    }
    // unreachable: V itself dominates
    return DominationCertificate{{}, DominationKind::dominating, 0};
}

std::optional<DominationCertificate> find_efficient_dominating_set(const Graph& g) {
    const int n = g.vertex_count();
    for (int k = 1; k <= n; ++k) {
        std::vector<int> found;
        if (first_subset(n, k, [&](const std::vector<int>& pick) {
                if (!is_efficient(g, pick)) return false;
                found = pick;
                return true;
            })) {
            return DominationCertificate{found, DominationKind::efficient, k};
        }
    }
    return std::nullopt;
}

} // namespace pebbling
