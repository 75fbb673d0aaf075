#include "pebbling/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

namespace pebbling {

const char* errc_name(errc code) {
    switch (code) {
    case errc::malformed_edge: return "malformed-edge";
    case errc::loop_or_multiedge: return "loop-or-multiedge";
    case errc::disconnected_graph: return "disconnected-graph";
    case errc::invalid_parameter: return "invalid-parameter";
    case errc::invalid_invariants: return "invalid-invariants";
    case errc::overflow: return "overflow";
    case errc::no_efficient_set: return "inapplicable-no-efficient-set";
    case errc::not_efficient: return "not-efficient";
    case errc::not_dominating: return "not-dominating";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::bad_input: return "bad-input";
    }
    return "unknown";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 1) throw Error(errc::invalid_parameter, "graph needs at least one vertex");
    std::set<Edge> seen;
    for (Edge& e : edges) {
        auto [u, v] = e;
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::malformed_edge, "edge endpoint out of range 0.." +
                                                  std::to_string(n - 1));
        if (u == v) throw Error(errc::loop_or_multiedge, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(e.first, e.second);
        if (!seen.insert(e).second)
            throw Error(errc::loop_or_multiedge, "duplicate edge " + std::to_string(e.first) + "-" +
                                                     std::to_string(e.second));
    }
    edges_.assign(seen.begin(), seen.end());
    adj_.assign(static_cast<size_t>(n), {});
    for (auto [u, v] : edges_) {
        adj_[static_cast<size_t>(u)].push_back(v);
        adj_[static_cast<size_t>(v)].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // connectivity from vertex 0
    std::vector<char> visited(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    visited[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj_[static_cast<size_t>(u)]) {
            if (!visited[static_cast<size_t>(v)]) {
                visited[static_cast<size_t>(v)] = 1;
                ++reached;
                q.push(v);
            }
        }
    }
    if (reached != n)
        throw Error(errc::disconnected_graph, "graph is disconnected (" + std::to_string(reached) +
                                                  " of " + std::to_string(n) +
                                                  " vertices reachable from 0)");
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

GraphMetrics metrics(const Graph& g) {
    const int n = g.vertex_count();
    GraphMetrics m;
    m.dist.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), -1));
    m.ecc.assign(static_cast<size_t>(n), 0);
    for (int s = 0; s < n; ++s) {
        auto& row = m.dist[static_cast<size_t>(s)];
        std::queue<int> q;
        row[static_cast<size_t>(s)] = 0;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : g.neighbors(u)) {
                if (row[static_cast<size_t>(v)] < 0) {
                    row[static_cast<size_t>(v)] = row[static_cast<size_t>(u)] + 1;
                    q.push(v);
                }
            }
        }
        m.ecc[static_cast<size_t>(s)] = *std::max_element(row.begin(), row.end());
    }
    m.diameter = *std::max_element(m.ecc.begin(), m.ecc.end());
    return m;
}

namespace {

int parse_int(const std::string& tok, const std::string& what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(errc::invalid_parameter, "bad " + what + ": '" + tok + "'");
    return value;
}

std::vector<Edge> path_edges(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return e;
}

const std::set<std::string>& family_names() {
    static const std::set<std::string> names = {"path",       "cycle",  "complete",
                                                "star",       "doublestar", "corona"};
    return names;
}

} // namespace

Graph generate(const std::string& family_spec) {
    auto colon = family_spec.find(':');
    if (colon == std::string::npos)
        throw Error(errc::invalid_parameter, "family spec needs a parameter: '" + family_spec + "'");
    const std::string name = family_spec.substr(0, colon);
    const std::string rest = family_spec.substr(colon + 1);
    if (rest.empty())
        throw Error(errc::invalid_parameter, "family spec needs a parameter: '" + family_spec + "'");

    if (name == "path") {
        int n = parse_int(rest, "path order");
        if (n < 2) throw Error(errc::invalid_parameter, "path:n needs n >= 2");
        return Graph(n, path_edges(n));
    }
    if (name == "cycle") {
        int n = parse_int(rest, "cycle order");
        if (n < 3) throw Error(errc::invalid_parameter, "cycle:n needs n >= 3");
        auto e = path_edges(n);
        e.emplace_back(0, n - 1);
        return Graph(n, e);
    }
    if (name == "complete") {
        int n = parse_int(rest, "complete order");
        if (n < 1) throw Error(errc::invalid_parameter, "complete:n needs n >= 1");
        std::vector<Edge> e;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
        return Graph(n, e);
    }
    if (name == "star") {
        int r = parse_int(rest, "star leaf count");
        if (r < 1) throw Error(errc::invalid_parameter, "star:r needs r >= 1");
        std::vector<Edge> e;
        for (int i = 1; i <= r; ++i) e.emplace_back(0, i);
        return Graph(r + 1, e);
    }
    if (name == "doublestar") {
        int n = parse_int(rest, "doublestar leaf total");
        if (n < 2 || n % 2 != 0)
            throw Error(errc::invalid_parameter, "doublestar:n needs even n >= 2");
        const int half = n / 2;
        std::vector<Edge> e;
        e.emplace_back(0, 1);
        for (int i = 0; i < half; ++i) e.emplace_back(0, 2 + i);
        for (int i = 0; i < half; ++i) e.emplace_back(1, 2 + half + i);
        return Graph(n + 2, e);
    }
    if (name == "corona") {
        Graph base = generate(rest);
        const int b = base.vertex_count();
        std::vector<Edge> e = base.edges();
        for (int i = 0; i < b; ++i) e.emplace_back(i, b + i);
        return Graph(2 * b, e);
    }
    throw Error(errc::invalid_parameter, "unknown family '" + name + "'");
}

bool is_family_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) return false;
    return family_names().count(spec.substr(0, colon)) > 0;
}

Graph read_edge_list(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
    }
    if (tokens.size() < 2) throw Error(errc::bad_input, "edge list: missing 'n m' header");
    const int n = parse_int(tokens[0], "vertex count");
    const int m = parse_int(tokens[1], "edge count");
    if (m < 0 || tokens.size() != static_cast<size_t>(2 + 2 * m))
        throw Error(errc::bad_input, "edge list: expected " + std::to_string(2 * m) +
                                         " endpoint tokens, got " +
                                         std::to_string(tokens.size() - 2));
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i)
        edges.emplace_back(parse_int(tokens[static_cast<size_t>(2 + 2 * i)], "edge endpoint"),
                           parse_int(tokens[static_cast<size_t>(3 + 2 * i)], "edge endpoint"));
    return Graph(n, edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

Graph load_graph(const std::string& source) {
    if (is_family_spec(source)) return generate(source);
    std::ifstream in(source);
    if (!in) throw Error(errc::bad_input, "cannot open graph file '" + source + "'");
    return read_edge_list(in);
}

} // namespace pebbling
