#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "pebbling/errors.hpp"

namespace pebbling {

using Edge = std::pair<int, int>;

/// Simple connected undirected graph on vertices 0..n-1. Immutable after
/// construction; all accessors are const and the object is safe to share
/// across threads.
class Graph {
public:
    /// Validates and normalizes the edge list. Rejects out-of-range endpoints
    /// (malformed_edge), loops and duplicate edges (loop_or_multiedge), and
    /// disconnected input (disconnected_graph).
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    /// Edges normalized to u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbor list of v.
    const std::vector<int>& neighbors(int v) const { return adj_.at(static_cast<size_t>(v)); }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    bool has_edge(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

inline Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

/// Hop-distance matrix plus per-vertex eccentricity and the diameter.
/// diameter == 0 only for the single-vertex graph.
struct GraphMetrics {
    std::vector<std::vector<int>> dist;
    std::vector<int> ecc;
    int diameter = 0;
};

/// All-pairs hop distances by breadth-first traversal from every source.
GraphMetrics metrics(const Graph& g);

/// Builds one of the named families. Spec grammar is `name:param[:param...]`:
///   path:n       n >= 2, vertices 0..n-1 in path order
///   cycle:n      n >= 3, edge (i, i+1 mod n)
///   complete:n   n >= 1
///   star:r       r >= 1 leaves; center 0, leaves 1..r
///   doublestar:n n even >= 2; centers 0,1 joined by an edge, n/2 leaves each:
///                leaves 2..n/2+1 on center 0, the rest on center 1
///   corona:<base-spec>  base vertices keep their labels; the leaf attached
///                to base vertex i is labeled b+i (b = base order)
/// Deterministic: the same spec always yields the same edge set.
Graph generate(const std::string& family_spec);

/// True if the string parses as a family spec (used to disambiguate CLI
/// inputs from file paths).
bool is_family_spec(const std::string& spec);

/// Edge-list text format: `n m` on the first line, then m lines `u v`
/// (0-indexed). `#` starts a comment line; blank lines are ignored.
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

/// Loads from a family spec if the string parses as one, else from a file.
Graph load_graph(const std::string& source);

} // namespace pebbling
