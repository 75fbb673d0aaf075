#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pebbling/graph.hpp"

namespace pebbling {

enum class DominationKind { dominating, perfect, independent, efficient };

const char* domination_kind_name(DominationKind kind);

/// A vertex set with the domination property it certifies. Vertex lists are
/// kept sorted ascending.
struct DominationCertificate {
    std::vector<int> set;
    DominationKind kind = DominationKind::dominating;
    int size = 0;

    bool operator==(const DominationCertificate&) const = default;
};

/// Every vertex is in s or adjacent to a member of s.
bool is_dominating(const Graph& g, const std::vector<int>& s);

/// Every vertex not in s is adjacent to exactly one member of s.
bool is_perfect(const Graph& g, const std::vector<int>& s);

/// No edge joins two members of s.
bool is_independent(const Graph& g, const std::vector<int>& s);

/// Perfect and independent; the closed neighborhoods of s then partition V.
bool is_efficient(const Graph& g, const std::vector<int>& s);

/// Minimum dominating set by exhaustive search, subset size ascending and
/// lexicographic within a size, so the certificate is the lexicographically
/// smallest minimum set and repeated calls return identical results.
DominationCertificate min_dominating_set(const Graph& g);

/// Some efficient dominating set under the same deterministic search order,
/// or nullopt when none exists.
std::optional<DominationCertificate> find_efficient_dominating_set(const Graph& g);

} // namespace pebbling
