#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace pebbling {

/// Pebble counts per vertex.
struct Distribution {
    std::vector<int> counts;

    Distribution() = default;
    explicit Distribution(int n) : counts(static_cast<size_t>(n), 0) {}
    explicit Distribution(std::vector<int> c) : counts(std::move(c)) {}

    std::int64_t size() const {
        return std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    }

    int operator[](int v) const { return counts[static_cast<size_t>(v)]; }
    int& operator[](int v) { return counts[static_cast<size_t>(v)]; }

    bool operator==(const Distribution&) const = default;
};

/// One pebbling step: two pebbles leave `from`, one lands on the adjacent `to`.
struct Move {
    int from = 0;
    int to = 0;

    bool operator==(const Move&) const = default;
};

using MoveSequence = std::vector<Move>;

} // namespace pebbling
