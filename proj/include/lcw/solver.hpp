#pragma once
// Exact backtracking solver for proper colorings from lists: decision,
// witness extraction, and exhaustive counting (with optional early cap).
#include <cstdint>
#include <optional>
#include <vector>

#include "lcw/graph.hpp"
#include "lcw/list_assignment.hpp"

namespace lcw {

using Coloring = std::vector<int>;  // color per vertex, -1 = unassigned

bool is_proper_coloring(const Graph& g, const ListAssignment& L, const Coloring& c);

// First proper coloring in deterministic search order, if any. Vertex
// selection: fewest remaining colors, then larger degree, then lower index;
// colors tried in ascending order.
std::optional<Coloring> find_proper_coloring(const Graph& g, const ListAssignment& L);

// Number of proper colorings, counted exhaustively. If cap > 0, counting
// stops early once the count reaches cap (capped = true in that case).
struct CountResult {
    unsigned long long count = 0;
    bool capped = false;
};
CountResult count_colorings(const Graph& g, const ListAssignment& L, unsigned long long cap = 0);

}  // namespace lcw
