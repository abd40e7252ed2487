#include "lcw/solver.hpp"

namespace lcw {

bool is_proper_coloring(const Graph& g, const ListAssignment& L, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.num_vertices()) return false;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (c[v] < 0 || !L.list(v).contains(c[v])) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

namespace {

struct Search {
    const Graph& g;
    std::vector<ColorSet> remaining;  // list minus colors of colored neighbors
    Coloring colors;
    unsigned long long count = 0;
    unsigned long long cap = 0;  // 0 = uncapped; in find mode cap = 1
    bool find_mode = false;
    Coloring witness;

    Search(const Graph& graph, const ListAssignment& L) : g(graph), colors(graph.num_vertices(), -1) {
        remaining.reserve(g.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v) remaining.push_back(L.list(v));
    }

    int pick_vertex() const {
        int best = -1, best_size = 0, best_deg = 0;
        for (int v = 0; v < g.num_vertices(); ++v) {
            if (colors[v] >= 0) continue;
            int s = remaining[v].size();
            int d = g.degree(v);
            if (best < 0 || s < best_size || (s == best_size && d > best_deg)) {
                best = v;
                best_size = s;
                best_deg = d;
            }
        }
        return best;
    }

    // Returns false when the search should stop (cap reached / witness found).
    bool go(int uncolored) {
        if (uncolored == 0) {
            ++count;
            if (find_mode) witness = colors;
            return !(cap && count >= cap);
        }
        int v = pick_vertex();
        if (remaining[v].empty()) return true;
        std::vector<int> touched;
        touched.reserve(g.degree(v));
        for (int c = remaining[v].first(); c >= 0; c = remaining[v].next(c)) {
            colors[v] = c;
            touched.clear();
            bool dead = false;
            for (int u : g.neighbors(v)) {
                if (colors[u] >= 0 || !remaining[u].contains(c)) continue;
                remaining[u].erase(c);
                touched.push_back(u);
                if (colors[u] < 0 && remaining[u].empty()) dead = true;
            }
            bool keep_going = dead ? true : go(uncolored - 1);
            for (int u : touched) remaining[u].insert(c);
            colors[v] = -1;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

std::optional<Coloring> find_proper_coloring(const Graph& g, const ListAssignment& L) {
    Search s(g, L);
    s.find_mode = true;
    s.cap = 1;
    s.go(g.num_vertices());
    if (s.count == 0) return std::nullopt;
    return s.witness;
}

CountResult count_colorings(const Graph& g, const ListAssignment& L, unsigned long long cap) {
    Search s(g, L);
    s.cap = cap;
    s.go(g.num_vertices());
    return {s.count, cap != 0 && s.count >= cap};
}

}  // namespace lcw
