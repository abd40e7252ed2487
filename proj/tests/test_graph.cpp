#include <doctest.h>

#include <algorithm>
#include <vector>

#include "lcw/graph.hpp"

using namespace lcw;

namespace {

// Oracle: degeneracy = max over nonempty vertex subsets of the minimum degree
// in the induced subgraph. Brute force, graphs up to ~16 vertices.
int degeneracy_oracle(const Graph& g) {
    int n = g.num_vertices();
    int best = 0;
    for (int mask = 1; mask < (1 << n); ++mask) {
        int min_deg = n;
        for (int v = 0; v < n; ++v) {
            if (!(mask & (1 << v))) continue;
            int d = 0;
            for (int u : g.neighbors(v))
                if (mask & (1 << u)) ++d;
            min_deg = std::min(min_deg, d);
        }
        best = std::max(best, min_deg);
    }
    return best;
}

}  // namespace

TEST_CASE("builders have the expected vertex and edge counts") {
    CHECK(complete_graph(5).num_edges() == 10);
    CHECK(complete_bipartite(2, 4).num_edges() == 8);
    CHECK(cycle(6).num_edges() == 6);
    CHECK(path(4).num_edges() == 3);
    Graph w5 = join(complete_graph(1), cycle(5));
    CHECK(w5.num_vertices() == 6);
    CHECK(w5.num_edges() == 10);
    // the join vertex dominates
    CHECK(w5.degree(0) == 5);
}

TEST_CASE("edges are normalized, deduped, and symmetric in the adjacency") {
    Graph g(4, {{2, 1}, {1, 2}, {3, 0}, {0, 3}, {2, 3}});
    CHECK(g.num_edges() == 3);
    for (auto [u, v] : g.edges()) CHECK(u < v);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK(!g.adjacent(0, 1));
}

TEST_CASE("text round trip") {
    Graph g = join(complete_graph(2), path(3));
    CHECK(Graph::from_text(g.to_text()) == g);
}

TEST_CASE("cartesian product layout and edges") {
    ProductStructure p = cartesian_product(complete_graph(2), complete_bipartite(1, 2));
    CHECK(p.graph.num_vertices() == 6);
    // edges: 3 vertical copies of K_2 plus 2 horizontal copies of K_{1,2}
    CHECK(p.graph.num_edges() == 3 + 2 * 2);
    CHECK(p.vertex(1, 2) == 5);
    CHECK(p.left_of(5) == 1);
    CHECK(p.right_of(5) == 2);
    CHECK(p.right_fiber(0) == std::vector<int>{0, 3});
    // (i, j) ~ (i', j) iff i ~ i'; (i, j) ~ (i, j') iff j ~ j'
    CHECK(p.graph.adjacent(p.vertex(0, 1), p.vertex(1, 1)));
    CHECK(p.graph.adjacent(p.vertex(0, 0), p.vertex(0, 1)));
    CHECK(!p.graph.adjacent(p.vertex(0, 1), p.vertex(0, 2)));
    CHECK(!p.graph.adjacent(p.vertex(0, 1), p.vertex(1, 2)));
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
    Graph g = cycle(5);
    InducedSubgraph s = induced_subgraph(g, {0, 1, 2, 4});
    CHECK(s.graph.num_vertices() == 4);
    CHECK(s.graph.num_edges() == 3);  // 0-1, 1-2, 4-0
    CHECK(s.to_parent == std::vector<int>{0, 1, 2, 4});
}

TEST_CASE("degeneracy matches the subset oracle") {
    std::vector<Graph> cases = {complete_graph(4), cycle(5), path(6), complete_bipartite(2, 3),
                                join(complete_graph(1), cycle(5)),
                                cartesian_product(cycle(4), complete_graph(2)).graph};
    for (const Graph& g : cases) {
        CAPTURE(g.to_text());
        CHECK(degeneracy(g) == degeneracy_oracle(g));
        CHECK(coloring_number(g) == degeneracy(g) + 1);
    }
}

TEST_CASE("degeneracy order certifies the degeneracy") {
    Graph g = cartesian_product(cycle(4), cycle(4)).graph;
    int d = degeneracy(g);
    std::vector<int> order = degeneracy_order(g);
    std::vector<int> pos(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) pos[order[i]] = i;
    for (int v = 0; v < g.num_vertices(); ++v) {
        int later = 0;
        for (int u : g.neighbors(v))
            if (pos[u] > pos[v]) ++later;
        CHECK(later <= d);
    }
}

TEST_CASE("expression parser builds the advertised graphs") {
    CHECK(parse_graph_expr("K(4)") == complete_graph(4));
    CHECK(parse_graph_expr("K(2,3)") == complete_bipartite(2, 3));
    CHECK(parse_graph_expr("C(5)") == cycle(5));
    CHECK(parse_graph_expr("J(K(1),C(5))") == join(complete_graph(1), cycle(5)));
    CHECK(parse_graph_expr("CP(K(2),K(1,2))") ==
          cartesian_product(complete_graph(2), complete_bipartite(1, 2)).graph);
    CHECK_THROWS(parse_graph_expr("Q(3)"));
    CHECK_THROWS(parse_graph_expr("K(2,"));
}
