#pragma once
// Immutable simple graphs on dense vertex ids 0..n-1, plus the small builder
// set used throughout: complete graphs, complete bipartite graphs, cycles,
// joins, Cartesian products, induced subgraphs.
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lcw {

inline constexpr int kMaxVertices = 4096;

class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    std::string to_text() const;                 // "n m" header + one "u v" line per edge
    static Graph from_text(const std::string&);  // inverse of to_text

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // normalized u < v, sorted, deduped
    std::vector<std::vector<int>> adj_;
};

// A Cartesian product G1 x G2 with vertex (i, j) at id i * |V(G2)| + j, so the
// fiber over each left vertex is a contiguous id block.
struct ProductStructure {
    Graph graph;
    int left_n = 0;
    int right_n = 0;

    int vertex(int left, int right) const { return left * right_n + right; }
    int left_of(int v) const { return v / right_n; }
    int right_of(int v) const { return v % right_n; }
    // Ids of the fiber over a fixed right vertex (isomorphic to the left factor).
    std::vector<int> right_fiber(int right) const {
        std::vector<int> f;
        f.reserve(left_n);
        for (int i = 0; i < left_n; ++i) f.push_back(vertex(i, right));
        return f;
    }
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new id -> old id
};

Graph complete_graph(int n);
// Sides X (ids 0..a-1) then Y (ids a..a+b-1).
Graph complete_bipartite(int a, int b);
Graph cycle(int n);
Graph path(int n);
Graph join(const Graph& g, const Graph& h);
ProductStructure cartesian_product(const Graph& g, const Graph& h);
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep);

// Degeneracy + 1, via repeated minimum-degree peeling.
int coloring_number(const Graph& g);
int degeneracy(const Graph& g);
// Peel order realizing the degeneracy (each vertex has <= degeneracy
// neighbors later in the order).
std::vector<int> degeneracy_order(const Graph& g);

// Expression DSL: K(n) | K(a,b) | C(n) | J(e,e) | CP(e,e).
Graph parse_graph_expr(const std::string& expr);

}  // namespace lcw
