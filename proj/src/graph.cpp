#include "lcw/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lcw {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::string Graph::to_text() const {
    std::ostringstream out;
    out << n_ << ' ' << edges_.size() << '\n';
    for (auto [u, v] : edges_) out << u << ' ' << v << '\n';
    return out.str();
}

Graph Graph::from_text(const std::string& text) {
    std::istringstream in(text);
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph text: bad header");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph text: truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
    return Graph(n, std::move(e));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return Graph(n, std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
    int ng = g.num_vertices(), nh = h.num_vertices();
    std::vector<std::pair<int, int>> e = g.edges();
    for (auto [u, v] : h.edges()) e.emplace_back(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) e.emplace_back(u, ng + v);
    return Graph(ng + nh, std::move(e));
}

ProductStructure cartesian_product(const Graph& g, const Graph& h) {
    ProductStructure p;
    p.left_n = g.num_vertices();
    p.right_n = h.num_vertices();
    if (static_cast<long long>(p.left_n) * p.right_n > kMaxVertices)
        throw std::invalid_argument("product too large");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < p.left_n; ++i)
        for (auto [u, v] : h.edges()) e.emplace_back(p.vertex(i, u), p.vertex(i, v));
    for (int j = 0; j < p.right_n; ++j)
        for (auto [u, v] : g.edges()) e.emplace_back(p.vertex(u, j), p.vertex(v, j));
    p.graph = Graph(p.left_n * p.right_n, std::move(e));
    return p;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& keep) {
    std::vector<int> to_new(g.num_vertices(), -1);
    InducedSubgraph s;
    s.to_parent = keep;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        if (keep[i] < 0 || keep[i] >= g.num_vertices() || to_new[keep[i]] >= 0)
            throw std::invalid_argument("induced_subgraph: bad vertex list");
        to_new[keep[i]] = i;
    }
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges())
        if (to_new[u] >= 0 && to_new[v] >= 0) e.emplace_back(to_new[u], to_new[v]);
    s.graph = Graph(static_cast<int>(keep.size()), std::move(e));
    return s;
}

std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    // Reverse so each vertex sees at most `degeneracy` neighbors *after* it
    // was peeled, i.e. earlier vertices in coloring order are the dense ones.
    std::reverse(order.begin(), order.end());
    return order;
}

int degeneracy(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    int d = 0;
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (best < 0 || deg[v] < deg[best])) best = v;
        d = std::max(d, deg[best]);
        removed[best] = 1;
        for (int u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    return d;
}

int coloring_number(const Graph& g) { return degeneracy(g) + 1; }

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw std::invalid_argument("graph expr: expected '" + std::string(1, c) + "'");
    }
    int number() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw std::invalid_argument("graph expr: expected number");
        return std::stoi(s.substr(start, i - start));
    }
    std::string ident() {
        skip_ws();
        size_t start = i;
        while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
        return s.substr(start, i - start);
    }

    Graph expr() {
        std::string name = ident();
        expect('(');
        Graph result;
        if (name == "K") {
            int a = number();
            if (eat(',')) {
                int b = number();
                result = complete_bipartite(a, b);
            } else {
                result = complete_graph(a);
            }
        } else if (name == "C") {
            result = cycle(number());
        } else if (name == "J") {
            Graph g = expr();
            expect(',');
            Graph h = expr();
            result = join(g, h);
        } else if (name == "CP") {
            Graph g = expr();
            expect(',');
            Graph h = expr();
            result = cartesian_product(g, h).graph;
        } else {
            throw std::invalid_argument("graph expr: unknown constructor '" + name + "'");
        }
        expect(')');
        return result;
    }
};

}  // namespace

Graph parse_graph_expr(const std::string& expr) {
    Parser p{expr};
    Graph g = p.expr();
    p.skip_ws();
    if (p.i != expr.size()) throw std::invalid_argument("graph expr: trailing input");
    return g;
}

}  // namespace lcw
