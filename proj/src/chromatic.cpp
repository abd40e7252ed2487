#include "lcw/chromatic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lcw {

void EnumGuard::check(long long k, long long n) const {
    if (force) return;
    if (k * n > cells) {
        std::ostringstream msg;
        msg << "enumeration guard: k*|V| = " << k * n << " exceeds " << cells << " (pass force to override)";
        throw std::runtime_error(msg.str());
    }
}

namespace {

// Canonical key for memoization: minimum adjacency bitmask over all vertex
// permutations for small graphs, raw edge list otherwise.
std::string graph_key(const Graph& g) {
    int n = g.num_vertices();
    std::ostringstream out;
    out << n << '|';
    if (n <= 7) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t best = ~std::uint64_t{0};
        do {
            std::uint64_t mask = 0;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (g.adjacent(perm[u], perm[v])) mask |= std::uint64_t{1} << bit;
            best = std::min(best, mask);
        } while (std::next_permutation(perm.begin(), perm.end()));
        out << best;
    } else {
        for (auto [u, v] : g.edges()) out << u << ',' << v << ';';
    }
    return out.str();
}

mpz_class chrom_poly_rec(const Graph& g, int k, std::map<std::string, mpz_class>& memo) {
    if (g.num_edges() == 0) {
        mpz_class r;
        mpz_ui_pow_ui(r.get_mpz_t(), k, g.num_vertices());
        return r;
    }
    std::string key = graph_key(g);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    auto [eu, ev] = g.edges().front();
    // Deletion.
    std::vector<std::pair<int, int>> del(g.edges().begin() + 1, g.edges().end());
    Graph gdel(g.num_vertices(), std::move(del));
    // Contraction of ev into eu, then shift ids above ev down by one.
    std::vector<std::pair<int, int>> con;
    for (auto [u, v] : g.edges()) {
        int a = u == ev ? eu : u;
        int b = v == ev ? eu : v;
        if (a == b) continue;
        if (a > ev) --a;
        if (b > ev) --b;
        con.emplace_back(a, b);
    }
    Graph gcon(g.num_vertices() - 1, std::move(con));
    mpz_class r = chrom_poly_rec(gdel, k, memo) - chrom_poly_rec(gcon, k, memo);
    memo[key] = r;
    return r;
}

}  // namespace

mpz_class chromatic_polynomial_value(const Graph& g, int k) {
    if (k < 0) throw std::invalid_argument("negative color count");
    std::map<std::string, mpz_class> memo;
    return chrom_poly_rec(g, k, memo);
}

int chromatic_number(const Graph& g) {
    if (g.num_vertices() == 0) return 0;
    for (int k = 1;; ++k) {
        ListAssignment L(g.num_vertices(), ColorSet::range(0, k));
        if (find_proper_coloring(g, L)) return k;
    }
}

namespace {

// Per-depth data for branch-and-bound over canonical assignments in vertex
// order: the prefix-induced subgraph and a greedy-extension lower bound on
// how many ways any prefix coloring extends to the suffix, valid for every
// possible completion of the list assignment.
struct BnbData {
    std::vector<Graph> prefix;                        // G[{0..d}]
    std::vector<unsigned long long> suffix_product;   // 0 if some factor <= 0
    std::vector<char> suffix_positive;

    BnbData(const Graph& g, const std::vector<int>& sizes) {
        int n = g.num_vertices();
        prefix.reserve(n);
        for (int d = 0; d < n; ++d) {
            std::vector<int> keep(d + 1);
            std::iota(keep.begin(), keep.end(), 0);
            prefix.push_back(induced_subgraph(g, keep).graph);
        }
        suffix_product.assign(n, 1);
        suffix_positive.assign(n, 1);
        for (int d = 0; d < n; ++d) {
            // Peel U = {d+1..n-1} from G, always removing the vertex of
            // minimum current degree; its factor is sizes[u] - degree.
            std::vector<char> present(n, 1);
            std::vector<int> deg(n);
            for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
            unsigned long long prod = 1;
            bool positive = true;
            std::vector<char> in_u(n, 0);
            for (int u = d + 1; u < n; ++u) in_u[u] = 1;
            for (int step = d + 1; step < n; ++step) {
                int best = -1;
                for (int u = d + 1; u < n; ++u)
                    if (in_u[u] && present[u] && (best < 0 || deg[u] < deg[best])) best = u;
                long long f = static_cast<long long>(sizes[best]) - deg[best];
                if (f <= 0) {
                    positive = false;
                    prod = 0;
                } else if (positive) {
                    prod *= static_cast<unsigned long long>(f);
                }
                present[best] = 0;
                for (int w : g.neighbors(best))
                    if (present[w]) --deg[w];
            }
            suffix_product[d] = prod;
            suffix_positive[d] = positive;
        }
    }

    unsigned long long prefix_count(const ListAssignment& L, int d, unsigned long long cap) const {
        ListAssignment sub(d + 1);
        for (int v = 0; v <= d; ++v) sub.set_list(v, L.list(v));
        return count_colorings(prefix[d], sub, cap).count;
    }
};

// Complete a partial canonical assignment with disjoint fresh lists.
ListAssignment fresh_completion(const ListAssignment& partial, int depth, int next_fresh,
                                const std::vector<int>& sizes) {
    ListAssignment L = partial;
    int fresh = next_fresh;
    for (int u = depth + 1; u < static_cast<int>(sizes.size()); ++u) {
        L.set_list(u, ColorSet::range(fresh, fresh + sizes[u]));
        fresh += sizes[u];
    }
    return L;
}

}  // namespace

ListCountMinimum list_color_function(const Graph& g, int k, const EnumGuard& guard) {
    int n = g.num_vertices();
    guard.check(k, n);
    ListAssignment constant(n, ColorSet::range(0, k));
    unsigned long long incumbent = count_colorings(g, constant).count;
    ListAssignment minimizer = constant;
    if (incumbent == 0 || n == 0) return {mpz_class(static_cast<unsigned long>(incumbent)), minimizer};

    std::vector<int> sizes(n, k);
    BnbData bnb(g, sizes);
    bool stop = false;
    EnumHooks hooks;
    hooks.on_partial = [&](const ListAssignment& partial, int d, int next_fresh) {
        if (stop) return false;
        if (d + 1 == n) return true;  // leaf handled below
        unsigned long long threshold =
            bnb.suffix_positive[d] ? (incumbent + bnb.suffix_product[d] - 1) / bnb.suffix_product[d] : 0;
        unsigned long long cnt = bnb.prefix_count(partial, d, std::max<unsigned long long>(threshold, 1));
        if (cnt == 0) {
            // Every completion has no proper coloring: the minimum is 0.
            incumbent = 0;
            minimizer = fresh_completion(partial, d, next_fresh, sizes);
            stop = true;
            return false;
        }
        if (bnb.suffix_positive[d] && cnt >= threshold) return false;  // cannot beat incumbent
        return true;
    };
    hooks.on_leaf = [&](const ListAssignment& L) {
        if (stop) return false;
        auto res = count_colorings(g, L, incumbent);
        if (!res.capped && res.count < incumbent) {
            incumbent = res.count;
            minimizer = L;
            if (incumbent == 0) {
                stop = true;
                return false;
            }
        }
        return true;
    };
    enumerate_canonical_assignments(n, k, hooks);
    return {mpz_class(static_cast<unsigned long>(incumbent)), minimizer};
}

ChoosableCheck check_sizes_choosable(const Graph& g, const std::vector<int>& sizes, const EnumGuard& guard) {
    int n = g.num_vertices();
    if (n == 0) return {true, std::nullopt};
    int kmax = *std::max_element(sizes.begin(), sizes.end());
    guard.check(kmax, n);
    for (int s : sizes)
        if (s == 0) {
            // A vertex with an empty list is never colorable.
            ListAssignment L(n);
            int fresh = 0;
            for (int u = 0; u < n; ++u) {
                L.set_list(u, ColorSet::range(fresh, fresh + sizes[u]));
                fresh += sizes[u];
            }
            return {false, L};
        }

    BnbData bnb(g, sizes);
    ChoosableCheck result{true, std::nullopt};
    EnumHooks hooks;
    hooks.on_partial = [&](const ListAssignment& partial, int d, int next_fresh) {
        if (!result.choosable) return false;
        if (d + 1 == n) return true;
        unsigned long long cnt = bnb.prefix_count(partial, d, 1);
        if (cnt == 0) {
            result.choosable = false;
            result.hard = fresh_completion(partial, d, next_fresh, sizes);
            return false;
        }
        if (bnb.suffix_positive[d]) return false;  // all completions colorable greedily
        return true;
    };
    hooks.on_leaf = [&](const ListAssignment& L) {
        if (!find_proper_coloring(g, L)) {
            result.choosable = false;
            result.hard = L;
            return false;
        }
        return true;
    };
    enumerate_canonical_assignments(sizes, hooks);
    return result;
}

ChoosableCheck check_k_choosable(const Graph& g, int k, const EnumGuard& guard) {
    return check_sizes_choosable(g, std::vector<int>(g.num_vertices(), k), guard);
}

ChiListResult list_chromatic_number(const Graph& g, const EnumGuard& guard) {
    int n = g.num_vertices();
    ChiListResult r;
    if (n == 0) {
        r.value = 0;
        r.method = "empty";
        return r;
    }
    int chi = chromatic_number(g);
    r.hard_assignment = ListAssignment(n, ColorSet::range(0, chi - 1));
    int col = coloring_number(g);
    for (int k = chi;; ++k) {
        if (k >= col) {
            r.value = k;
            r.method = "degeneracy";
            return r;
        }
        auto check = check_k_choosable(g, k, guard);
        if (check.choosable) {
            r.value = k;
            r.method = "exhaustive";
            return r;
        }
        r.hard_assignment = *check.hard;
    }
}

SccResult is_strongly_chromatic_choosable(const Graph& g, const EnumGuard& guard) {
    SccResult res;
    int n = g.num_vertices();
    if (n == 0) {
        res.reason = "empty graph";
        return res;
    }
    res.k = chromatic_number(g);
    int k = res.k;
    if (n == 1) {
        res.value = true;
        res.reason = "single vertex";
        return res;
    }
    // Vertex-criticality.
    for (int v = 0; v < n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < n; ++u)
            if (u != v) keep.push_back(u);
        if (chromatic_number(induced_subgraph(g, keep).graph) != k - 1) {
            res.reason = "not vertex-critical at vertex " + std::to_string(v);
            return res;
        }
    }

    // Dominating-vertex reduction: if v is adjacent to everything, a full
    // assignment is non-colorable exactly when every color of v's list
    // leaves the rest non-colorable after removal.
    int dom = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) {
            dom = v;
            break;
        }
    if (dom >= 0 && k >= 2) {
        std::vector<int> keep;
        for (int u = 0; u < n; ++u)
            if (u != dom) keep.push_back(u);
        auto sub = induced_subgraph(g, keep);
        int m = sub.graph.num_vertices();
        // Bump property: every assignment on G-v with lists of size k-2,
        // except one of size k-1, is colorable. It implies that a color can
        // make G-v non-colorable after removal only if it lies in every
        // list, which lets us prune to near-constant assignments.
        bool bump = true;
        for (int u = 0; u < m && bump; ++u) {
            std::vector<int> sizes(m, k - 2);
            sizes[u] = k - 1;
            bump = check_sizes_choosable(sub.graph, sizes, guard).choosable;
        }
        if (bump) {
            guard.check(k - 1, m);
            EnumHooks hooks;
            bool done = false;
            hooks.on_partial = [&](const ListAssignment& partial, int d, int) {
                if (done) return false;
                ColorSet inter = partial.list(0);
                for (int u = 1; u <= d; ++u) inter &= partial.list(u);
                return inter.size() >= k - 1;
            };
            hooks.on_leaf = [&](const ListAssignment& L) {
                ColorSet inter = L.list(0);
                for (int u = 1; u < m; ++u) inter &= L.list(u);
                ColorSet blocking;  // colors whose removal kills G-v
                for (int c = inter.first(); c >= 0; c = inter.next(c)) {
                    ListAssignment minus = L;
                    for (int u = 0; u < m; ++u) {
                        ColorSet s = minus.list(u);
                        s.erase(c);
                        minus.set_list(u, s);
                    }
                    if (!find_proper_coloring(sub.graph, minus)) blocking.insert(c);
                }
                if (blocking.size() >= k - 1) {
                    ListAssignment full(n);
                    for (int u = 0; u < m; ++u) full.set_list(sub.to_parent[u], L.list(u));
                    full.set_list(dom, blocking);
                    if (!full.is_constant()) {
                        res.counterexample = full;
                        done = true;
                        return false;
                    }
                }
                return true;
            };
            enumerate_canonical_assignments(m, k - 1, hooks);
            if (res.counterexample) {
                res.reason = "non-constant non-colorable assignment found";
                return res;
            }
            res.value = true;
            res.reason = "critical; all non-colorable assignments constant (dominating-vertex reduction)";
            return res;
        }
    }

    // Direct search for a non-constant, non-colorable (k-1)-assignment.
    guard.check(k - 1, n);
    std::vector<int> sizes(n, k - 1);
    BnbData bnb(g, sizes);
    bool done = false;
    EnumHooks hooks;
    hooks.on_partial = [&](const ListAssignment& partial, int d, int next_fresh) {
        if (done) return false;
        if (d + 1 == n) return true;
        unsigned long long cnt = bnb.prefix_count(partial, d, 1);
        if (cnt == 0) {
            res.counterexample = fresh_completion(partial, d, next_fresh, sizes);
            done = true;
            return false;
        }
        if (bnb.suffix_positive[d]) return false;
        return true;
    };
    hooks.on_leaf = [&](const ListAssignment& L) {
        if (L.is_constant()) return true;
        if (!find_proper_coloring(g, L)) {
            res.counterexample = L;
            done = true;
            return false;
        }
        return true;
    };
    enumerate_canonical_assignments(n, k - 1, hooks);
    if (res.counterexample) {
        res.reason = "non-constant non-colorable assignment found";
        return res;
    }
    res.value = true;
    res.reason = "critical; all non-colorable assignments constant (direct search)";
    return res;
}

namespace {

// Difference between even and odd circulations (spanning sub-digraphs with
// balanced in/out degree at every vertex) of an orientation.
struct CirculationDiff {
    int m;
    std::vector<std::pair<int, int>> de;
    std::vector<int> bal, remaining;
    long long diff = 0;

    bool ok(int v) const { return std::abs(bal[v]) <= remaining[v]; }

    void go(int idx, int sgn) {
        if (idx == m) {
            diff += sgn;
            return;
        }
        auto [u, v] = de[idx];
        --remaining[u];
        --remaining[v];
        if (ok(u) && ok(v)) go(idx + 1, sgn);
        ++bal[u];
        --bal[v];
        if (ok(u) && ok(v)) go(idx + 1, -sgn);
        --bal[u];
        ++bal[v];
        ++remaining[u];
        ++remaining[v];
    }
};

long long circulation_difference(int n, std::vector<std::pair<int, int>> directed) {
    // Close vertices as early as possible so balance pruning bites.
    std::sort(directed.begin(), directed.end(), [](const auto& a, const auto& b) {
        return std::make_pair(std::max(a.first, a.second), std::min(a.first, a.second)) <
               std::make_pair(std::max(b.first, b.second), std::min(b.first, b.second));
    });
    CirculationDiff cd;
    cd.m = static_cast<int>(directed.size());
    cd.de = std::move(directed);
    cd.bal.assign(n, 0);
    cd.remaining.assign(n, 0);
    for (auto [u, v] : cd.de) {
        ++cd.remaining[u];
        ++cd.remaining[v];
    }
    cd.go(0, 1);
    return cd.diff;
}

}  // namespace

bool orientation_certifies_choosable(const Graph& g, int bound, std::uint64_t seed, int max_attempts) {
    if (bound < 1) return false;
    int n = g.num_vertices();
    const auto& edges = g.edges();
    if (edges.empty()) return true;
    int cap = bound - 1;
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<std::pair<int, int>> order = edges;
        if (attempt > 0) std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> outdeg(n, 0);
        std::vector<std::pair<int, int>> directed;
        directed.reserve(order.size());
        bool feasible = true;
        for (auto [u, v] : order) {
            bool u_first;
            if (outdeg[u] != outdeg[v])
                u_first = outdeg[u] < outdeg[v];
            else
                u_first = attempt == 0 ? true : (rng() & 1);
            int from = u_first ? u : v, to = u_first ? v : u;
            if (outdeg[from] >= cap) std::swap(from, to);
            if (outdeg[from] >= cap) {
                feasible = false;
                break;
            }
            directed.emplace_back(from, to);
            ++outdeg[from];
        }
        if (!feasible) continue;
        if (circulation_difference(n, directed) != 0) return true;
    }
    return false;
}

std::optional<std::string> certify_choosable_upper(const Graph& g, int target, const EnumGuard& guard,
                                                   std::uint64_t seed) {
    if (coloring_number(g) <= target) return "degeneracy";
    if (orientation_certifies_choosable(g, target, seed)) return "orientation";
    if (static_cast<long long>(target) * g.num_vertices() <= guard.cells) {
        if (check_k_choosable(g, target, guard).choosable) return "exhaustive";
    }
    return std::nullopt;
}

}  // namespace lcw
