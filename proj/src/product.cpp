#include "lcw/product.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"
#include "lcw/enumeration.hpp"

namespace lcw {

ProductInstance make_product_instance(const Graph& base, int a, int b) {
    ProductInstance h;
    h.base = base;
    h.a = a;
    h.b = b;
    h.prod = cartesian_product(base, complete_bipartite(a, b));
    return h;
}

void CensusGuard::check(const mpz_class& total) const {
    if (force) return;
    if (total > static_cast<long>(max_colorings)) {
        std::ostringstream msg;
        msg << "census guard: " << total << " X-side colorings exceed " << max_colorings
            << " (pass force to override)";
        throw std::runtime_error(msg.str());
    }
}

namespace {

// All proper colorings of g from L, in lexicographic vertex order.
std::vector<Coloring> all_colorings(const Graph& g, const ListAssignment& L) {
    std::vector<Coloring> out;
    int n = g.num_vertices();
    Coloring c(n, -1);
    auto go = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(c);
            return;
        }
        const ColorSet& lst = L.list(v);
        for (int col = lst.first(); col >= 0; col = lst.next(col)) {
            bool ok = true;
            for (int w : g.neighbors(v))
                if (w < v && c[w] == col) {
                    ok = false;
                    break;
                }
            if (ok) {
                c[v] = col;
                self(self, v + 1);
                c[v] = -1;
            }
        }
    };
    go(go, 0);
    return out;
}

// Proper colorings of each column copy of M, from the X-side lists.
std::vector<std::vector<Coloring>> column_colorings(const ProductInstance& h,
                                                    const ListAssignment& L) {
    std::vector<std::vector<Coloring>> cols(h.a);
    int n = h.n();
    for (int j = 0; j < h.a; ++j) {
        ListAssignment col(n);
        for (int i = 0; i < n; ++i) col.set_list(i, L.list(h.x_vertex(i, j)));
        cols[j] = all_colorings(h.base, col);
    }
    return cols;
}

void require_disjoint_rows(const ProductInstance& h, const ListAssignment& L) {
    if (!rows_pairwise_disjoint(h.prod, h.a, L))
        throw std::invalid_argument("X-side row lists are not pairwise disjoint");
}

std::string dump_instance(const ProductInstance& h, const ListAssignment& L) {
    std::ostringstream out;
    out << "n=" << h.n() << " a=" << h.a << " b=" << h.b << "\n" << L.to_text();
    return out.str();
}

}  // namespace

bool is_n_minus_1_to_1(const XColoring& f, int n) {
    std::unordered_map<int, int> counts;
    for (int c : f)
        if (++counts[c] > n - 1) return false;
    return true;
}

bool is_bad_coloring(const ProductInstance& h, const ListAssignment& L, const XColoring& f,
                     int y) {
    int n = h.n();
    // f must be a proper L_X-coloring.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < h.a; ++j) {
            if (!L.list(h.x_vertex(i, j)).contains(f[i * h.a + j]))
                throw std::invalid_argument("coloring leaves its lists");
            for (int i2 : h.base.neighbors(i))
                if (f[i * h.a + j] == f[i2 * h.a + j])
                    throw std::invalid_argument("coloring is not proper on the X side");
        }
    ListAssignment residual(n);
    for (int i = 0; i < n; ++i) {
        ColorSet lst = L.list(h.y_vertex(i, y));
        for (int j = 0; j < h.a; ++j) lst.erase(f[i * h.a + j]);
        residual.set_list(i, lst);
    }
    return !find_proper_coloring(h.base, residual).has_value();
}

XSideCensus census_X(const ProductInstance& h, const ListAssignment& L, const CensusGuard& guard) {
    require_disjoint_rows(h, L);
    int n = h.n();
    int a = h.a;
    XSideCensus census;
    auto cols = column_colorings(h, L);
    mpz_class total = 1;
    for (const auto& cc : cols) total *= static_cast<long>(cc.size());
    guard.check(total);
    if (total == 0) {
        census.total_CX = 0;
        census.injective_IX = 0;
        return census;
    }

    std::unordered_map<int, int> counts;
    int colors_at_n = 0;
    std::vector<int> q(a);
    auto go = [&](auto&& self, int j) -> void {
        if (j == a) {
            census.total_CX += 1;
            auto& pt = census.per_tuple[q];
            pt.cx += 1;
            if (colors_at_n == 0) {
                census.injective_IX += 1;
                pt.ix += 1;
            }
            return;
        }
        for (const Coloring& cc : cols[j]) {
            for (int c : cc) {
                int t = ++counts[c];
                if (t > n) throw std::runtime_error("color used more than n times:\n" +
                                                    dump_instance(h, L));
                if (t == n) {
                    ++colors_at_n;
                    census.sq_flags[c] = 1;
                }
            }
            q[j] = cc[0];
            self(self, j + 1);
            for (int c : cc) {
                if (counts[c] == n) --colors_at_n;
                --counts[c];
            }
        }
    };
    go(go, 0);

    // Colors never used n times get flag 0.
    for (int j = 0; j < a; ++j)
        for (const auto& cc : cols[j])
            for (int c : cc) census.sq_flags.emplace(c, 0);
    // A color q used n times in some coloring cannot reappear below the
    // first row of its own column.
    for (auto [c, flag] : census.sq_flags) {
        if (!flag) continue;
        for (int j = 0; j < a; ++j)
            if (L.list(h.x_vertex(0, j)).contains(c))
                for (int i = 1; i < n; ++i)
                    if (L.list(h.x_vertex(i, j)).contains(c))
                        throw std::runtime_error("full-multiplicity color reappears in column:\n" +
                                                 dump_instance(h, L));
    }
    for (auto& [qt, pt] : census.per_tuple) {
        pt.s = 0;
        for (int c : qt) pt.s += census.sq_flags.at(c);
    }
    return census;
}

std::vector<XColoring> enumerate_CX(const ProductInstance& h, const ListAssignment& L,
                                    const CensusGuard& guard) {
    require_disjoint_rows(h, L);
    int n = h.n();
    int a = h.a;
    auto cols = column_colorings(h, L);
    mpz_class total = 1;
    for (const auto& cc : cols) total *= static_cast<long>(cc.size());
    guard.check(total);
    std::vector<XColoring> out;
    if (total == 0) return out;
    XColoring f(n * a, -1);
    auto go = [&](auto&& self, int j) -> void {
        if (j == a) {
            out.push_back(f);
            return;
        }
        for (const Coloring& cc : cols[j]) {
            for (int i = 0; i < n; ++i) f[i * a + j] = cc[i];
            self(self, j + 1);
        }
    };
    go(go, 0);
    return out;
}

FiberAnalysis fiber_analysis(const ProductInstance& h, const ListAssignment& L, int y, int k,
                             const CensusGuard& guard) {
    FiberAnalysis fa;
    fa.y_vertex = y;
    int n = h.n();
    for (const XColoring& f : enumerate_CX(h, L, guard)) {
        if (!is_bad_coloring(h, L, f, y)) continue;
        fa.bad_set_B.push_back(f);
        if (is_n_minus_1_to_1(f, n)) fa.bad_injective_B_I.push_back(f);
    }
    mpz_class cap = 1;
    cap <<= (k - 1);
    if (mpz_class(static_cast<long>(fa.bad_set_B.size())) > cap)
        throw std::runtime_error("more than 2^{k-1} bad colorings for one fiber:\n" +
                                 dump_instance(h, L));
    if (!fa.bad_injective_B_I.empty() &&
        (fa.bad_set_B.size() != 1 || fa.bad_injective_B_I.size() != 1))
        throw std::runtime_error("a (n-1)-to-1 bad coloring coexists with another bad coloring:\n" +
                                 dump_instance(h, L));
    if (!fa.bad_set_B.empty()) {
        const XColoring& f = fa.bad_set_B.front();
        ColorSet residual = L.list(h.y_vertex(0, y));
        for (int j = 0; j < h.a; ++j) residual.erase(f[j]);
        bool common = true;
        for (int i = 1; i < n; ++i) {
            ColorSet r = L.list(h.y_vertex(i, y));
            for (int j = 0; j < h.a; ++j) r.erase(f[i * h.a + j]);
            if (!(r == residual)) common = false;
        }
        if (common) fa.residual_K = residual;
    }
    return fa;
}

std::string Certificate::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["kind"] = kind;
    j["b"] = b;
    j["bound_value"] = bound_value.get_str();
    if (coloring) j["coloring"] = *coloring;
    if (!cover.empty()) j["cover"] = cover;
    return j.dump(2);
}

Certificate certify_or_color(const ProductInstance& h, const ListAssignment& L, int k,
                             const CensusGuard& guard) {
    Certificate cert;
    cert.b = h.b;
    if (!rows_pairwise_disjoint(h.prod, h.a, L)) {
        auto c = find_proper_coloring(h.prod.graph, L);
        if (!c)
            throw std::runtime_error("row lists intersect but no coloring found:\n" +
                                     dump_instance(h, L));
        cert.kind = "colorable-by-rows";
        cert.coloring = *c;
        return cert;
    }
    XSideCensus census = census_X(h, L, guard);
    mpz_class pow2 = 1;
    pow2 <<= (k - 1);
    cert.bound_value =
        mpq_class(census.injective_IX) + mpq_class(census.total_CX - census.injective_IX, pow2);
    cert.bound_value.canonicalize();
    if (h.b < cert.bound_value) {
        auto c = find_proper_coloring(h.prod.graph, L);
        if (!c)
            throw std::runtime_error("b below counting bound but no coloring found:\n" +
                                     dump_instance(h, L));
        cert.kind = "colorable-by-bound";
        cert.coloring = *c;
        return cert;
    }
    // Match every X-side coloring to its lowest-index bad fiber.
    auto cx = enumerate_CX(h, L, guard);
    bool covered = true;
    cert.cover.assign(cx.size(), -1);
    for (size_t t = 0; t < cx.size(); ++t) {
        for (int y = 0; y < h.b; ++y)
            if (is_bad_coloring(h, L, cx[t], y)) {
                cert.cover[t] = y;
                break;
            }
        if (cert.cover[t] < 0) covered = false;
    }
    auto c = find_proper_coloring(h.prod.graph, L);
    if (covered) {
        if (c)
            throw std::runtime_error("full bad-fiber cover but the solver found a coloring:\n" +
                                     dump_instance(h, L));
        cert.kind = "non-colorable-by-cover";
        return cert;
    }
    if (!c)
        throw std::runtime_error("uncovered X-side coloring but no full coloring found:\n" +
                                 dump_instance(h, L));
    cert.kind = "colorable-by-extension";
    cert.coloring = *c;
    return cert;
}

Graph build_Mq(const ProductInstance& h, const XSideCensus& census, const std::vector<int>& q) {
    int n = h.n();
    int a = h.a;
    if (static_cast<int>(q.size()) != a) throw std::invalid_argument("tuple length must be a");
    std::vector<std::pair<int, int>> edges;
    auto id = [a](int i, int j) { return i * a + j; };
    for (int j = 0; j < a; ++j) {
        auto it = census.sq_flags.find(q[j]);
        int flag = it == census.sq_flags.end() ? 0 : it->second;
        int lo = flag ? 1 : 0;  // rows forming the column clique
        for (int i = lo; i < n; ++i)
            for (int i2 = i + 1; i2 < n; ++i2) edges.emplace_back(id(i, j), id(i2, j));
        if (flag && n >= 2)
            for (int j2 = 0; j2 < a; ++j2)
                if (j2 != j) edges.emplace_back(id(0, j), id(1, j2));
    }
    return Graph(n * a, std::move(edges));
}

bool verify_correspondence(const ProductInstance& h, const ListAssignment& L,
                           const XSideCensus& census, const std::vector<int>& q) {
    int n = h.n();
    int a = h.a;
    if (n < 2) throw std::invalid_argument("base must have at least two vertices");
    if (h.base.num_edges() != n * (n - 1) / 2)
        throw std::invalid_argument("auxiliary-graph correspondence requires a complete base");
    for (int j = 0; j < a; ++j)
        if (!L.list(h.x_vertex(0, j)).contains(q[j]))
            throw std::invalid_argument("tuple entry not in its first-row list");

    Graph mq = build_Mq(h, census, q);
    ListAssignment lx(n * a);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < a; ++j) lx.set_list(i * a + j, L.list(h.x_vertex(i, j)));
    for (int j = 0; j < a; ++j) lx.set_list(j, ColorSet::of({q[j]}));
    auto cq = all_colorings(mq, lx);

    // Containment: every such coloring is an (n-1)-to-1 proper coloring of
    // H_X with first row q.
    for (const Coloring& f : cq) {
        bool proper = true;
        for (int j = 0; j < a && proper; ++j)
            for (int i = 0; i < n && proper; ++i)
                for (int i2 = i + 1; i2 < n; ++i2)
                    if (f[i * a + j] == f[i2 * a + j]) {
                        proper = false;
                        break;
                    }
        if (!proper || !is_n_minus_1_to_1(f, n)) return false;
    }

    auto it = census.per_tuple.find(q);
    mpz_class ixq = it == census.per_tuple.end() ? mpz_class(0) : it->second.ix;
    if (mpz_class(static_cast<long>(cq.size())) > ixq) return false;

    int s = 0;
    for (int c : q) s += census.sq_flags.at(c);
    // d_j counts colors of the second-row list clashing with the tuple.
    ColorSet hot;
    for (int c : q)
        if (census.sq_flags.at(c)) hot.insert(c);
    std::vector<int> d(a);
    int dsum = 0;
    for (int j = 0; j < a; ++j) {
        ColorSet forbidden = hot;
        forbidden.insert(q[j]);
        d[j] = (L.list(h.x_vertex(1, j)) & forbidden).size();
        if (d[j] > s + 1) return false;
        dsum += d[j];
    }
    if (dsum > a) return false;

    if (n > a) return true;  // the counting bounds below are stated for n <= a

    // Greedy tail factor shared by both bounds.
    mpz_class tail = 1;
    for (int i = 3; i <= n; ++i) {
        mpz_class f1 = n + a - i + 1, f0 = n + a - i;
        for (int t = 0; t < s; ++t) tail *= f1;
        for (int t = 0; t < a - s; ++t) tail *= f0;
    }
    mpz_class head = 1;
    for (int j = 0; j < a; ++j) head *= n + a - 1 - d[j];
    if (mpz_class(static_cast<long>(cq.size())) < head * tail) return false;

    // Closed-form lower bound, compared after raising both sides to s+1 to
    // clear the fractional exponents.
    mpz_class lhs, rhs = 1, base1 = n + a - s - 2, base2 = n + a - 1;
    mpz_pow_ui(lhs.get_mpz_t(), ixq.get_mpz_t(), s + 1);
    mpz_class t1, t2, t3;
    mpz_pow_ui(t1.get_mpz_t(), base1.get_mpz_t(), a);
    mpz_pow_ui(t2.get_mpz_t(), base2.get_mpz_t(), static_cast<unsigned long>(s) * a);
    mpz_pow_ui(t3.get_mpz_t(), tail.get_mpz_t(), s + 1);
    rhs = t1 * t2 * t3;
    return lhs >= rhs;
}

ExtremalWitness construct_extremal_assignment(int n, int a, long long max_fibers) {
    if (n < 1 || a < 1) throw std::invalid_argument("need n >= 1 and a >= 1");
    int ksize = n + a - 1;  // list size
    mpz_class per_column = 1;
    for (int i = 0; i < n; ++i) per_column *= ksize - i;
    mpz_class b_star;
    mpz_pow_ui(b_star.get_mpz_t(), per_column.get_mpz_t(), a);
    if (b_star > static_cast<long>(max_fibers))
        throw std::runtime_error("witness guard: " + b_star.get_str() + " fibers exceed " +
                                 std::to_string(max_fibers));
    int b = static_cast<int>(b_star.get_si());

    ExtremalWitness w;
    w.b_star = b_star;
    w.h = make_product_instance(complete_graph(n), a, b);
    ListAssignment L(w.h.prod.graph.num_vertices());
    for (int j = 0; j < a; ++j) {
        ColorSet aj = ColorSet::range(j * ksize, (j + 1) * ksize);
        for (int i = 0; i < n; ++i) L.set_list(w.h.x_vertex(i, j), aj);
    }
    // One fiber per X-side coloring: its row colors plus a shared fresh set.
    ColorSet fresh = ColorSet::range(a * ksize, a * ksize + n - 1);
    CensusGuard cg;
    cg.max_colorings = std::max<long long>(cg.max_colorings, max_fibers);
    auto cx = enumerate_CX(w.h, L, cg);
    if (mpz_class(static_cast<long>(cx.size())) != b_star)
        throw std::runtime_error("witness X-side census mismatch");
    for (int y = 0; y < b; ++y)
        for (int i = 0; i < n; ++i) {
            ColorSet lst = fresh;
            for (int j = 0; j < a; ++j) lst.insert(cx[y][i * a + j]);
            L.set_list(w.h.y_vertex(i, y), lst);
        }
    w.L = L;
    return w;
}

namespace {

// Exact minimum set cover by depth-first search branching on the uncovered
// element with the fewest candidate sets.
struct MinCover {
    int universe;
    std::vector<std::vector<int>> sets;            // element lists
    std::vector<std::vector<int>> covering;        // element -> set indices
    int best;
    std::vector<int> count;                        // cover multiplicity per element
    int max_set_size = 1;

    int run(int upper) {
        best = upper;
        covering.assign(universe, {});
        for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
            max_set_size = std::max(max_set_size, static_cast<int>(sets[s].size()));
            for (int e : sets[s]) covering[e].push_back(s);
        }
        for (int e = 0; e < universe; ++e)
            if (covering[e].empty()) return best;  // uncoverable
        count.assign(universe, 0);
        go(universe, 0);
        return best;
    }

    void go(int uncovered, int used) {
        if (uncovered == 0) {
            best = std::min(best, used);
            return;
        }
        if (used + (uncovered + max_set_size - 1) / max_set_size >= best) return;
        int pick = -1;
        for (int e = 0; e < universe; ++e)
            if (count[e] == 0 &&
                (pick < 0 || covering[e].size() < covering[pick].size())) pick = e;
        for (int s : covering[pick]) {
            int gained = 0;
            for (int e : sets[s])
                if (count[e]++ == 0) ++gained;
            go(uncovered - gained, used + 1);
            for (int e : sets[s]) --count[e];
        }
    }
};

}  // namespace

mpz_class compute_fa(const Graph& base, int a, const CensusGuard& guard) {
    int n = base.num_vertices();
    int k = chromatic_number(base);
    if (!guard.force && !(n <= 3 && a <= 3 && (n == 1 || a == 1)))
        throw std::runtime_error("f_a guard: only tiny base/column combinations supported");
    int size = k + a - 1;

    long long best = -1;
    EnumHooks hooks;
    hooks.on_leaf = [&](const ListAssignment& lx) {
        // Column lists from the grid assignment (vertex i*a+j).
        ProductInstance h = make_product_instance(base, a, 0);
        ListAssignment L(h.prod.graph.num_vertices());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < a; ++j) L.set_list(h.x_vertex(i, j), lx.list(i * a + j));
        auto cx = enumerate_CX(h, L, guard);
        int m = static_cast<int>(cx.size());
        if (m == 0) return true;  // cannot happen for complete bases with these sizes
        ColorSet universe = lx.universe();
        int fresh0 = 512;
        {
            auto uni = universe.to_vector();
            fresh0 = uni.empty() ? 0 : uni.back() + 1;
        }

        // Candidate fibers: for each X-side coloring f and each (k-1)-set K
        // avoiding f's colors, the fiber whose lists are f's row colors plus
        // K. Collect the distinct sets of colorings each fiber blocks.
        std::set<std::vector<int>> blocksets;
        for (int t = 0; t < m; ++t) {
            ColorSet used;
            for (int c : cx[t]) used.insert(c);
            std::vector<int> pool = (universe - used).to_vector();
            for (int r = 0; r < k - 1; ++r) pool.push_back(fresh0 + r);
            std::vector<int> idx(k - 1);
            auto choose = [&](auto&& self, int pos, int start) -> void {
                if (pos == k - 1) {
                    ColorSet kk;
                    for (int r : idx) kk.insert(pool[r]);
                    std::vector<int> blocked;
                    for (int t2 = 0; t2 < m; ++t2) {
                        bool bad = true;
                        ListAssignment residual(n);
                        for (int i = 0; i < n && bad; ++i) {
                            ColorSet lst = kk;
                            for (int j = 0; j < a; ++j) lst.insert(cx[t][i * a + j]);
                            for (int j = 0; j < a; ++j) lst.erase(cx[t2][i * a + j]);
                            residual.set_list(i, lst);
                        }
                        if (bad && find_proper_coloring(base, residual)) bad = false;
                        if (bad) blocked.push_back(t2);
                    }
                    if (!blocked.empty()) blocksets.insert(blocked);
                    return;
                }
                for (int r = start; r <= static_cast<int>(pool.size()) - (k - 1 - pos); ++r) {
                    idx[pos] = r;
                    self(self, pos + 1, r + 1);
                }
            };
            if (k == 1) {
                // Empty K: the fiber list is exactly f's colors.
                std::vector<int> blocked;
                for (int t2 = 0; t2 < m; ++t2) {
                    bool bad = true;
                    for (int i = 0; i < n && bad; ++i) {
                        ColorSet lst;
                        for (int j = 0; j < a; ++j) lst.insert(cx[t][i * a + j]);
                        for (int j = 0; j < a; ++j) lst.erase(cx[t2][i * a + j]);
                        if (!lst.empty()) bad = false;
                    }
                    if (bad) blocked.push_back(t2);
                }
                if (!blocked.empty()) blocksets.insert(blocked);
            } else {
                choose(choose, 0, 0);
            }
        }

        MinCover mc;
        mc.universe = m;
        mc.sets.assign(blocksets.begin(), blocksets.end());
        int upper = best < 0 ? m + 1 : static_cast<int>(std::min<long long>(best, m + 1));
        int cover = mc.run(upper);
        if (cover <= m && (best < 0 || cover < best)) best = cover;
        return true;
    };
    enumerate_canonical_disjoint_rows(n, a, size, hooks);
    if (best < 0) throw std::runtime_error("no non-colorable assignment found");
    return mpz_class(static_cast<long>(best));
}

}  // namespace lcw
