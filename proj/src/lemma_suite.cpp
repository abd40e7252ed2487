#include "lcw/lemma_suite.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "lcw/inequality.hpp"
#include "lcw/solver.hpp"

namespace lcw {

namespace {

ColorSet set_from(const std::vector<int>& colors, int lo, int hi) {
    ColorSet s;
    for (int t = lo; t < hi; ++t) s.insert(colors[t]);
    return s;
}

}  // namespace

ListAssignment random_disjoint_row_assignment(const ProductInstance& h, std::mt19937_64& rng) {
    int n = h.n();
    int a = h.a;
    int size = n + a - 1;
    int universe = a * size + size + 3;
    ListAssignment L(h.prod.graph.num_vertices());
    std::vector<int> colors(universe);
    std::iota(colors.begin(), colors.end(), 0);
    for (int i = 0; i < n; ++i) {
        std::shuffle(colors.begin(), colors.end(), rng);
        for (int j = 0; j < a; ++j)
            L.set_list(h.x_vertex(i, j), set_from(colors, j * size, (j + 1) * size));
    }
    for (int y = 0; y < h.b; ++y)
        for (int i = 0; i < n; ++i) {
            std::shuffle(colors.begin(), colors.end(), rng);
            L.set_list(h.y_vertex(i, y), set_from(colors, 0, size));
        }
    return L;
}

LemmaSuiteReport run_lemma_suite(int samples, std::uint64_t seed) {
    LemmaSuiteReport report;
    std::mt19937_64 rng(seed);
    CensusGuard guard;
    for (int t = 0; t < samples; ++t) {
        int n = 2 + static_cast<int>(rng() % 2);
        int a = 1 + static_cast<int>(rng() % 3);
        int b = 1 + static_cast<int>(rng() % 3);
        ProductInstance h = make_product_instance(complete_graph(n), a, b);
        ListAssignment L = random_disjoint_row_assignment(h, rng);
        ++report.instances;
        auto blame = [&](const std::string& what) {
            std::ostringstream msg;
            msg << "sample " << t << " (n=" << n << ",a=" << a << ",b=" << b << "): " << what
                << "\n" << L.to_text();
            report.violations.push_back(msg.str());
        };
        try {
            // Census runs the equal-color-placement and full-multiplicity
            // assertions internally; fiber analysis runs the bad-set size
            // and uniqueness assertions.
            XSideCensus census = census_X(h, L, guard);
            for (int y = 0; y < b; ++y) {
                fiber_analysis(h, L, y, n, guard);
                ++report.fiber_checks;
            }
            // Cover/solver equivalence: no proper coloring of the whole
            // product iff every X-side coloring is bad for some fiber.
            auto cx = enumerate_CX(h, L, guard);
            bool covered = true;
            for (const XColoring& f : cx) {
                bool bad_somewhere = false;
                for (int y = 0; y < b && !bad_somewhere; ++y)
                    bad_somewhere = is_bad_coloring(h, L, f, y);
                if (!bad_somewhere) {
                    covered = false;
                    break;
                }
            }
            bool colorable = find_proper_coloring(h.prod.graph, L).has_value();
            ++report.cover_checks;
            if (covered == colorable) blame("cover verdict disagrees with the solver");
            // Per-tuple identities, containment, and count lower bounds.
            mpz_class sum_cx = 0, sum_ix = 0;
            for (const auto& [q, pt] : census.per_tuple) {
                sum_cx += pt.cx;
                sum_ix += pt.ix;
                ++report.tuple_checks;
                if (!verify_correspondence(h, L, census, q)) blame("auxiliary-graph containment");
                if (n <= a) {
                    if (pt.cx < coloringbound_lower(n, a, pt.s))
                        blame("per-tuple count below the greedy lower bound");
                    IntervalScalar ix = IntervalScalar::exact(pt.ix);
                    if (ix.lt(nminus1to1_lower(n, a, pt.s)))
                        blame("per-tuple (n-1)-to-1 count below the closed-form bound");
                }
            }
            if (sum_cx != census.total_CX || sum_ix != census.injective_IX)
                blame("per-tuple sums disagree with the totals");
        } catch (const std::exception& e) {
            blame(std::string("invariant assertion: ") + e.what());
        }
    }
    return report;
}

}  // namespace lcw
