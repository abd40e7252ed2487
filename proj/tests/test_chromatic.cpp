#include <doctest.h>

#include <gmpxx.h>

#include "lcw/chromatic.hpp"
#include "lcw/graph.hpp"

using namespace lcw;

namespace {

// Oracles with known closed forms.
mpz_class cycle_poly(int n, int k) {  // (k-1)^n + (-1)^n (k-1)
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), k - 1, n);
    return t + (n % 2 == 0 ? k - 1 : -(k - 1));
}

mpz_class falling(int k, int n) {  // k (k-1) ... (k-n+1)
    mpz_class r = 1;
    for (int i = 0; i < n; ++i) r *= k - i;
    return r;
}

}  // namespace

TEST_CASE("chromatic polynomial values match the cycle and clique formulas") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k <= 5; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            CHECK(chromatic_polynomial_value(cycle(n), k) == cycle_poly(n, k));
            CHECK(chromatic_polynomial_value(complete_graph(n), k) == falling(k, n));
        }
    CHECK(chromatic_polynomial_value(complete_graph(4), 3) == 0);
    CHECK(chromatic_polynomial_value(cycle(6), 3) == 66);
}

TEST_CASE("chromatic polynomial counts constant-list colorings") {
    Graph g = join(complete_graph(1), path(3));
    for (int k = 2; k <= 4; ++k) {
        ListAssignment L(g.num_vertices(), ColorSet::range(0, k));
        CHECK(chromatic_polynomial_value(g, k) == mpz_class(static_cast<unsigned long>(
                                                      count_colorings(g, L).count)));
    }
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(complete_graph(4)) == 4);
    CHECK(chromatic_number(cycle(5)) == 3);
    CHECK(chromatic_number(cycle(6)) == 2);
    CHECK(chromatic_number(complete_bipartite(3, 3)) == 2);
    CHECK(chromatic_number(join(complete_graph(1), cycle(5))) == 4);
}

TEST_CASE("list color function: clique and cycle minima equal the polynomial") {
    // for these graphs the constant assignment is minimizing
    CHECK(list_color_function(complete_graph(2), 2).value == 2);
    CHECK(list_color_function(complete_graph(3), 3).value == 6);
    CHECK(list_color_function(cycle(4), 2).value == cycle_poly(4, 2));
    ListCountMinimum r = list_color_function(complete_graph(3), 3);
    CHECK(count_colorings(complete_graph(3), r.minimizer).count == 6);
}

TEST_CASE("list color function minimum is attained by some enumerated assignment") {
    Graph g = path(3);
    ListCountMinimum r = list_color_function(g, 2);
    // brute floor: every canonical 2-assignment has at least r.value colorings
    EnumHooks hooks;
    hooks.on_leaf = [&](const ListAssignment& L) {
        CHECK(count_colorings(g, L).count >= r.value.get_ui());
        return true;
    };
    enumerate_canonical_assignments(3, 2, hooks);
    CHECK(count_colorings(g, r.minimizer).count == r.value.get_ui());
}

TEST_CASE("choosability checks find hard assignments exactly when they exist") {
    ChoosableCheck odd = check_k_choosable(cycle(5), 2);
    CHECK(!odd.choosable);  // odd cycles are not 2-choosable
    REQUIRE(odd.hard.has_value());
    CHECK(!find_proper_coloring(cycle(5), *odd.hard).has_value());

    CHECK(check_k_choosable(cycle(4), 2).choosable);  // even cycles are
    CHECK(check_k_choosable(path(3), 2).choosable);
    CHECK(check_k_choosable(complete_graph(3), 3).choosable);
    CHECK(!check_k_choosable(complete_graph(3), 2).choosable);
}

TEST_CASE("list chromatic numbers of small graphs") {
    CHECK(list_chromatic_number(complete_graph(3)).value == 3);
    CHECK(list_chromatic_number(cycle(4)).value == 2);
    CHECK(list_chromatic_number(cycle(5)).value == 3);
    CHECK(list_chromatic_number(path(4)).value == 2);
    ChiListResult r = list_chromatic_number(complete_bipartite(2, 4));
    CHECK(r.value == 3);
    // lower-bound witness is a genuinely hard (value-1)-assignment
    CHECK(r.hard_assignment.is_k_assignment(2));
    CHECK(!find_proper_coloring(complete_bipartite(2, 4), r.hard_assignment).has_value());
}

TEST_CASE("strong chromatic-choosability decisions") {
    CHECK(is_strongly_chromatic_choosable(complete_graph(2)).value);
    CHECK(is_strongly_chromatic_choosable(complete_graph(3)).value);
    CHECK(is_strongly_chromatic_choosable(cycle(3)).value);
    CHECK(is_strongly_chromatic_choosable(cycle(5)).value);
    CHECK(is_strongly_chromatic_choosable(join(complete_graph(1), cycle(5))).value);

    SccResult c4 = is_strongly_chromatic_choosable(cycle(4));
    CHECK(!c4.value);
    CHECK(!is_strongly_chromatic_choosable(path(3)).value);
    // a reported counterexample must be genuinely non-constant and hard
    if (c4.counterexample) {
        CHECK(!c4.counterexample->is_constant());
        CHECK(!find_proper_coloring(cycle(4), *c4.counterexample).has_value());
    }
}

TEST_CASE("orientation certificate certifies 2-choosability of even cycles") {
    CHECK(orientation_certifies_choosable(cycle(4), 2));
    CHECK(orientation_certifies_choosable(cycle(6), 2));
}

TEST_CASE("certified upper bounds agree with exact list chromatic numbers") {
    CHECK(certify_choosable_upper(path(4), 2).has_value());
    CHECK(!certify_choosable_upper(cycle(5), 2).has_value());
    CHECK(certify_choosable_upper(cycle(5), 3).has_value());
    // 4-regular product graph: degeneracy bound 5, orientation shows 4
    Graph t = cartesian_product(cycle(4), cycle(4)).graph;
    CHECK(certify_choosable_upper(t, 4).has_value());
}

TEST_CASE("enumeration guard refuses oversized exhaustive searches") {
    EnumGuard tight;
    tight.cells = 4;
    CHECK_THROWS(check_k_choosable(complete_graph(3), 2, tight));
    tight.force = true;
    CHECK(!check_k_choosable(complete_graph(3), 2, tight).choosable);
}
