#pragma once
// Machinery for H = M x K_{a,b} where M is strongly k-chromatic-choosable:
// the X-side coloring census, bad-coloring fiber analysis, the colorability
// certificate, the auxiliary per-tuple graph, the extremal witness
// construction, and exact f_a computation for tiny base graphs.
#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lcw/chromatic.hpp"
#include "lcw/graph.hpp"
#include "lcw/list_assignment.hpp"
#include "lcw/solver.hpp"

namespace lcw {

// H = M x K_{a,b}. Vertex (v_i, x_j) has id i*(a+b)+j and (v_i, y_l) has id
// i*(a+b)+a+l, following ProductStructure's layout.
struct ProductInstance {
    Graph base;  // M, vertices v_0..v_{n-1}
    int a = 0;
    int b = 0;
    ProductStructure prod;

    int n() const { return base.num_vertices(); }
    int x_vertex(int i, int j) const { return prod.vertex(i, j); }
    int y_vertex(int i, int l) const { return prod.vertex(i, a + l); }
};
ProductInstance make_product_instance(const Graph& base, int a, int b);

// An H_X coloring is stored row-major: entry i*a + j is the color of (v_i, x_j).
using XColoring = std::vector<int>;

struct CensusGuard {
    long long max_colorings = 10'000'000;
    bool force = false;
    void check(const mpz_class& total) const;
};

struct PerTupleCounts {
    mpz_class cx;  // |C_{X,q}|
    mpz_class ix;  // |I_{X,q}|
    int s = 0;     // s(q)
};

struct XSideCensus {
    mpz_class total_CX;
    mpz_class injective_IX;
    std::map<std::vector<int>, PerTupleCounts> per_tuple;  // key: q-tuple
    std::map<int, int> sq_flags;                           // color -> s_q
};

// Every color class of f has size <= n-1?
bool is_n_minus_1_to_1(const XColoring& f, int n);

// Is the proper L_X-coloring f bad for fiber y (no proper coloring of the
// fiber copy of M from the residual lists L(v_i,y) minus f's row-i colors)?
bool is_bad_coloring(const ProductInstance& h, const ListAssignment& L, const XColoring& f, int y);

// Exact enumeration of all proper L_X-colorings of H_X (one independent copy
// of M per column x_j). Requires pairwise-disjoint rows. Asserts that equal
// colors in a coloring differ in both coordinates and that a color q used n
// times never reappears below row 1 of its own column.
XSideCensus census_X(const ProductInstance& h, const ListAssignment& L,
                     const CensusGuard& guard = {});

// Materialized C_X, in odometer order over per-column colorings.
std::vector<XColoring> enumerate_CX(const ProductInstance& h, const ListAssignment& L,
                                    const CensusGuard& guard = {});

struct FiberAnalysis {
    int y_vertex = 0;                             // fiber index in [0, b)
    std::vector<XColoring> bad_set_B;             // colorings bad for this fiber
    std::vector<XColoring> bad_injective_B_I;     // the (n-1)-to-1 ones among them
    std::optional<ColorSet> residual_K;           // common residual when badness seen
};

// B and B_I for one fiber, with the size/uniqueness invariants asserted:
// |B| <= 2^{k-1}, and B_I nonempty forces B = B_I with |B| = 1. An invariant
// violation throws with a serialized counterexample (falsification event).
FiberAnalysis fiber_analysis(const ProductInstance& h, const ListAssignment& L, int y, int k,
                             const CensusGuard& guard = {});

struct Certificate {
    std::string kind;  // colorable-by-rows | colorable-by-bound | colorable-by-extension |
                       // non-colorable-by-cover | inconclusive
    int b = 0;
    mpq_class bound_value;          // |I_X| + (|C_X| - |I_X|) / 2^{k-1}
    std::optional<Coloring> coloring;          // solver witness when colorable
    std::vector<int> cover;                    // lowest bad fiber per f (census order)
    std::string to_json() const;
};

// Decide L-colorability of H and produce a checkable certificate. Rows that
// intersect give a coloring directly; b below the counting bound forces the
// solver to succeed; otherwise every f in C_X is matched to its lowest bad
// fiber, and a full cover proves non-colorability (cross-checked against the
// solver; disagreement throws).
Certificate certify_or_color(const ProductInstance& h, const ListAssignment& L, int k,
                             const CensusGuard& guard = {});

// Auxiliary graph on V_X for tuple q: columns with s_{q_j} = 0 are full
// cliques; otherwise rows 2..n form a clique and (v_1,x_j) is joined to
// (v_2,x_{j'}) for every other column j'. Vertex ids follow XColoring order.
Graph build_Mq(const ProductInstance& h, const XSideCensus& census, const std::vector<int>& q);

// Check that every proper L_X-coloring of M_q with first row q is an
// (n-1)-to-1 proper coloring of H_X with the same first row, and that the
// greedy and closed-form lower bounds on those counts hold.
bool verify_correspondence(const ProductInstance& h, const ListAssignment& L,
                           const XSideCensus& census, const std::vector<int>& q);

// Hard (n+a-1)-assignment on K_n x K_{a,b*} with b* = ((n+a-1)!/(a-1)!)^a:
// disjoint constant column lists, one fiber per X-side coloring whose lists
// are that coloring's row colors plus a shared fresh (n-1)-set.
struct ExtremalWitness {
    ProductInstance h;
    ListAssignment L;
    mpz_class b_star;
};
ExtremalWitness construct_extremal_assignment(int n, int a, long long max_fibers = 200000);

// Smallest b for which some (k+a-1)-assignment on M x K_{a,b} admits no
// proper coloring, for tiny strongly chromatic-choosable M. Searched as an
// exact set-cover over canonical disjoint-row X-assignments, with candidate
// fibers reduced to (coloring, residual-set) patterns.
mpz_class compute_fa(const Graph& base, int a, const CensusGuard& guard = {});

}  // namespace lcw
