#pragma once
// Exact chromatic quantities: chromatic polynomial values, list color
// function, list chromatic number, strong chromatic-choosability, and
// certified upper bounds on choosability (degeneracy and orientation-based).
#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "lcw/enumeration.hpp"
#include "lcw/graph.hpp"
#include "lcw/list_assignment.hpp"
#include "lcw/solver.hpp"

namespace lcw {

// Guard for exhaustive enumeration over k-assignments: refuse when
// k * |V| exceeds `cells` unless forced.
struct EnumGuard {
    long long cells = 24;
    bool force = false;
    void check(long long k, long long n) const;
};

// P(G, k) by deletion-contraction with memoization.
mpz_class chromatic_polynomial_value(const Graph& g, int k);

int chromatic_number(const Graph& g);

// Minimum over canonical k-assignments of the number of proper colorings,
// with the minimizing assignment. Branch-and-bound exact.
struct ListCountMinimum {
    mpz_class value;
    ListAssignment minimizer;
};
ListCountMinimum list_color_function(const Graph& g, int k, const EnumGuard& guard = {});

// Is every assignment with the given per-vertex list sizes colorable?
// Exhaustive (canonical) with sound pruning; returns a hard assignment when
// the answer is no.
struct ChoosableCheck {
    bool choosable = false;
    std::optional<ListAssignment> hard;
};
ChoosableCheck check_sizes_choosable(const Graph& g, const std::vector<int>& sizes, const EnumGuard& guard = {});
ChoosableCheck check_k_choosable(const Graph& g, int k, const EnumGuard& guard = {});

// Smallest k such that every k-assignment is colorable, with a hard
// (k-1)-assignment witnessing the lower bound. Levels at or above the
// coloring number are accepted without enumeration (greedy certificate).
struct ChiListResult {
    int value = 0;
    ListAssignment hard_assignment;  // non-colorable (value-1)-assignment
    std::string method;              // how the upper bound was certified
};
ChiListResult list_chromatic_number(const Graph& g, const EnumGuard& guard = {});

// Strong chromatic-choosability: chromatic-number-critical and every
// non-colorable (chi-1)-assignment is constant.
struct SccResult {
    bool value = false;
    int k = 0;  // chromatic number
    std::string reason;
    std::optional<ListAssignment> counterexample;  // non-constant, non-colorable
};
SccResult is_strongly_chromatic_choosable(const Graph& g, const EnumGuard& guard = {});

// Orientation certificate: true if some orientation with maximum outdegree
// <= bound-1 has unequal numbers of even and odd spanning circulations,
// which certifies that every assignment with lists of size bound is
// colorable. Deterministic given the seed.
bool orientation_certifies_choosable(const Graph& g, int bound, std::uint64_t seed = 1, int max_attempts = 4000);

// Certified upper bound on the list chromatic number <= `target`, trying
// (in order) degeneracy, exhaustive enumeration within the guard, and the
// orientation certificate. Returns the name of the successful method.
std::optional<std::string> certify_choosable_upper(const Graph& g, int target, const EnumGuard& guard = {},
                                                   std::uint64_t seed = 1);

}  // namespace lcw
