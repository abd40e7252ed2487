#pragma once
// Seeded randomized property suite tying the product machinery to the
// counting bounds: per-fiber bad-set invariants, the cover/solver
// equivalence, per-tuple census identities, the auxiliary-graph containment,
// and the exact lower-bound formulas against true counts.
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lcw/list_assignment.hpp"
#include "lcw/product.hpp"

namespace lcw {

// Random (n+a-1)-assignment on K_n x K_{a,b} with pairwise-disjoint row
// lists on the X side and arbitrary lists on the fibers.
ListAssignment random_disjoint_row_assignment(const ProductInstance& h, std::mt19937_64& rng);

struct LemmaSuiteReport {
    int instances = 0;
    long long fiber_checks = 0;
    long long tuple_checks = 0;
    int cover_checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Run the full suite on `samples` random instances with n in {2,3},
// a in {1,2,3}, b in {1,2,3}.
LemmaSuiteReport run_lemma_suite(int samples, std::uint64_t seed);

}  // namespace lcw
