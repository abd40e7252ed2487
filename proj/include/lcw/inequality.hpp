#pragma once
// Exact and certified-numeric verification of the counting lower bounds and
// the analytic inequalities behind the product threshold: the threshold
// formula, the Karamata minimization lemma, the per-tuple lower bounds, the
// key inequality, and its supporting large-s / small-s / two-row lemmas with
// their calculus facts.
#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "lcw/interval.hpp"

namespace lcw {

inline constexpr int kDefaultPrecision = 128;
inline constexpr int kMaxPrecision = 1024;

// ((n+a-1)!/(a-1)!)^a, the exact fiber-count threshold.
mpz_class threshold_b(int n, int a);

struct OptInstance {
    int n, m, k, C;  // n >= 2, m > k, C > k
    int q = 0, r = 0;  // Euclidean decomposition m = k*q + r

    OptInstance(int n_, int m_, int k_, int c_);
};

// Minimum of prod(C - x_i) over integer tuples 0 <= x_i <= k, sum <= m:
// closed form and exhaustive oracle.
mpz_class optlemma_closed_form(const OptInstance& inst);
mpz_class optlemma_bruteforce(const OptInstance& inst, long long guard = 10'000'000);

// The three-part majorization test; inputs must be sorted descending.
bool majorizes(const std::vector<long>& x, const std::vector<long>& y);

struct KaramataReport {
    int samples = 0;
    int confirmed = 0;
    int inconclusive = 0;
    int violations = 0;
};
// Random majorizing pairs checked against sum log(C - x_i) concavity.
KaramataReport karamata_property_check(int samples, int precision_bits = kDefaultPrecision,
                                       std::uint64_t seed = 1);

// a^{a-s} (n+a-1)^s prod_{i=2}^{n-1} (n+a-i)^a, the per-tuple count bound.
mpz_class coloringbound_lower(int n, int a, int s);

// Enclosure of (n+a-s-2)^{a/(s+1)} (n+a-1)^{sa/(s+1)} prod_{i=3}^n factors,
// the per-tuple (n-1)-to-1 count bound.
IntervalScalar nminus1to1_lower(int n, int a, int s, int precision_bits = kDefaultPrecision);

struct KeyVerdict {
    int n = 0, a = 0, s = 0;
    std::string verdict;  // holds | fails | inconclusive
    IntervalScalar lhs;
    mpz_class rhs;  // 2^{n-1}
    int precision_bits = kDefaultPrecision;
};

// The key display: (1+(n-1)/a)^s + (2^{n-1}-1) [ (1-s/(n+a-2)) *
// (1+1/(n+a-2))^s ]^{a/(s+1)} (1+(n-2)/a)^s >= 2^{n-1}. Exact at s = 0;
// otherwise interval evaluation with precision escalation.
KeyVerdict key_inequality_check(int n, int a, int s, int precision_bits = kDefaultPrecision);

// Large-s regime: s > (73/100)(n+a-2) forces (1+(n-1)/a)^s > 2^{n-1}; also
// spot-checks the (1+x/n)^{n+x/2} >= e^x chain step.
bool bigsineq_check(int n, int a, int s, int precision_bits = kDefaultPrecision);

// Small-s regime: the exact sign polynomial for the log display, plus an
// interval check of the display itself at the given point.
bool smallsineq_check(int n, int a, int s);

// Two-row case of the key display (n = 2), checked directly.
bool nis2_check(int a, int s, int precision_bits = kDefaultPrecision);

// The geometric-mean reduction gluing the small-s product form to the key
// display: LHS >= 2^{n-1} * (product form)^{1/((s+1) 2^{n-1})}.
bool amgm_glue_check(int n, int a, int s, int precision_bits = kDefaultPrecision);

struct FactReport {
    int facts = 0;
    int cells = 0;
    std::vector<std::string> failures;
    std::vector<std::string> inconclusive;
    bool all_verified() const { return failures.empty() && inconclusive.empty(); }
};

// Certified verification of the calculus facts: the two log minorants and
// the per-regime bounds behind the two-row case. Each fact is verified on
// whole intervals by splitting at its critical points, certifying the
// derivative sign piecewise, anchoring at the piece's minimum endpoint, and
// corroborating on a grid of the given resolution.
FactReport verify_analytic_facts(int precision_bits = kDefaultPrecision, long grid_den = 64);

}  // namespace lcw
