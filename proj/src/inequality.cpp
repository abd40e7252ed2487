#include "lcw/inequality.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace lcw {

mpz_class threshold_b(int n, int a) {
    if (n < 1 || a < 1) throw std::invalid_argument("need n >= 1 and a >= 1");
    mpz_class per_column = 1;
    for (int i = 0; i < n; ++i) per_column *= n + a - 1 - i;
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), per_column.get_mpz_t(), a);
    return r;
}

OptInstance::OptInstance(int n_, int m_, int k_, int c_) : n(n_), m(m_), k(k_), C(c_) {
    if (n < 2 || m <= k || C <= k || k < 1)
        throw std::invalid_argument("need n >= 2, m > k >= 1, C > k");
    q = m / k;
    r = m % k;
}

mpz_class optlemma_closed_form(const OptInstance& inst) {
    mpz_class out = 1;
    if (inst.n <= inst.q) {
        for (int i = 0; i < inst.n; ++i) out *= inst.C - inst.k;
        return out;
    }
    for (int i = 0; i < inst.q; ++i) out *= inst.C - inst.k;
    out *= inst.C - inst.r;
    for (int i = 0; i < inst.n - inst.q - 1; ++i) out *= inst.C;
    return out;
}

mpz_class optlemma_bruteforce(const OptInstance& inst, long long guard) {
    double cells = std::pow(static_cast<double>(inst.k + 1), inst.n);
    if (cells > static_cast<double>(guard))
        throw std::runtime_error("brute-force guard: (k+1)^n too large");
    mpz_class best = -1;
    std::function<void(int, int, const mpz_class&)> go = [&](int i, int budget,
                                                             const mpz_class& prod) {
        if (i == inst.n) {
            if (best < 0 || prod < best) best = prod;
            return;
        }
        for (int x = 0; x <= std::min(inst.k, budget); ++x) go(i + 1, budget - x, prod * (inst.C - x));
    };
    go(0, inst.m, 1);
    return best;
}

bool majorizes(const std::vector<long>& x, const std::vector<long>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("equal lengths >= 2");
    for (size_t i = 1; i < x.size(); ++i)
        if (x[i] > x[i - 1] || y[i] > y[i - 1])
            throw std::invalid_argument("sequences must be sorted descending");
    long px = 0, py = 0;
    for (size_t i = 0; i < x.size(); ++i) {
        px += x[i];
        py += y[i];
        if (i + 1 < x.size() && px < py) return false;
    }
    return px == py;
}

KaramataReport karamata_property_check(int samples, int precision_bits, std::uint64_t seed) {
    KaramataReport report;
    std::mt19937_64 rng(seed);
    for (int t = 0; t < samples; ++t) {
        int len = 2 + static_cast<int>(rng() % 6);
        int k = 1 + static_cast<int>(rng() % 8);
        int c = k + 2;
        std::vector<long> x(len);
        for (long& v : x) v = static_cast<long>(rng() % (k + 1));
        std::sort(x.rbegin(), x.rend());
        // Robin Hood transfers produce a majorized sequence of equal sum.
        std::vector<long> y = x;
        int transfers = static_cast<int>(rng() % 8);
        for (int u = 0; u < transfers; ++u) {
            int i = static_cast<int>(rng() % len), j = static_cast<int>(rng() % len);
            if (y[i] > y[j] + 1) {
                --y[i];
                ++y[j];
            }
            std::sort(y.rbegin(), y.rend());
        }
        if (!majorizes(x, y)) throw std::runtime_error("transfer broke majorization");
        ++report.samples;
        if (x == y) {
            ++report.confirmed;  // equality case
            continue;
        }
        // Concavity of log(C - t): sum over x is at most sum over y.
        auto sum_f = [&](const std::vector<long>& v) {
            IntervalScalar acc = IntervalScalar::exact(0, precision_bits);
            for (long t2 : v) acc = acc + IntervalScalar::exact(c - t2, precision_bits).log();
            return acc;
        };
        IntervalScalar sx = sum_f(x), sy = sum_f(y);
        if (sx.le(sy))
            ++report.confirmed;
        else if (sx.gt(sy))
            ++report.violations;
        else
            ++report.inconclusive;
    }
    return report;
}

mpz_class coloringbound_lower(int n, int a, int s) {
    if (!(2 <= n && n <= a && 0 <= s && s <= a)) throw std::invalid_argument("need 2<=n<=a, 0<=s<=a");
    mpz_class out = 1;
    for (int t = 0; t < a - s; ++t) out *= a;
    for (int t = 0; t < s; ++t) out *= n + a - 1;
    for (int i = 2; i <= n - 1; ++i) {
        mpz_class f;
        mpz_ui_pow_ui(f.get_mpz_t(), n + a - i, a);
        out *= f;
    }
    return out;
}

namespace {

// prod_{i=3}^n (n+a-i+1)^s (n+a-i)^{a-s}, the greedy tail shared by the
// per-tuple lower bounds.
mpz_class greedy_tail(int n, int a, int s) {
    mpz_class tail = 1;
    for (int i = 3; i <= n; ++i) {
        mpz_class f1, f0;
        mpz_ui_pow_ui(f1.get_mpz_t(), n + a - i + 1, s);
        mpz_ui_pow_ui(f0.get_mpz_t(), n + a - i, a - s);
        tail *= f1 * f0;
    }
    return tail;
}

}  // namespace

IntervalScalar nminus1to1_lower(int n, int a, int s, int precision_bits) {
    if (!(2 <= n && n <= a && 0 <= s && s <= a)) throw std::invalid_argument("need 2<=n<=a, 0<=s<=a");
    IntervalScalar tail = IntervalScalar::exact(greedy_tail(n, a, s), precision_bits);
    if (s == 0) {
        mpz_class head;
        mpz_ui_pow_ui(head.get_mpz_t(), n + a - 2, a);
        return IntervalScalar::exact(head, precision_bits) * tail;
    }
    // (n+a-s-2)^{a/(s+1)} (n+a-1)^{sa/(s+1)} = [ (n+a-s-2)(n+a-1)^s ]^{a/(s+1)}
    mpz_class inner;
    mpz_ui_pow_ui(inner.get_mpz_t(), n + a - 1, s);
    inner *= n + a - s - 2;
    IntervalScalar head = IntervalScalar::exact(inner, precision_bits)
                              .pow(IntervalScalar::ratio(a, s + 1, precision_bits));
    return head * tail;
}

namespace {

// Left side of the key display at integer (n, a, s), as an enclosure.
IntervalScalar key_lhs(int n, int a, int s, int prec) {
    IntervalScalar t1 = IntervalScalar::ratio(n + a - 1, a, prec).pow_int(s);
    IntervalScalar bracket = IntervalScalar::ratio(n + a - 2 - s, n + a - 2, prec) *
                             IntervalScalar::ratio(n + a - 1, n + a - 2, prec).pow_int(s);
    IntervalScalar term2 = bracket.pow(IntervalScalar::ratio(a, s + 1, prec)) *
                           IntervalScalar::ratio(n + a - 2, a, prec).pow_int(s);
    mpz_class m = (mpz_class(1) << (n - 1)) - 1;
    return t1 + IntervalScalar::exact(m, prec) * term2;
}

}  // namespace

KeyVerdict key_inequality_check(int n, int a, int s, int precision_bits) {
    if (!(2 <= n && n <= a && 0 <= s && s <= a)) throw std::invalid_argument("need 2<=n<=a, 0<=s<=a");
    KeyVerdict v;
    v.n = n;
    v.a = a;
    v.s = s;
    v.rhs = mpz_class(1) << (n - 1);
    v.precision_bits = precision_bits;
    if (s == 0) {
        // Every factor is exactly 1: the left side is 1 + (2^{n-1} - 1).
        v.verdict = "holds";
        v.lhs = IntervalScalar::exact(v.rhs, precision_bits);
        return v;
    }
    for (int prec = precision_bits;; prec *= 2) {
        v.precision_bits = prec;
        v.lhs = key_lhs(n, a, s, prec);
        IntervalScalar rhs = IntervalScalar::exact(v.rhs, prec);
        if (v.lhs.ge(rhs)) {
            v.verdict = "holds";
            return v;
        }
        if (v.lhs.lt(rhs)) {
            v.verdict = "fails";
            return v;
        }
        if (prec >= kMaxPrecision) {
            v.verdict = "inconclusive";
            return v;
        }
    }
}

bool bigsineq_check(int n, int a, int s, int precision_bits) {
    if (!(3 <= n && n <= a)) throw std::invalid_argument("need 3 <= n <= a");
    if (100LL * s <= 73LL * (n + a - 2)) throw std::invalid_argument("need s > (73/100)(n+a-2)");
    for (int prec = precision_bits;; prec *= 2) {
        // Spot-check the chain step (1+(n-1)/a)^{a+(n-1)/2} >= e^{n-1},
        // squared to clear the half exponent.
        IntervalScalar chain = IntervalScalar::ratio(n + a - 1, a, prec).pow_int(2 * a + n - 1);
        IntervalScalar target = IntervalScalar::exact(2 * (n - 1), prec).exp();
        bool chain_ok = chain.ge(target);
        IntervalScalar lhs = IntervalScalar::ratio(n + a - 1, a, prec).pow_int(s);
        IntervalScalar rhs = IntervalScalar::exact(mpz_class(1) << (n - 1), prec);
        if (chain_ok && lhs.gt(rhs)) return true;
        if (lhs.lt(rhs) || chain.lt(target)) return false;
        if (prec >= kMaxPrecision)
            throw std::runtime_error("large-s check inconclusive at maximum precision");
    }
}

bool smallsineq_check(int n, int a, int s) {
    if (!(3 <= n && n <= a)) throw std::invalid_argument("need 3 <= n <= a");
    if (s < 0 || 100LL * s > 73LL * (n + a - 2))
        throw std::invalid_argument("need 0 <= s <= (73/100)(n+a-2)");
    // Exact sign polynomial from the proof.
    mpz_class an(a), poly;
    if (n >= 4) {
        mpz_class d(n - 2);
        poly = (10 * n - 31) * an * an * an + 5 * d * d * (3 * an * an - d * d);
    } else {
        poly = an * (17 * an * an - 20) + 5 * (13 * an * an - 7);
    }
    if (poly < 0) return false;
    if (s == 0) return true;  // the log display is exactly zero
    // Interval check of the log display itself.
    mpz_class m = (mpz_class(1) << (n - 1)) - 1;
    long b = static_cast<long>(s) * (s + 1);
    for (int prec = kDefaultPrecision;; prec *= 2) {
        IntervalScalar expr =
            IntervalScalar::exact(b, prec) * IntervalScalar::ratio(n + a - 1, a, prec).log() +
            IntervalScalar::exact(m * b, prec) * IntervalScalar::ratio(n + a - 2, a, prec).log() +
            IntervalScalar::exact(m * a, prec) *
                IntervalScalar::ratio(n + a - 2 - s, n + a - 2, prec).log() +
            IntervalScalar::exact(m * a * s, prec) *
                IntervalScalar::ratio(n + a - 1, n + a - 2, prec).log();
        IntervalScalar zero = IntervalScalar::exact(0, prec);
        if (expr.ge(zero)) return true;
        if (expr.lt(zero)) return false;
        if (prec >= kMaxPrecision)
            throw std::runtime_error("small-s log display inconclusive at maximum precision");
    }
}

bool nis2_check(int a, int s, int precision_bits) {
    if (!(a >= 2 && 0 <= s && s <= a)) throw std::invalid_argument("need a >= 2, 0 <= s <= a");
    if (s == 0) return true;  // 1 + 1 = 2 exactly
    for (int prec = precision_bits;; prec *= 2) {
        IntervalScalar t1 = IntervalScalar::ratio(a + 1, a, prec).pow_int(s);
        IntervalScalar bracket = IntervalScalar::ratio(a - s, a, prec) * t1;
        IntervalScalar lhs = t1 + bracket.pow(IntervalScalar::ratio(a, s + 1, prec));
        IntervalScalar two = IntervalScalar::exact(2, prec);
        if (lhs.ge(two)) return true;
        if (lhs.lt(two)) return false;
        if (prec >= kMaxPrecision)
            throw std::runtime_error("two-row check inconclusive at maximum precision");
    }
}

bool amgm_glue_check(int n, int a, int s, int precision_bits) {
    if (!(3 <= n && n <= a && 0 <= s && s <= a)) throw std::invalid_argument("need 3<=n<=a, 0<=s<=a");
    if (n > 16) throw std::invalid_argument("glue check sampled only for small n");
    if (s == 0) return true;  // both sides are exactly 2^{n-1}
    mpz_class m = (mpz_class(1) << (n - 1)) - 1;
    for (int prec = precision_bits;; prec *= 2) {
        IntervalScalar lhs = key_lhs(n, a, s, prec);
        IntervalScalar t1 = IntervalScalar::ratio(n + a - 1, a, prec);
        IntervalScalar t3 = IntervalScalar::ratio(n + a - 2, a, prec);
        IntervalScalar bracket = IntervalScalar::ratio(n + a - 2 - s, n + a - 2, prec) *
                                 IntervalScalar::ratio(n + a - 1, n + a - 2, prec).pow_int(s);
        unsigned long b = static_cast<unsigned long>(s) * (s + 1);
        IntervalScalar prodform =
            t1.pow_int(b) * t3.pow_mpz(m * b) * bracket.pow_mpz(m * a);
        mpq_class e(mpz_class(1), mpz_class((m + 1) * (s + 1)));
        e.canonicalize();
        IntervalScalar rhs = IntervalScalar::exact(m + 1, prec) *
                             prodform.pow(IntervalScalar::ratio(e, prec));
        if (lhs.ge(rhs)) return true;
        if (lhs.lt(rhs)) return false;
        if (prec >= kMaxPrecision)
            throw std::runtime_error("glue check inconclusive at maximum precision");
    }
}

namespace {

using Fn = std::function<IntervalScalar(const IntervalScalar&)>;

IntervalScalar eval_at(const Fn& g, const mpq_class& x, int prec) {
    return g(IntervalScalar::ratio(x, prec));
}

struct Piece {
    mpq_class lo, hi;
    bool increasing;  // certified sign of the derivative on [lo, hi]
};

// One "g >= bound on [lo, hi]" fact, verified per monotone piece: the
// derivative sign is certified by the caller (exactly, from the factored
// derivative); here we anchor each piece at its minimum endpoint and
// corroborate on the grid.
struct Fact {
    std::string name;
    Fn g;
    long bound;  // claim: g >= bound on the whole domain
    std::vector<Piece> pieces;
    bool deriv_certified = true;
};

void run_fact(const Fact& fact, int prec, long grid_den, FactReport& report) {
    ++report.facts;
    IntervalScalar bound = IntervalScalar::exact(fact.bound, prec);
    bool covered = fact.deriv_certified;
    for (const Piece& p : fact.pieces) {
        mpq_class anchor = p.increasing ? p.lo : p.hi;
        IntervalScalar v = eval_at(fact.g, anchor, prec);
        if (!v.ge(bound)) {
            covered = false;
            std::ostringstream msg;
            msg << fact.name << " anchor at " << anchor << " -> " << v.to_string(8);
            if (v.lt(bound))
                report.failures.push_back(msg.str());
            else
                report.inconclusive.push_back(msg.str());
        }
    }
    // Grid corroboration over the whole domain.
    mpq_class lo = fact.pieces.front().lo, hi = fact.pieces.back().hi;
    mpq_class step(1, grid_den);
    for (mpq_class x = lo; x <= hi; x += step) {
        ++report.cells;
        IntervalScalar v = eval_at(fact.g, x, prec);
        if (v.ge(bound)) continue;
        if (v.lt(bound)) {
            std::ostringstream msg;
            msg << fact.name << " grid point " << x << " -> " << v.to_string(8);
            report.failures.push_back(msg.str());
        } else if (!covered) {
            std::ostringstream msg;
            msg << fact.name << " grid point " << x << " unresolved";
            report.inconclusive.push_back(msg.str());
        }
    }
}

}  // namespace

FactReport verify_analytic_facts(int precision_bits, long grid_den) {
    FactReport report;
    int prec = precision_bits;
    auto one = [prec] { return IntervalScalar::exact(1, prec); };

    // ln(1+x) + c1 x + c2 x^2 with derivative numerator x (2 c2 x + (1+c1)),
    // an exactly factorable quadratic; piece signs below follow from the
    // rational roots 0 and -(1+c1)/(2 c2).
    auto log_minorant = [&](const mpq_class& c1, const mpq_class& c2) -> Fn {
        return [=](const IntervalScalar& x) {
            return (one() + x).log() + IntervalScalar::ratio(c1, prec) * x +
                   IntervalScalar::ratio(c2, prec) * x * x;
        };
    };
    // ln(1-r) + r + tau r^2 with derivative numerator r (2 tau - 1 - 2 tau r)
    // over 1-r; root at (2 tau - 1) / (2 tau).
    auto one_minus_r = [&](const mpq_class& tau) -> Fn {
        return [=](const IntervalScalar& r) {
            return (one() - r).log() + r + IntervalScalar::ratio(tau, prec) * r * r;
        };
    };
    auto exp_sum = [&](const mpq_class& tau) -> Fn {
        return [=](const IntervalScalar& r) {
            IntervalScalar a = (IntervalScalar::ratio(3, 4, prec) * r).exp();
            IntervalScalar b = (IntervalScalar::exact(0, prec) -
                                IntervalScalar::ratio(tau, prec) * r).exp();
            return a + b;
        };
    };
    // Exponential-sum derivative 0.75 e^{0.75 r} - tau e^{-tau r} is itself
    // increasing, so a nonnegative enclosure at the left endpoint certifies
    // the sign on the whole piece.
    auto exp_sum_increasing_from = [&](const mpq_class& tau, const mpq_class& lo) {
        IntervalScalar r = IntervalScalar::ratio(lo, prec);
        IntervalScalar d = IntervalScalar::ratio(3, 4, prec) *
                               (IntervalScalar::ratio(3, 4, prec) * r).exp() -
                           IntervalScalar::ratio(tau, prec) *
                               (IntervalScalar::exact(0, prec) -
                                IntervalScalar::ratio(tau, prec) * r).exp();
        return d.ge(IntervalScalar::exact(0, prec));
    };
    // Root of r (2 tau - 1 - 2 tau r): piece lies left (increasing) or right
    // (decreasing) of (2 tau - 1)/(2 tau); exact rational comparison.
    auto split_at_root = [](const mpq_class& tau, const mpq_class& lo,
                            const mpq_class& hi) -> std::vector<Piece> {
        mpq_class root = (2 * tau - 1) / (2 * tau);
        if (hi <= root) return {{lo, hi, true}};
        if (lo >= root) return {{lo, hi, false}};
        return {{lo, root, true}, {root, hi, false}};
    };

    std::vector<Fact> facts;
    facts.push_back({"ln(1+x) >= x - x^2/2 on [0,4]", log_minorant(-1, mpq_class(1, 2)), 0,
                     {{0, 4, true}}, true});
    facts.push_back({"ln(1+x) >= x - 1.1x^2 on [-0.73,4]",
                     log_minorant(-1, mpq_class(11, 10)), 0,
                     {{mpq_class(-73, 100), mpq_class(-6, 11), true},
                      {mpq_class(-6, 11), 0, false},
                      {0, 4, true}},
                     true});
    {
        // r >= 0.93 -> e^{0.75 r} >= 2; increasing, so the left endpoint
        // anchors the whole ray (graded on r in [0.93, 1], the range of s/a).
        Fn g = [&](const IntervalScalar& r) {
            return (IntervalScalar::ratio(3, 4, prec) * r).exp();
        };
        facts.push_back({"e^{0.75r} >= 2 on [0.93,1]", g, 2,
                         {{mpq_class(93, 100), 1, true}}, true});
    }
    struct Regime {
        mpq_class tau, lo, hi;
    };
    std::vector<Regime> regimes = {
        {2, mpq_class(78, 100), mpq_class(93, 100)},
        {mpq_class(5, 4), mpq_class(53, 100), mpq_class(78, 100)},
        {1, mpq_class(34, 100), mpq_class(53, 100)},
        {mpq_class(3, 4), 0, mpq_class(34, 100)},
    };
    for (const Regime& rg : regimes) {
        std::ostringstream nm1, nm2;
        nm1 << "ln(1-r) >= -r - " << rg.tau << "r^2 on [" << rg.lo << "," << rg.hi << "]";
        facts.push_back({nm1.str(), one_minus_r(rg.tau), 0, split_at_root(rg.tau, rg.lo, rg.hi),
                         true});
        nm2 << "e^{0.75r} + e^{-" << rg.tau << "r} >= 2 on [" << rg.lo << "," << rg.hi << "]";
        facts.push_back({nm2.str(), exp_sum(rg.tau), 2, {{rg.lo, rg.hi, true}},
                         exp_sum_increasing_from(rg.tau, rg.lo)});
    }
    for (const Fact& fact : facts) run_fact(fact, prec, grid_den, report);
    return report;
}

}  // namespace lcw
