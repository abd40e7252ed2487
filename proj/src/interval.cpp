#include "lcw/interval.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace lcw {

IntervalScalar::IntervalScalar(int precision_bits) : prec_(precision_bits) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

IntervalScalar::IntervalScalar(const IntervalScalar& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

IntervalScalar::IntervalScalar(IntervalScalar&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

IntervalScalar& IntervalScalar::operator=(IntervalScalar o) {
    swap(*this, o);
    return *this;
}

IntervalScalar::~IntervalScalar() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(IntervalScalar& a, IntervalScalar& b) noexcept {
    std::swap(a.prec_, b.prec_);
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
}

IntervalScalar IntervalScalar::exact(long v, int precision_bits) {
    IntervalScalar r(precision_bits);
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::exact(const mpz_class& v, int precision_bits) {
    IntervalScalar r(precision_bits);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::ratio(const mpq_class& q, int precision_bits) {
    IntervalScalar r(precision_bits);
    mpfr_set_q(r.lo_, q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, q.get_mpq_t(), MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::ratio(long num, long den, int precision_bits) {
    mpq_class q(num, den);
    q.canonicalize();
    return ratio(q, precision_bits);
}

bool IntervalScalar::is_exact_zero() const {
    return mpfr_zero_p(lo_) && mpfr_zero_p(hi_);
}

IntervalScalar IntervalScalar::operator+(const IntervalScalar& o) const {
    IntervalScalar r(std::max(prec_, o.prec_));
    mpfr_add(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, hi_, o.hi_, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::operator-(const IntervalScalar& o) const {
    IntervalScalar r(std::max(prec_, o.prec_));
    mpfr_sub(r.lo_, lo_, o.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, hi_, o.lo_, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::operator*(const IntervalScalar& o) const {
    IntervalScalar r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    // lower = min of the four directed-down products
    mpfr_mul(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    // upper = max of the four directed-up products
    mpfr_mul(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_mul(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_mul(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

IntervalScalar IntervalScalar::operator/(const IntervalScalar& o) const {
    if (mpfr_sgn(o.lo_) <= 0 && mpfr_sgn(o.hi_) >= 0)
        throw std::domain_error("interval division by an interval containing zero");
    IntervalScalar r(std::max(prec_, o.prec_));
    mpfr_t t;
    mpfr_init2(t, r.prec_);
    mpfr_div(r.lo_, lo_, o.lo_, MPFR_RNDD);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDD);
    mpfr_min(r.lo_, r.lo_, t, MPFR_RNDD);
    mpfr_div(r.hi_, lo_, o.lo_, MPFR_RNDU);
    mpfr_div(t, lo_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.lo_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_div(t, hi_, o.hi_, MPFR_RNDU);
    mpfr_max(r.hi_, r.hi_, t, MPFR_RNDU);
    mpfr_clear(t);
    return r;
}

IntervalScalar IntervalScalar::exp() const {
    IntervalScalar r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::log() const {
    if (mpfr_sgn(lo_) <= 0) throw std::domain_error("interval log of a non-positive value");
    IntervalScalar r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::pow_int(unsigned long e) const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("integer power of a possibly-negative interval");
    IntervalScalar r(prec_);
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::pow_mpz(const mpz_class& e) const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("integer power of a possibly-negative interval");
    if (e < 0) throw std::domain_error("negative exponent");
    IntervalScalar r(prec_);
    mpfr_pow_z(r.lo_, lo_, e.get_mpz_t(), MPFR_RNDD);
    mpfr_pow_z(r.hi_, hi_, e.get_mpz_t(), MPFR_RNDU);
    return r;
}

IntervalScalar IntervalScalar::pow(const IntervalScalar& e) const {
    if (is_exact_zero()) return exact(0, std::max(prec_, e.prec_));
    return (log() * e).exp();
}

bool IntervalScalar::ge(const IntervalScalar& o) const { return mpfr_cmp(lo_, o.hi_) >= 0; }
bool IntervalScalar::gt(const IntervalScalar& o) const { return mpfr_cmp(lo_, o.hi_) > 0; }
bool IntervalScalar::le(const IntervalScalar& o) const { return mpfr_cmp(hi_, o.lo_) <= 0; }
bool IntervalScalar::lt(const IntervalScalar& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }

double IntervalScalar::lower_d() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double IntervalScalar::upper_d() const { return mpfr_get_d(hi_, MPFR_RNDU); }

std::string IntervalScalar::to_string(int digits) const {
    char* lo = nullptr;
    char* hi = nullptr;
    mpfr_asprintf(&lo, "%.*Rg", digits, lo_);
    mpfr_asprintf(&hi, "%.*Rg", digits, hi_);
    std::string s = std::string("[") + lo + ", " + hi + "]";
    mpfr_free_str(lo);
    mpfr_free_str(hi);
    return s;
}

}  // namespace lcw
