#pragma once
// Interval scalars over MPFR with outward (directed) rounding: every
// operation returns an enclosure of the true real result, so a comparison
// that succeeds on interval endpoints is a certified real inequality.
#include <gmpxx.h>
#include <mpfr.h>

#include <string>

namespace lcw {

class IntervalScalar {
  public:
    explicit IntervalScalar(int precision_bits = 128);
    IntervalScalar(const IntervalScalar& o);
    IntervalScalar(IntervalScalar&& o) noexcept;
    IntervalScalar& operator=(IntervalScalar o);
    ~IntervalScalar();

    static IntervalScalar exact(long v, int precision_bits = 128);
    static IntervalScalar exact(const mpz_class& v, int precision_bits = 128);
    // Enclosure of num/den (exact when representable).
    static IntervalScalar ratio(const mpq_class& q, int precision_bits = 128);
    static IntervalScalar ratio(long num, long den, int precision_bits = 128);

    int precision_bits() const { return prec_; }
    bool is_exact_zero() const;

    IntervalScalar operator+(const IntervalScalar& o) const;
    IntervalScalar operator-(const IntervalScalar& o) const;
    IntervalScalar operator*(const IntervalScalar& o) const;
    IntervalScalar operator/(const IntervalScalar& o) const;  // o must exclude 0

    IntervalScalar exp() const;
    IntervalScalar log() const;  // lower endpoint must be positive
    IntervalScalar pow_int(unsigned long e) const;
    IntervalScalar pow_mpz(const mpz_class& e) const;  // e >= 0, base >= 0
    // General power exp(e * log(*this)); base must be positive, except that
    // an exact-zero base returns exact zero (for positive exponents).
    IntervalScalar pow(const IntervalScalar& e) const;

    // Certified comparisons (true only when the reals must satisfy them).
    bool ge(const IntervalScalar& o) const;  // every x here >= every y there
    bool gt(const IntervalScalar& o) const;
    bool le(const IntervalScalar& o) const;
    bool lt(const IntervalScalar& o) const;

    double lower_d() const;
    double upper_d() const;
    std::string to_string(int digits = 20) const;

  private:
    int prec_;
    mpfr_t lo_, hi_;
    friend void swap(IntervalScalar& a, IntervalScalar& b) noexcept;
};

void swap(IntervalScalar& a, IntervalScalar& b) noexcept;

}  // namespace lcw
