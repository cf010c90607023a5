#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ek {

/// Arbitrary-precision rational, always stored reduced with positive
/// denominator. Thin value wrapper around GMP's mpq_class so the rest of
/// the exact kernel never touches GMP directly.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) { q_.canonicalize(); }
    Rational(long n, long d) : q_(n, d) {
        if (d == 0) throw std::invalid_argument("Rational: zero denominator");
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    static Rational from_string(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        q.canonicalize();
        return Rational(q);
    }

    static Rational factorial(unsigned n) {
        mpz_class z;
        mpz_fac_ui(z.get_mpz_t(), n);
        return Rational(z);
    }

    static Rational binomial(unsigned n, unsigned k) {
        if (k > n) return Rational(0);
        mpz_class z;
        mpz_bin_uiui(z.get_mpz_t(), n, k);
        return Rational(z);
    }

    /// integer power, exponent may be negative for nonzero base
    Rational pow(long e) const {
        if (e < 0) {
            if (q_ == 0) throw std::domain_error("Rational: 0^negative");
            return inv().pow(-e);
        }
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
        mpq_class r(num, den);
        r.canonicalize();
        return Rational(r);
    }

    Rational inv() const {
        if (q_ == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(mpq_class(1) / q_);
    }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return q_ == 0; }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return q_.get_d(); }
    std::string to_string() const { return q_.get_str(); }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(mpq_class(a.q_ / b.q_));
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

  private:
    mpq_class q_;
};

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& a, long b) { return a * Rational(b); }

}  // namespace ek
