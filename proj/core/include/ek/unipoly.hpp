#pragma once

#include "ek/rational.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace ek {

/// Dense univariate polynomial with exact rational coefficients,
/// coefficient index = degree. Always trimmed: the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient list).
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const Rational& a) { return UniPoly({a}); }
    static UniPoly x() { return UniPoly({Rational(0), Rational(1)}); }
    static UniPoly monomial(int degree, const Rational& a);

    bool is_zero() const { return c_.empty(); }
    /// degree of the zero polynomial is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Rational coeff(int i) const {
        return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Rational(0);
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational eval(const Rational& at) const;
    UniPoly derivative() const;
    UniPoly pow(int e) const;
    /// substitute q for the variable
    UniPoly compose(const UniPoly& q) const;

    /// exact coefficients of p(x0 + s) as a polynomial in s; entry i equals
    /// p^(i)(x0)/i!. One synthetic-division pass per coefficient.
    std::vector<Rational> taylor_at(const Rational& x0) const;

    std::string to_string(const std::string& var = "x") const;

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const Rational& s, const UniPoly& p);
    UniPoly operator-() const;
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  private:
    void trim();
    std::vector<Rational> c_;
};

/// p^(order)(at), exact; order past the degree gives 0
Rational poly_derivative_eval(const UniPoly& p, int order, const Rational& at);

/// Exact count of distinct real roots of p in (lo, hi) or (lo, hi],
/// via a Sturm chain on the square-free part of p.
int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi,
                     bool include_hi);

/// Certifies p >= 0 on [lo, hi]: no roots in the open interval, interior
/// sample positive, endpoint values nonnegative. Roots exactly at an
/// endpoint are accepted when the endpoint value is zero.
bool nonneg_on_interval(const UniPoly& p, const Rational& lo, const Rational& hi);

}  // namespace ek
