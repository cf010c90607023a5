#pragma once

#include "ek/rational.hpp"
#include "ek/unipoly.hpp"

#include <map>
#include <string>
#include <utility>

namespace ek {

/// Sparse polynomial in two variables with exact rational coefficients.
/// Zero coefficients are never stored, so equality of the term maps is
/// canonical-form equality.
class BiPoly {
  public:
    using Key = std::pair<int, int>;  // (exponent of first var, of second)

    BiPoly() = default;

    static BiPoly constant(const Rational& a) { return monomial(0, 0, a); }
    static BiPoly monomial(int i, int j, const Rational& a);
    static BiPoly x() { return monomial(1, 0, Rational(1)); }
    static BiPoly y() { return monomial(0, 1, Rational(1)); }
    /// embed a univariate polynomial as a polynomial in the given variable (0 or 1)
    static BiPoly from_unipoly(const UniPoly& p, int var);

    bool is_zero() const { return terms_.empty(); }
    Rational coeff(int i, int j) const;
    const std::map<Key, Rational>& terms() const { return terms_; }

    BiPoly pow(int e) const;
    Rational eval(const Rational& x, const Rational& y) const;
    /// collect the coefficient of (second var)^j as a univariate polynomial
    /// in the first variable
    UniPoly coeff_of_second(int j) const;
    int max_degree_second() const;

    std::string to_string(const std::string& v1 = "x", const std::string& v2 = "y") const;

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend BiPoly operator*(const Rational& s, const BiPoly& p);
    BiPoly operator-() const;
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const BiPoly& a, const BiPoly& b) { return !(a == b); }

  private:
    void add_term(int i, int j, const Rational& a);
    std::map<Key, Rational> terms_;
};

}  // namespace ek
