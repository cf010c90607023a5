#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace ek {

/// Shared layout for truncated multivariate Taylor expansions: up to 3
/// variables, total degree <= order. Multi-indices are enumerated in graded
/// lexicographic order and a flat multiplication table is precomputed.
/// Instances are interned; Jet stores a pointer to its space.
class JetSpace {
  public:
    static const JetSpace& get(int nvars, int order);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    int size() const { return size_; }

    int pos(const std::array<int, 3>& alpha) const;
    const std::array<int, 3>& exponents(int i) const { return midx_[i]; }
    int degree(int i) const { return deg_[i]; }

    struct MulEntry { uint16_t a, b, c; };
    const std::vector<MulEntry>& mul_table() const { return mul_; }

  private:
    JetSpace(int nvars, int order);
    int nvars_, order_, size_;
    std::vector<std::array<int, 3>> midx_;
    std::vector<int> deg_;
    std::vector<int> posmap_;  // dense lookup over (a0,a1,a2) with ai <= order
    std::vector<MulEntry> mul_;
};

/// Truncated Taylor jet of a scalar field at a point. Coefficient i is the
/// Taylor coefficient for the multi-index JetSpace::exponents(i), i.e. the
/// partial derivative divided by the factorial of the multi-index.
class Jet {
  public:
    Jet() : sp_(nullptr) {}
    explicit Jet(const JetSpace& sp, double constant = 0.0)
        : sp_(&sp), c_(sp.size(), 0.0) {
        c_[0] = constant;
    }

    static Jet variable(const JetSpace& sp, int i, double x0);
    static Jet constant(const JetSpace& sp, double v) { return Jet(sp, v); }

    const JetSpace& space() const { return *sp_; }
    double operator[](int i) const { return c_[i]; }
    double& operator[](int i) { return c_[i]; }
    int size() const { return static_cast<int>(c_.size()); }

    double value() const { return c_[0]; }
    double grad(int i) const;
    /// d2/dxi dxj, exact from the stored coefficients
    double hess(int i, int j) const;
    /// partial derivative for a full multi-index (multiplies by factorials)
    double deriv(const std::array<int, 3>& alpha) const;

    /// jet of the field d^2 f / dx_i dx_j in a lower-order space
    Jet shift2(const JetSpace& target, int i, int j) const;
    /// jet of d f / dx_i
    Jet shift1(const JetSpace& target, int i) const;
    /// copy into a space with the same nvars and lower (or equal) order
    Jet truncated(const JetSpace& target) const;

    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator*=(double s);
    friend Jet operator+(Jet a, const Jet& b) { a += b; return a; }
    friend Jet operator-(Jet a, const Jet& b) { a -= b; return a; }
    friend Jet operator*(double s, Jet a) { a *= s; return a; }
    friend Jet operator*(Jet a, double s) { a *= s; return a; }
    Jet operator-() const;

    friend Jet operator*(const Jet& a, const Jet& b);

    /// analytic functions of a jet; log and inv require positive constant
    /// term, exp is shifted so the series runs on the zero-constant part
    friend Jet jet_log(const Jet& a);
    friend Jet jet_exp(const Jet& a);
    friend Jet jet_inv(const Jet& a);

  private:
    /// evaluate a power series sum coeffs[k] z^k where z = a with its
    /// constant part removed (Horner in jet arithmetic)
    static Jet series(const Jet& a, const double* coeffs, int count);

    const JetSpace* sp_;
    std::vector<double> c_;
};

}  // namespace ek
