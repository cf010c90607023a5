#include "ek/unipoly.hpp"

#include <stdexcept>

namespace ek {

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::monomial(int degree, const Rational& a) {
    if (degree < 0) throw std::invalid_argument("UniPoly: negative degree");
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = a;
    return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& at) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(c));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> c(p.c_.size());
    for (size_t i = 0; i < p.c_.size(); ++i) c[i] = s * p.c_[i];
    return UniPoly(std::move(c));
}

UniPoly UniPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("UniPoly::pow: negative exponent");
    UniPoly r = UniPoly::constant(Rational(1));
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

UniPoly UniPoly::compose(const UniPoly& q) const {
    UniPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * q + UniPoly::constant(*it);
    return r;
}

std::vector<Rational> UniPoly::taylor_at(const Rational& x0) const {
    // in-place repeated synthetic division by (x - x0); afterwards
    // b[k] = p^(k)(x0)/k!
    std::vector<Rational> b = c_;
    if (b.empty()) return {Rational(0)};
    const size_t n = b.size();
    for (size_t k = 0; k + 1 < n; ++k)
        for (size_t i = n - 1; i-- > k;) b[i] += x0 * b[i + 1];
    return b;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        if (c_[i].is_zero()) continue;
        if (!s.empty()) s += c_[i].sign() > 0 ? " + " : " - ";
        else if (c_[i].sign() < 0) s += "-";
        Rational a = c_[i].abs();
        if (i == 0 || a != Rational(1)) s += a.to_string();
        if (i > 0) {
            if (a != Rational(1)) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

Rational poly_derivative_eval(const UniPoly& p, int order, const Rational& at) {
    if (order < 0) throw std::invalid_argument("poly_derivative_eval: negative order");
    if (order > p.degree()) return Rational(0);
    UniPoly d = p;
    for (int i = 0; i < order; ++i) d = d.derivative();
    return d.eval(at);
}

namespace {

// polynomial remainder of a by b over the rationals (b nonzero)
UniPoly poly_rem(UniPoly a, const UniPoly& b) {
    while (!a.is_zero() && a.degree() >= b.degree()) {
        Rational f = a.coeff(a.degree()) / b.coeff(b.degree());
        int shift = a.degree() - b.degree();
        a = a - f * (UniPoly::monomial(shift, Rational(1)) * b);
    }
    return a;
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = poly_rem(a, b);
        a = b;
        b = r;
    }
    if (!a.is_zero()) a = a.coeff(a.degree()).inv() * a;  // monic
    return a;
}

UniPoly poly_div_exact(const UniPoly& a, const UniPoly& b) {
    UniPoly rem = a, quot;
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        Rational f = rem.coeff(rem.degree()) / b.coeff(b.degree());
        int shift = rem.degree() - b.degree();
        UniPoly t = f * UniPoly::monomial(shift, Rational(1));
        quot = quot + t;
        rem = rem - t * b;
    }
    return quot;
}

int sign_changes(const std::vector<UniPoly>& chain, const Rational& at) {
    int changes = 0, prev = 0;
    for (const auto& p : chain) {
        int s = p.eval(at).sign();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

}  // namespace

int sturm_root_count(const UniPoly& p, const Rational& lo, const Rational& hi,
                     bool include_hi) {
    if (p.is_zero()) throw std::invalid_argument("sturm_root_count: zero polynomial");
    if (!(lo < hi)) throw std::invalid_argument("sturm_root_count: need lo < hi");
    // square-free part: roots counted without multiplicity
    UniPoly g = poly_gcd(p, p.derivative());
    UniPoly sf = (g.degree() > 0) ? poly_div_exact(p, g) : p;
    if (sf.degree() == 0) return 0;

    std::vector<UniPoly> chain{sf, sf.derivative()};
    while (!chain.back().is_zero() && chain.back().degree() > 0)
        chain.push_back(-poly_rem(chain[chain.size() - 2], chain.back()));
    if (chain.back().is_zero()) chain.pop_back();

    // V(lo) - V(hi) counts roots in (lo, hi]
    int half_open = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (!include_hi && sf.eval(hi).is_zero()) half_open -= 1;
    return half_open;
}

bool nonneg_on_interval(const UniPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) return true;
    if (p.eval(lo).sign() < 0 || p.eval(hi).sign() < 0) return false;
    if (p.degree() == 0) return p.coeff(0).sign() >= 0;
    if (sturm_root_count(p, lo, hi, /*include_hi=*/false) != 0) return false;
    Rational mid = (lo + hi) / Rational(2);
    return p.eval(mid).sign() > 0;
}

}  // namespace ek
