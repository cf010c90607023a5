#include "ek/bipoly.hpp"

#include <stdexcept>

namespace ek {

void BiPoly::add_term(int i, int j, const Rational& a) {
    if (a.is_zero()) return;
    auto key = Key{i, j};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(key, a);
    } else {
        it->second += a;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BiPoly BiPoly::monomial(int i, int j, const Rational& a) {
    if (i < 0 || j < 0) throw std::invalid_argument("BiPoly: negative exponent");
    BiPoly p;
    p.add_term(i, j, a);
    return p;
}

BiPoly BiPoly::from_unipoly(const UniPoly& p, int var) {
    BiPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        if (var == 0)
            r.add_term(i, 0, p.coeff(i));
        else
            r.add_term(0, i, p.coeff(i));
    }
    return r;
}

Rational BiPoly::coeff(int i, int j) const {
    auto it = terms_.find(Key{i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    for (const auto& [k, v] : b.terms_) r.add_term(k.first, k.second, v);
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, -v);
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ka, va] : a.terms_)
        for (const auto& [kb, vb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, va * vb);
    return r;
}

BiPoly operator*(const Rational& s, const BiPoly& p) {
    BiPoly r;
    if (s.is_zero()) return r;
    for (const auto& [k, v] : p.terms_) r.terms_.emplace(k, s * v);
    return r;
}

BiPoly BiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("BiPoly::pow: negative exponent");
    BiPoly r = BiPoly::constant(Rational(1));
    BiPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational r(0);
    for (const auto& [k, v] : terms_) r += v * x.pow(k.first) * y.pow(k.second);
    return r;
}

UniPoly BiPoly::coeff_of_second(int j) const {
    std::vector<Rational> c;
    for (const auto& [k, v] : terms_) {
        if (k.second != j) continue;
        if (k.first >= static_cast<int>(c.size())) c.resize(k.first + 1, Rational(0));
        c[k.first] = v;
    }
    return UniPoly(std::move(c));
}

int BiPoly::max_degree_second() const {
    int d = 0;
    for (const auto& [k, v] : terms_) d = std::max(d, k.second);
    return d;
}

std::string BiPoly::to_string(const std::string& v1, const std::string& v2) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, v] : terms_) {
        if (!s.empty()) s += v.sign() > 0 ? " + " : " - ";
        else if (v.sign() < 0) s += "-";
        Rational a = v.abs();
        bool unit = (a == Rational(1)) && (k.first > 0 || k.second > 0);
        if (!unit) s += a.to_string();
        auto app = [&](const std::string& var, int e) {
            if (e == 0) return;
            if (s.back() != '-' && !unit) s += "*";
            unit = false;
            s += var;
            if (e > 1) s += "^" + std::to_string(e);
        };
        app(v1, k.first);
        app(v2, k.second);
    }
    return s;
}

}  // namespace ek
