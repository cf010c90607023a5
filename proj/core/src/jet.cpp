#include "ek/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ek {

namespace {
double factorial_small(int n) {
    static const double f[] = {1, 1, 2, 6, 24, 120, 720, 5040};
    return f[n];
}
}  // namespace

JetSpace::JetSpace(int nvars, int order) : nvars_(nvars), order_(order) {
    if (nvars < 1 || nvars > 3) throw std::invalid_argument("JetSpace: 1..3 variables");
    if (order < 1 || order > 6) throw std::invalid_argument("JetSpace: order 1..6");

    for (int d = 0; d <= order; ++d) {
        std::array<int, 3> a{0, 0, 0};
        // enumerate exponents of total degree d, lexicographic within degree
        std::vector<std::array<int, 3>> level;
        if (nvars == 1) {
            level.push_back({d, 0, 0});
        } else if (nvars == 2) {
            for (int i = d; i >= 0; --i) level.push_back({i, d - i, 0});
        } else {
            for (int i = d; i >= 0; --i)
                for (int j = d - i; j >= 0; --j) level.push_back({i, j, d - i - j});
        }
        for (auto& m : level) {
            midx_.push_back(m);
            deg_.push_back(d);
        }
        (void)a;
    }
    size_ = static_cast<int>(midx_.size());

    const int stride = order_ + 1;
    posmap_.assign(stride * stride * stride, -1);
    for (int i = 0; i < size_; ++i) {
        const auto& m = midx_[i];
        posmap_[(m[0] * stride + m[1]) * stride + m[2]] = i;
    }

    for (int i = 0; i < size_; ++i)
        for (int j = 0; j < size_; ++j) {
            if (deg_[i] + deg_[j] > order_) continue;
            std::array<int, 3> s{midx_[i][0] + midx_[j][0], midx_[i][1] + midx_[j][1],
                                 midx_[i][2] + midx_[j][2]};
            mul_.push_back({static_cast<uint16_t>(i), static_cast<uint16_t>(j),
                            static_cast<uint16_t>(pos(s))});
        }
}

int JetSpace::pos(const std::array<int, 3>& alpha) const {
    const int stride = order_ + 1;
    if (alpha[0] > order_ || alpha[1] > order_ || alpha[2] > order_) return -1;
    return posmap_[(alpha[0] * stride + alpha[1]) * stride + alpha[2]];
}

const JetSpace& JetSpace::get(int nvars, int order) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, JetSpace*> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(nvars, order);
    auto it = cache.find(key);
    if (it == cache.end())
        it = cache.emplace(key, new JetSpace(nvars, order)).first;
    return *it->second;
}

Jet Jet::variable(const JetSpace& sp, int i, double x0) {
    Jet j(sp, x0);
    std::array<int, 3> e{0, 0, 0};
    e[i] = 1;
    j.c_[sp.pos(e)] = 1.0;
    return j;
}

double Jet::grad(int i) const {
    std::array<int, 3> e{0, 0, 0};
    e[i] = 1;
    return c_[sp_->pos(e)];
}

double Jet::hess(int i, int j) const {
    std::array<int, 3> e{0, 0, 0};
    e[i] += 1;
    e[j] += 1;
    return c_[sp_->pos(e)] * (i == j ? 2.0 : 1.0);
}

double Jet::deriv(const std::array<int, 3>& alpha) const {
    int p = sp_->pos(alpha);
    if (p < 0) throw std::out_of_range("Jet::deriv: order too high");
    double f = factorial_small(alpha[0]) * factorial_small(alpha[1]) * factorial_small(alpha[2]);
    return c_[p] * f;
}

Jet Jet::shift2(const JetSpace& target, int i, int j) const {
    Jet out(target);
    std::array<int, 3> e{0, 0, 0};
    e[i] += 1;
    e[j] += 1;
    for (int t = 0; t < target.size(); ++t) {
        const auto& m = target.exponents(t);
        std::array<int, 3> src{m[0] + e[0], m[1] + e[1], m[2] + e[2]};
        int p = sp_->pos(src);
        if (p < 0 || target.degree(t) + 2 > sp_->order()) continue;
        double fac = 1.0;
        for (int v = 0; v < 3; ++v)
            fac *= factorial_small(src[v]) / factorial_small(m[v]);
        out.c_[t] = c_[p] * fac;
    }
    return out;
}

Jet Jet::shift1(const JetSpace& target, int i) const {
    Jet out(target);
    std::array<int, 3> e{0, 0, 0};
    e[i] = 1;
    for (int t = 0; t < target.size(); ++t) {
        const auto& m = target.exponents(t);
        std::array<int, 3> src{m[0] + e[0], m[1] + e[1], m[2] + e[2]};
        int p = sp_->pos(src);
        if (p < 0 || target.degree(t) + 1 > sp_->order()) continue;
        double fac = 1.0;
        for (int v = 0; v < 3; ++v)
            fac *= factorial_small(src[v]) / factorial_small(m[v]);
        out.c_[t] = c_[p] * fac;
    }
    return out;
}

Jet Jet::truncated(const JetSpace& target) const {
    Jet out(target);
    for (int t = 0; t < target.size(); ++t) {
        int p = sp_->pos(target.exponents(t));
        if (p >= 0) out.c_[t] = c_[p];
    }
    return out;
}

Jet& Jet::operator+=(const Jet& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

Jet& Jet::operator*=(double s) {
    for (double& v : c_) v *= s;
    return *this;
}

Jet Jet::operator-() const {
    Jet out = *this;
    for (double& v : out.c_) v = -v;
    return out;
}

Jet operator*(const Jet& a, const Jet& b) {
    Jet out(*a.sp_);
    for (const auto& e : a.sp_->mul_table())
        out.c_[e.c] += a.c_[e.a] * b.c_[e.b];
    return out;
}

Jet Jet::series(const Jet& a, const double* coeffs, int count) {
    Jet z = a;
    z.c_[0] = 0.0;
    Jet out(*a.sp_, coeffs[count - 1]);
    for (int k = count - 2; k >= 0; --k) {
        out = out * z;
        out.c_[0] += coeffs[k];
    }
    return out;
}

Jet jet_log(const Jet& a) {
    const double c0 = a.c_[0];
    if (!(c0 > 0.0)) throw std::domain_error("jet_log: nonpositive constant term");
    Jet z = a;
    z *= 1.0 / c0;
    // log(1+u) truncated at the space order
    static const double coeffs[] = {0.0, 1.0, -0.5, 1.0 / 3.0, -0.25, 0.2, -1.0 / 6.0};
    Jet out = Jet::series(z, coeffs, a.sp_->order() + 1);
    out.c_[0] += std::log(c0);
    return out;
}

Jet jet_exp(const Jet& a) {
    static const double coeffs[] = {1.0, 1.0, 0.5, 1.0 / 6.0, 1.0 / 24.0, 1.0 / 120.0, 1.0 / 720.0};
    Jet out = Jet::series(a, coeffs, a.sp_->order() + 1);
    out *= std::exp(a.c_[0]);
    return out;
}

Jet jet_inv(const Jet& a) {
    const double c0 = a.c_[0];
    if (c0 == 0.0) throw std::domain_error("jet_inv: zero constant term");
    Jet z = a;
    z *= 1.0 / c0;
    static const double coeffs[] = {1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0};
    Jet out = Jet::series(z, coeffs, a.sp_->order() + 1);
    out *= 1.0 / c0;
    return out;
}

}  // namespace ek
