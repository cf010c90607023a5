#include "ek/identities.hpp"

#include <stdexcept>

namespace ek {

namespace {

const Rational kOne(1);

BiPoly one_minus(const BiPoly& v) { return BiPoly::constant(kOne) - v; }

std::string first_mismatch(const BiPoly& lhs, const BiPoly& rhs,
                           const char* v1, const char* v2) {
    BiPoly d = lhs - rhs;
    if (d.is_zero()) return {};
    const auto& [key, val] = *d.terms().begin();
    return "coefficient of " + std::string(v1) + "^" + std::to_string(key.first) +
           " " + std::string(v2) + "^" + std::to_string(key.second) +
           " differs by " + val.to_string();
}

}  // namespace

const char* identity_name(IdentityKind kind) {
    switch (kind) {
        case IdentityKind::PowerSum: return "power-sum";
        case IdentityKind::SignedPower: return "signed-power";
        case IdentityKind::PathWeights: return "path-weights";
        case IdentityKind::CurvatureSum: return "curvature-sum";
    }
    return "?";
}

IdentityResult verify_identity(IdentityKind kind, int k) {
    if (k < 1) throw std::invalid_argument("verify_identity: k must be >= 1");
    const BiPoly x = BiPoly::x(), y = BiPoly::y();
    BiPoly lhs, rhs;
    const char* v1 = "x";
    const char* v2 = "y";

    switch (kind) {
        case IdentityKind::PowerSum: {
            for (int i = 0; i <= k; ++i) {
                Rational c = Rational(i % 2 ? -1 : 1) * Rational::binomial(k + 1, i + 1);
                BiPoly inner;
                for (int p = 0; p <= i; ++p)
                    inner = inner + one_minus(x).pow(p) * one_minus(y).pow(i - p);
                lhs = lhs + c * inner;
            }
            for (int i = 0; i <= k; ++i)
                rhs = rhs + BiPoly::monomial(k - i, i, kOne);
            break;
        }
        case IdentityKind::SignedPower: {
            for (int i = 0; i <= k; ++i) {
                Rational c = Rational(i % 2 ? -1 : 1) * Rational::binomial(k + 1, i + 1);
                BiPoly inner;
                for (int p = 0; p <= i; ++p)
                    inner = inner + (BiPoly::constant(kOne) + x).pow(p);
                lhs = lhs + c * inner;
            }
            rhs = (-x).pow(k);
            break;
        }
        case IdentityKind::PathWeights: {
            // second variable plays the symbolic dimension n
            v2 = "n";
            const BiPoly n = BiPoly::y();
            for (int i = 0; i <= k; ++i) {
                Rational c = Rational(i % 2 ? -1 : 1) * Rational::binomial(k + 1, i + 1);
                BiPoly bi = -(n - BiPoly::constant(Rational(i))) *
                            (BiPoly::constant(kOne) - one_minus(x).pow(i + 1));
                lhs = lhs + c * bi;
            }
            rhs = -(n - BiPoly::constant(Rational(k))) * x.pow(k + 1) -
                  Rational(k + 1) * x.pow(k);
            break;
        }
        case IdentityKind::CurvatureSum: {
            // variables r (first) and w (second) stand for two commuting forms
            v1 = "r";
            v2 = "w";
            const BiPoly r = BiPoly::x(), w = BiPoly::y();
            for (int i = 0; i <= k - 1; ++i)
                lhs = lhs + Rational::binomial(k + 1, i) * (r - w).pow(k - 1 - i) * w.pow(i);
            for (int i = 1; i <= k; ++i)
                rhs = rhs + Rational(i) * BiPoly::monomial(k - i, i - 1, kOne);
            break;
        }
    }

    IdentityResult res;
    res.pass = (lhs == rhs);
    if (!res.pass) res.counterexample = first_mismatch(lhs, rhs, v1, v2);
    return res;
}

UniPoly ramp_polynomial(int m) {
    if (m < 0) throw std::invalid_argument("ramp_polynomial: m must be >= 0");
    std::vector<Rational> c(m + 1);
    for (int d = 0; d <= m; ++d) c[d] = Rational(m + 1 - d);
    return UniPoly(std::move(c));
}

DerivSignReport derivative_sign_report(int m) {
    if (m < 1) throw std::invalid_argument("derivative_sign_report: m must be >= 1");
    DerivSignReport rep;
    rep.m = m;
    const Rational at = Rational(-2, m);
    const UniPoly P = ramp_polynomial(m);

    auto taylor = P.taylor_at(at);  // taylor[i] = P^(i)(at)/i!
    rep.values.resize(m + 1);
    Rational fac(1);
    for (int i = 0; i <= m; ++i) {
        if (i > 0) fac *= Rational(i);
        rep.values[i] = taylor[i] * fac;
    }

    rep.all_nonneg = true;
    for (const auto& v : rep.values)
        if (v.sign() < 0) rep.all_nonneg = false;
    rep.penultimate_zero = (m >= 1) && rep.values[m - 1].is_zero();

    // Pair positivity: the derivative expansion groups terms as
    //   A_p(x) = (m-i+1-2p) a(2p,i) x^{2p} + (m-i-2p) a(2p+1,i) x^{2p+1},
    // a(p,i) = (i+p)!/p!. At x = -2/m, A_p > 0 reduces to the integer
    // inequality m (m-i+1-2p)(2p+1) > 2 (m-i-2p)(i+2p+1).
    rep.pair_terms_positive = true;
    for (int i = 0; i <= m - 2 && rep.pair_terms_positive; ++i) {
        int pmax = (m - i - 1) / 2;
        for (int p = 1; p <= pmax; ++p) {
            long long lhs = 1LL * m * (m - i + 1 - 2 * p) * (2 * p + 1);
            long long rhs = 2LL * (m - i - 2 * p) * (i + 2 * p + 1);
            if (!(lhs > rhs)) {
                rep.pair_terms_positive = false;
                break;
            }
        }
    }

    // Tail chain for i = m-4 (m >= 5): with t = 6/(m-4)! P^(m-4)(-2/m),
    //   t >= 30 - 48(m-3)/m + 36(m-2)(m-3)/m^2 - 16(m-1)(m-2)(m-3)/m^3
    //     >= 30 - 48(m-3)/m + 20(m-2)(m-3)/m^2 = (2m^2+44m+120)/m^2 > 0,
    // all three relations exact.
    if (m >= 5) {
        const Rational M(m);
        Rational t = Rational(6) * rep.values[m - 4] / Rational::factorial(m - 4);
        Rational b1 = Rational(30) - Rational(48) * Rational(m - 3) / M +
                      Rational(36) * Rational(m - 2) * Rational(m - 3) / (M * M) -
                      Rational(16) * Rational(m - 1) * Rational(m - 2) * Rational(m - 3) / (M * M * M);
        Rational b2 = Rational(30) - Rational(48) * Rational(m - 3) / M +
                      Rational(20) * Rational(m - 2) * Rational(m - 3) / (M * M);
        Rational closed = (Rational(2) * M * M + Rational(44) * M + Rational(120)) / (M * M);
        rep.tail_chain_ok = (t >= b1) && (b1 >= b2) && (b2 == closed) && (closed.sign() > 0);
    } else {
        rep.tail_chain_ok = true;
    }
    return rep;
}

ExpansionCertificate epsilon_expansion_certificate() {
    ExpansionCertificate cert;
    const BiPoly y = BiPoly::x();    // first variable: y
    const BiPoly eps = BiPoly::y();  // second variable: eps
    auto C = [](long v) { return BiPoly::constant(Rational(v)); };

    // product form of the scaled remainder bound
    BiPoly prod =
        Rational(6) * (C(1) - y + Rational(2) * eps) * (y - eps) * (y - Rational(2) * eps) *
            (y - Rational(3) * eps) * (y - Rational(4) * eps) -
        Rational(20) * (C(1) - y + Rational(3) * eps) * (y - Rational(2) * eps) *
            (y - Rational(3) * eps) * (y - Rational(4) * eps) +
        Rational(30) * (C(1) - y + Rational(4) * eps) * (y - Rational(3) * eps) *
            (y - Rational(4) * eps) -
        Rational(30) * (C(1) - y + Rational(5) * eps) * (y - Rational(4) * eps) +
        Rational(15) * (C(1) - y + Rational(6) * eps);

    // the expanded quintic in eps, coefficients as polynomials in y
    const std::vector<UniPoly> expansion = {
        UniPoly({Rational(15), Rational(-45), Rational(60), Rational(-50), Rational(26), Rational(-6)}),
        UniPoly({Rational(210), Rational(-480), Rational(510), Rational(-300), Rational(72)}),
        UniPoly({Rational(960), Rational(-1720), Rational(1270), Rational(-330)}),
        UniPoly({Rational(1920), Rational(-2340), Rational(720)}),
        UniPoly({Rational(1584), Rational(-744)}),
        UniPoly({Rational(288)}),
    };
    BiPoly displayed;
    for (int j = 0; j < static_cast<int>(expansion.size()); ++j)
        displayed = displayed + BiPoly::from_unipoly(expansion[j], 0) * BiPoly::monomial(0, j, Rational(1));

    cert.product_matches_expansion = (prod == displayed);

    const Rational half(1, 2), one(1);
    cert.pass = cert.product_matches_expansion;
    for (int j = 0; j < static_cast<int>(expansion.size()); ++j) {
        ExpansionCertificate::CoeffCert cc;
        cc.eps_power = j;
        cc.poly = expansion[j];
        cc.nonneg = nonneg_on_interval(cc.poly, half, one);
        cert.pass = cert.pass && cc.nonneg;
        cert.coefficients.push_back(std::move(cc));
    }
    return cert;
}

std::vector<Rational> weight_shift_coefficients(int k) {
    if (k < 2) throw std::invalid_argument("weight_shift_coefficients: k must be >= 2");
    // weight polynomial sum_{i=1}^k i x^{k-i} equals ramp_polynomial(k-1)
    const UniPoly P = ramp_polynomial(k - 1);
    const Rational at = Rational(-2, k - 1);
    auto taylor = P.taylor_at(at);  // taylor[j] = a_{k-j} for j <= k-2
    std::vector<Rational> a;
    a.reserve(k - 1);
    for (int i = 2; i <= k; ++i) a.push_back(taylor[k - i]);
    return a;
}

PairSumLimit pair_sum_limit() {
    PairSumLimit out;
    // (1-y)(-8y^3+12y^2-12y+6) evaluated at y = 9/10
    UniPoly g = UniPoly({Rational(1), Rational(-1)}) *
                UniPoly({Rational(6), Rational(-12), Rational(12), Rational(-8)});
    out.exact_limit = g.eval(Rational(9, 10));

    for (int m : {10, 100, 1000}) {
        const int i = 9 * m / 10;
        const Rational M(m);
        Rational v = Rational(6) * Rational(m - i + 1) -
                     Rational(12) * Rational(m - i) * Rational(i + 1) / M +
                     Rational(12) * Rational(m - i - 1) * Rational(i + 2) * Rational(i + 1) / (M * M) -
                     Rational(8) * Rational(m - i - 2) * Rational(i + 3) * Rational(i + 2) * Rational(i + 1) /
                         (M * M * M);
        out.finite_values.emplace_back(m, v);
    }
    return out;
}

}  // namespace ek
