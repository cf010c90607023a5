#pragma once

#include "ek/bipoly.hpp"
#include "ek/rational.hpp"
#include "ek/unipoly.hpp"

#include <string>
#include <vector>

namespace ek {

/// The four combinatorial identities behind the energy-functional algebra,
/// each parameterized by an order k and verified in exact arithmetic.
enum class IdentityKind {
    /// sum_{i=0}^k (-1)^i C(k+1,i+1) sum_{p=0}^i (1-x)^p (1-y)^{i-p}
    ///   == sum_{i=0}^k x^{k-i} y^i
    PowerSum,
    /// sum_{i=0}^k (-1)^i C(k+1,i+1) sum_{p=0}^i (1+x)^p == (-x)^k
    SignedPower,
    /// with B_i = -(n-i)(1-(1-x)^{i+1}), n symbolic:
    /// sum_{i=0}^k (-1)^i C(k+1,i+1) B_i == -(n-k)x^{k+1} - (k+1)x^k
    PathWeights,
    /// sum_{i=0}^{k-1} C(k+1,i) (r-w)^{k-1-i} w^i == sum_{i=1}^k i r^{k-i} w^{i-1}
    CurvatureSum,
};

const char* identity_name(IdentityKind kind);

struct IdentityResult {
    bool pass = false;
    /// first mismatching monomial, empty when pass
    std::string counterexample;
};

/// Build both sides as canonical BiPoly and compare. k >= 1 required.
IdentityResult verify_identity(IdentityKind kind, int k);

/// x^m + 2 x^{m-1} + ... + m x + (m+1)
UniPoly ramp_polynomial(int m);

/// Exact derivative-sign report for ramp_polynomial(m) at x = -2/m.
struct DerivSignReport {
    int m = 0;
    /// values[i] = P^(i)(-2/m), exact, i = 0..m
    std::vector<Rational> values;
    bool all_nonneg = false;
    /// values[m-1] == 0 (m >= 1)
    bool penultimate_zero = false;
    /// every admissible even/odd coefficient pair of the derivative
    /// expansion is strictly positive at -2/m (0 <= i <= m-2,
    /// 1 <= p <= (m-i-1)/2)
    bool pair_terms_positive = false;
    /// the exact inequality chain bounding P^(m-4)(-2/m) from below by
    /// (2m^2+44m+120)/m^2 > 0, checked for m >= 5 (vacuously true below)
    bool tail_chain_ok = false;
};

DerivSignReport derivative_sign_report(int m);

/// Certificate that the quintic-in-eps expansion of the two-term remainder
/// bound matches its expanded form exactly and that every coefficient in y
/// is nonnegative on (1/2, 1].
struct ExpansionCertificate {
    bool product_matches_expansion = false;
    struct CoeffCert {
        int eps_power = 0;
        UniPoly poly;       // coefficient of eps^eps_power, polynomial in y
        bool nonneg = false;  // certified >= 0 on (1/2, 1]
    };
    std::vector<CoeffCert> coefficients;
    bool pass = false;
};

ExpansionCertificate epsilon_expansion_certificate();

/// Exact coefficients a_2..a_k of the expansion
///   sum_{i=1}^k i x^{k-i} = (x + 2/(k-1))^{k-1} + sum_{i=2}^k a_i (x + 2/(k-1))^{k-i},
/// i.e. the Taylor coefficients of the weight polynomial at -2/(k-1).
/// Requires k >= 2.
std::vector<Rational> weight_shift_coefficients(int k);

/// Exact large-m limit of the scaled two-term sum (6/i!)(A_0+A_1)(-2/m)/m at
/// i = 9m/10, together with exact finite-m samples (m divisible by 10).
struct PairSumLimit {
    Rational exact_limit;  // (1-y)(-8y^3+12y^2-12y+6) at y = 9/10 = -57/625
    std::vector<std::pair<int, Rational>> finite_values;  // m in {10,100,1000}
};

PairSumLimit pair_sum_limit();

}  // namespace ek
