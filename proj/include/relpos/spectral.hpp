#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "relpos/quadratic.hpp"
#include "relpos/substitution.hpp"

namespace relpos {

// Exact Perron-Frobenius data of a primitive 2x2 matrix: the dominant
// eigenvalue, its algebraic conjugate, and u with [u 1]^T a right
// eigenvector. All values live in Q(sqrt(D)).
struct PFData {
    QuadraticNumber lambda_pf;
    QuadraticNumber lambda_conjugate;
    QuadraticNumber u;
};

PFData pf_data(const SubstitutionMatrix& m);  // throws NonPrimitive

// Predicted limits for fixed points of a primitive substitution, all exact:
// freq_a = u/(u+1), freq_b = 1/(u+1), p_a/n -> 1 + 1/u, p_b/n -> u + 1,
// r/n -> u - 1/u.
struct LimitReport {
    QuadraticNumber freq_a;
    QuadraticNumber freq_b;
    QuadraticNumber lim_pa_over_n;
    QuadraticNumber lim_pb_over_n;
    QuadraticNumber lim_r_over_n;
};

LimitReport predicted_limits(const SubstitutionMatrix& m);  // throws NonPrimitive

// Freq(b) from the limit of r(n)/n: 0 at +inf, 1 at -inf, 1/2 at 0, and
// (2 + r - sqrt(4 + r^2)) / (2r) otherwise. Exact whenever sqrt(4 + r^2)
// lands in the field of r; numeric fallback otherwise.
struct FreqFromLimit {
    bool exact = false;
    QuadraticNumber value;  // meaningful when exact
    double approx = 0.0;    // always filled
};

FreqFromLimit freq_from_r_limit(const ExtendedQuad& rlim);

// p = lim p_b/n and q = lim p_a/n from r = lim r/n, on the extended reals:
// p = (2 + r + sqrt(4 + r^2))/2, q = (2 - r + sqrt(4 + r^2))/2, 1/p + 1/q = 1.
std::pair<ExtendedQuad, ExtendedQuad> pq_from_r(const ExtendedQuad& rlim);

// Letter frequencies of s(w) from those of w:
// M [fa fb]^T / (|s(a)| fa + |s(b)| fb). Requires fa + fb = 1, fa, fb >= 0.
std::pair<QuadraticNumber, QuadraticNumber> freq_transfer(const BinarySubstitution& s,
                                                          const QuadraticNumber& fa,
                                                          const QuadraticNumber& fb);

// The algebraic inverse; requires det(M) != 0 (throws SingularMatrix).
std::pair<QuadraticNumber, QuadraticNumber> freq_transfer_inverse(const BinarySubstitution& s,
                                                                  const QuadraticNumber& fa,
                                                                  const QuadraticNumber& fb);

// Shape classifications. Each is equivalent to a specific [tau 1]^T being a
// right eigenvector; the unit tests check both routes against each other.

// [[m+n, m], [m, n]]: exactly the matrices with [tau 1]^T (golden ratio) as
// right eigenvector.
std::optional<std::pair<std::int64_t, std::int64_t>> classify_golden(const SubstitutionMatrix& m);

// [[k m + n, m], [m, n]]: [tau_k 1]^T with tau_k the positive root of
// X^2 - kX - 1. k = 1 reduces to classify_golden.
std::optional<std::pair<std::int64_t, std::int64_t>> classify_tau_k(const SubstitutionMatrix& m,
                                                                    std::int64_t k);

// [tau_{j,m} 1]^T with tau_{j,m} the positive root of X^2 - jX - m.
// When j^2 + 4m is not a perfect square the matrix must look like
// [[t + s j, m s], [s, t]]; when j^2 + 4m = r^2 the eigenvector is rational
// and the match is the linear relation u(j+r)^2 + 2(v-s)(j+r) - 4t = 0 on
// M = [[s, t], [u, v]], reported with its residual.
struct TauJMVerdict {
    bool matches = false;
    bool square_case = false;                               // j^2 + 4m a perfect square
    std::optional<std::pair<std::int64_t, std::int64_t>> st;  // (s, t) in the irrational case
    std::int64_t residual = 0;                              // square case: must be 0 to match
};

TauJMVerdict classify_tau_jm(const SubstitutionMatrix& m, std::int64_t j, std::int64_t mm);

// Asymptotically linear relative position class of a primitive matrix:
// +k for [[km+n, m],[m, n]], -k for [[n, m],[m, km+n]] (k >= 1), 0 for
// equal row sums, nullopt otherwise. Throws NonPrimitive.
std::optional<std::int64_t> classify_linear_limit(const SubstitutionMatrix& m);

// Exact affine relation p_b(n) = A p_a(n) + B n + C satisfied by the fixed
// point of pisa(k, l, m): (A, B, C) = (m, k+l+1-m, m-l-1). The r forms
// follow by subtracting p_a (and substituting p_a in terms of p_b).
struct PisaClosedForm {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t c = 0;
    // r(n) = (m-1) p_a(n) + B n + C
    std::int64_t r_pa_coeff = 0;
    // r(n) = ((m-1)/m) p_b(n) + (B/m) n + C/m
    Rational r_pb_coeff;
    Rational r_pb_n_coeff;
    Rational r_pb_const;
};

PisaClosedForm pisa_closed_form(std::int64_t k, std::int64_t l, std::int64_t m);

// tau_{j,m} = (j + sqrt(j^2 + 4m)) / 2 as an exact quadratic number.
QuadraticNumber tau_jm(std::int64_t j, std::int64_t m);
inline QuadraticNumber tau_k(std::int64_t k) { return tau_jm(k, 1); }

}  // namespace relpos
