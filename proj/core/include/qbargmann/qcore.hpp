#pragma once

// q-arithmetic primitives: Pochhammer symbols, Gaussian binomials, the
// q-exponential and basic hypergeometric series.
//
// Every infinite product or series is truncated with an explicit tail bound
// governed by a TruncationPolicy. All functions are pure.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <string>

#include "qbargmann/error.hpp"

namespace qbargmann {

using Complex = std::complex<double>;

/// The base q of every q-object. Strictly inside (0, 1).
class DeformationParameter {
 public:
  explicit DeformationParameter(double q);

  double value() const noexcept { return q_; }
  double pow(int k) const { return std::pow(q_, k); }

 private:
  double q_;
};

/// Relative tolerance and term cap for infinite products and series.
struct TruncationPolicy {
  double epsilon = 1e-12;
  std::size_t max_terms = 1'000'000;

  void validate() const;
};

/// What a truncation actually achieved.
struct TruncationReport {
  std::size_t terms = 0;
  double tail_bound = 0.0;
};

template <class T>
struct Truncated {
  T value;
  TruncationReport report;
};

namespace detail {

template <class T>
bool is_negligible(std::complex<T> factor, std::complex<T> scale) {
  const T tiny = 8 * std::numeric_limits<T>::epsilon();
  return std::abs(factor) <= tiny * std::max(T(1), std::abs(scale));
}

// Product of factor(k), k = 0, 1, ..., where |factor(k) - 1| <= coeff * q^k.
// Once coeff * q^k <= 1/2 the log of the remaining product is bounded by
// 2 coeff q^k / (1 - q); truncation stops when that bound drops below eps.
template <class T, class Factor>
Truncated<std::complex<T>> geometric_product(Factor&& factor, T coeff, T q,
                                             T eps, std::size_t max_terms) {
  std::complex<T> product(1);
  T qk = 1;
  for (std::size_t k = 0; k < max_terms; ++k) {
    const T remaining = coeff * qk;
    if (remaining <= T(0.5)) {
      const T log_bound = 2 * remaining / (1 - q);
      if (log_bound <= eps) {
        return {product, {k, static_cast<double>(std::expm1(log_bound))}};
      }
    }
    const std::complex<T> f = factor(k, qk);
    if (f == std::complex<T>(0)) {
      return {std::complex<T>(0), {k + 1, 0.0}};
    }
    product *= f;
    qk *= q;
  }
  throw MaxTermsExceeded("infinite product: term cap reached before tolerance");
}

template <class T>
Truncated<std::complex<T>> qpoch_infinite(std::complex<T> a, T q, T eps,
                                          std::size_t max_terms) {
  return geometric_product<T>(
      [a](std::size_t, T qk) { return std::complex<T>(1) - a * qk; },
      std::abs(a), q, eps, max_terms);
}

template <class T>
std::complex<T> qpoch_finite(std::complex<T> a, T q, int n) {
  std::complex<T> product(1);
  T qk = 1;
  for (int k = 0; k < n; ++k) {
    product *= std::complex<T>(1) - a * qk;
    qk *= q;
  }
  return product;
}

}  // namespace detail

/// (a;q)_n. Empty product (= 1) for n = 0; DomainError for n < 0.
Complex qpoch_finite(Complex a, DeformationParameter q, int n);

/// (q;q)_n as a real number.
double qq_factorial(int n, DeformationParameter q);

/// 1/(q;q)_n, defined as 0 for negative n.
double reciprocal_qq_factorial(int n, DeformationParameter q);

/// (a;q)_inf truncated to relative error below policy.epsilon.
Complex qpoch_infinite(Complex a, DeformationParameter q,
                       const TruncationPolicy& policy = {});
Truncated<Complex> qpoch_infinite_report(Complex a, DeformationParameter q,
                                         const TruncationPolicy& policy = {});

/// Gaussian binomial [n k]_q. DomainError unless 0 <= k <= n.
double qbinomial(int n, int k, DeformationParameter q);

/// [n]_q! = prod_{k=1}^{n} (1 - q^k)/(1 - q) = (q;q)_n / (1 - q)^n.
double qbracket_factorial(int n, DeformationParameter q);

/// e_q(u) = sum_k u^k / [k]_q!, convergent for (1 - q)|u| < 1.
Complex eq_exp(Complex u, DeformationParameter q,
               const TruncationPolicy& policy = {});
Truncated<Complex> eq_exp_report(Complex u, DeformationParameter q,
                                 const TruncationPolicy& policy = {});

/// 2phi1(a, b; c; q, t) = sum_k (a;q)_k (b;q)_k / ((c;q)_k (q;q)_k) t^k.
///
/// A numerator factor that vanishes up to rounding terminates the series, so
/// a = q^{-n} yields exactly n + 1 terms. Without termination |t| < 1 is
/// required, otherwise DivergentSeries. PoleInDenominator when (c;q)_k = 0 is
/// reached with a nonzero numerator.
Complex phi21(Complex a, Complex b, Complex c, DeformationParameter q,
              Complex t, const TruncationPolicy& policy = {});
Truncated<Complex> phi21_report(Complex a, Complex b, Complex c,
                                DeformationParameter q, Complex t,
                                const TruncationPolicy& policy = {});

/// 2phi1(q^{-n}, b; c; q, t) with the terminating parameter given exactly.
Complex phi21_terminating(int n, Complex b, Complex c, DeformationParameter q,
                          Complex t);

/// 3phi2(q^{-m}, num2, num3; den1, den2; q, t): m + 1 terms.
Complex phi32_terminating(int m, Complex num2, Complex num3, Complex den1,
                          Complex den2, DeformationParameter q, Complex t);

/// Long-double evaluations used as higher-precision references by the
/// verification suite.
namespace extended {

using Real = long double;
using ComplexL = std::complex<long double>;

ComplexL qpoch_infinite(ComplexL a, Real q, Real epsilon = 1e-17L);
ComplexL qpoch_finite(ComplexL a, Real q, int n);

}  // namespace extended

}  // namespace qbargmann
