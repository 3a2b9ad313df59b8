#include "qbargmann/qcore.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qbargmann {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

bool vanishes(Complex factor, Complex scale) {
  return detail::is_negligible<double>(factor, scale);
}

}  // namespace

DeformationParameter::DeformationParameter(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("deformation parameter q must lie in (0, 1), got " +
                      std::to_string(q));
  }
}

void TruncationPolicy::validate() const {
  if (!(epsilon > 0.0)) throw DomainError("truncation epsilon must be > 0");
  if (max_terms < 1) throw DomainError("truncation max_terms must be >= 1");
}

Complex qpoch_finite(Complex a, DeformationParameter q, int n) {
  if (n < 0) throw DomainError("qpoch_finite: n must be nonnegative");
  return detail::qpoch_finite<double>(a, q.value(), n);
}

double qq_factorial(int n, DeformationParameter q) {
  if (n < 0) throw DomainError("qq_factorial: n must be nonnegative");
  double product = 1.0;
  double qk = q.value();
  for (int k = 1; k <= n; ++k) {
    product *= 1.0 - qk;
    qk *= q.value();
  }
  return product;
}

double reciprocal_qq_factorial(int n, DeformationParameter q) {
  if (n < 0) return 0.0;
  return 1.0 / qq_factorial(n, q);
}

Truncated<Complex> qpoch_infinite_report(Complex a, DeformationParameter q,
                                         const TruncationPolicy& policy) {
  policy.validate();
  return detail::qpoch_infinite<double>(a, q.value(), policy.epsilon,
                                        policy.max_terms);
}

Complex qpoch_infinite(Complex a, DeformationParameter q,
                       const TruncationPolicy& policy) {
  return qpoch_infinite_report(a, q, policy).value;
}

double qbinomial(int n, int k, DeformationParameter q) {
  if (n < 0 || k < 0 || k > n) {
    throw DomainError("qbinomial: need 0 <= k <= n");
  }
  // Multiplicative form keeps intermediate values O(1).
  const int kk = std::min(k, n - k);
  double value = 1.0;
  for (int i = 1; i <= kk; ++i) {
    value *= (1.0 - q.pow(n - kk + i)) / (1.0 - q.pow(i));
  }
  return value;
}

double qbracket_factorial(int n, DeformationParameter q) {
  if (n < 0) throw DomainError("qbracket_factorial: n must be nonnegative");
  double value = 1.0;
  double qk = q.value();
  for (int k = 1; k <= n; ++k) {
    value *= (1.0 - qk) / (1.0 - q.value());
    qk *= q.value();
  }
  return value;
}

Truncated<Complex> eq_exp_report(Complex u, DeformationParameter q,
                                 const TruncationPolicy& policy) {
  policy.validate();
  const double qv = q.value();
  const double x = (1.0 - qv) * std::abs(u);
  if (!(x < 1.0)) {
    throw DomainError("eq_exp: (1-q)|u| must be < 1 for convergence");
  }
  Complex sum = 1.0;
  Complex term = 1.0;
  double qk1 = qv;  // q^{k+1}
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    // Ratio |term_{j+1}/term_j| = x/(1 - q^{j+1}) decreases in j.
    const double ratio = x / (1.0 - qk1 * qv);
    const double tail = std::abs(term) * (x / (1.0 - qk1)) / (1.0 - ratio);
    if (ratio < 1.0 && tail <= policy.epsilon * std::max(std::abs(sum), kTiny)) {
      return {sum, {k + 1, tail / std::max(std::abs(sum), kTiny)}};
    }
    term *= u * (1.0 - qv) / (1.0 - qk1);
    sum += term;
    qk1 *= qv;
  }
  throw MaxTermsExceeded("eq_exp: term cap reached before tolerance");
}

Complex eq_exp(Complex u, DeformationParameter q,
               const TruncationPolicy& policy) {
  return eq_exp_report(u, q, policy).value;
}

Truncated<Complex> phi21_report(Complex a, Complex b, Complex c,
                                DeformationParameter q, Complex t,
                                const TruncationPolicy& policy) {
  policy.validate();
  const double qv = q.value();
  const double abs_t = std::abs(t);
  Complex sum = 1.0;
  Complex term = 1.0;
  double qk = 1.0;
  for (std::size_t k = 0; k < policy.max_terms; ++k) {
    const Complex fa = 1.0 - a * qk;
    const Complex fb = 1.0 - b * qk;
    const Complex fc = 1.0 - c * qk;
    const bool numerator_zero = vanishes(fa, a * qk) || vanishes(fb, b * qk);
    if (numerator_zero) {
      return {sum, {k + 1, 0.0}};
    }
    if (vanishes(fc, c * qk)) {
      throw PoleInDenominator("phi21: (c;q)_k vanishes before termination");
    }

    const double amax = std::max({std::abs(a), std::abs(b)}) * qk;
    const double cmax = std::abs(c) * qk;
    if (abs_t >= 1.0) {
      // Only factors with |a q^k| near 1 can still terminate the series.
      if (amax < 0.5) {
        throw DivergentSeries("phi21: |t| >= 1 and the series does not terminate");
      }
    } else if (cmax < 0.5) {
      // For j >= k the ratio is bounded by rho, which decreases in j.
      const double rho = abs_t * (1.0 + amax) * (1.0 + amax) /
                         ((1.0 - cmax) * (1.0 - qk * qv));
      if (rho < 1.0) {
        const double tail = std::abs(term) * rho / (1.0 - rho);
        const double scale = std::max(std::abs(sum), kTiny);
        if (tail <= policy.epsilon * scale) {
          return {sum, {k + 1, tail / scale}};
        }
      }
    }

    term *= fa * fb / (fc * (1.0 - qk * qv)) * t;
    sum += term;
    qk *= qv;
  }
  throw MaxTermsExceeded("phi21: term cap reached before tolerance");
}

Complex phi21(Complex a, Complex b, Complex c, DeformationParameter q,
              Complex t, const TruncationPolicy& policy) {
  return phi21_report(a, b, c, q, t, policy).value;
}

Complex phi21_terminating(int n, Complex b, Complex c, DeformationParameter q,
                          Complex t) {
  if (n < 0) throw DomainError("phi21_terminating: n must be nonnegative");
  const double qv = q.value();
  Complex sum = 1.0;
  Complex term = 1.0;
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    const Complex fb = 1.0 - b * qk;
    if (vanishes(fb, b * qk)) break;
    const Complex fc = 1.0 - c * qk;
    if (vanishes(fc, c * qk)) {
      throw PoleInDenominator("phi21_terminating: (c;q)_k vanishes");
    }
    const double fa = 1.0 - std::pow(qv, k - n);
    term *= fa * fb / (fc * (1.0 - qk * qv)) * t;
    sum += term;
    qk *= qv;
  }
  return sum;
}

Complex phi32_terminating(int m, Complex num2, Complex num3, Complex den1,
                          Complex den2, DeformationParameter q, Complex t) {
  if (m < 0) throw DomainError("phi32_terminating: m must be nonnegative");
  const double qv = q.value();
  Complex sum = 1.0;
  Complex term = 1.0;
  double qk = 1.0;
  for (int k = 0; k < m; ++k) {
    const Complex f2 = 1.0 - num2 * qk;
    const Complex f3 = 1.0 - num3 * qk;
    if (vanishes(f2, num2 * qk) || vanishes(f3, num3 * qk)) break;
    const Complex d1 = 1.0 - den1 * qk;
    const Complex d2 = 1.0 - den2 * qk;
    if (vanishes(d1, den1 * qk) || vanishes(d2, den2 * qk)) {
      throw PoleInDenominator("phi32_terminating: denominator factor vanishes");
    }
    const double f1 = 1.0 - std::pow(qv, k - m);
    term *= f1 * f2 * f3 / (d1 * d2 * (1.0 - qk * qv)) * t;
    sum += term;
    qk *= qv;
  }
  return sum;
}

namespace extended {

ComplexL qpoch_infinite(ComplexL a, Real q, Real epsilon) {
  if (!(q > 0 && q < 1)) throw DomainError("extended::qpoch_infinite: q in (0,1)");
  return detail::qpoch_infinite<Real>(a, q, epsilon, 100'000'000).value;
}

ComplexL qpoch_finite(ComplexL a, Real q, int n) {
  if (n < 0) throw DomainError("extended::qpoch_finite: n must be nonnegative");
  return detail::qpoch_finite<Real>(a, q, n);
}

}  // namespace extended

}  // namespace qbargmann
