#include "qbargmann/qpolys.hpp"

#include <cmath>
#include <string>

namespace qbargmann {

namespace {

template <class Fn>
auto map_points(std::span<const double> xs, Fn&& fn) {
  std::vector<decltype(fn(0.0))> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(fn(x));
  return out;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": degree must be nonnegative");
}

}  // namespace

double cq_hermite(int n, double x, DeformationParameter q) {
  require_nonnegative(n, "cq_hermite");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 2.0 * x;
  double qk = q.value();
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * x * curr - (1.0 - qk) * prev;
    prev = curr;
    curr = next;
    qk *= q.value();
  }
  return curr;
}

std::vector<double> cq_hermite(int n, std::span<const double> xs,
                               DeformationParameter q) {
  return map_points(xs, [&](double x) { return cq_hermite(n, x, q); });
}

double wall(int n, double x, double a, DeformationParameter q) {
  require_nonnegative(n, "wall");
  return phi21_terminating(n, 0.0, a * q.value(), q, q.value() * x).real();
}

std::vector<double> wall(int n, std::span<const double> xs, double a,
                         DeformationParameter q) {
  return map_points(xs, [&](double x) { return wall(n, x, a, q); });
}

Complex al_salam_chihara(int m, double x, Complex a, Complex b,
                         DeformationParameter q) {
  require_nonnegative(m, "al_salam_chihara");
  if (a == Complex(0.0)) throw DomainError("al_salam_chihara: a must be nonzero");
  if (std::abs(x) > 1.0) throw DomainError("al_salam_chihara: |x| must be <= 1");
  const double theta = std::acos(x);
  const Complex e = std::polar(1.0, theta);
  const Complex series = phi32_terminating(m, a * e, a * std::conj(e), a * b,
                                           0.0, q, q.value());
  return qpoch_finite(a * b, q, m) / std::pow(a, m) * series;
}

Complex al_salam_chihara_recurrence(int m, double x, Complex a, Complex b,
                                    DeformationParameter q) {
  require_nonnegative(m, "al_salam_chihara_recurrence");
  if (m == 0) return 1.0;
  const double qv = q.value();
  Complex prev = 1.0;
  Complex curr = 2.0 * x - a - b;
  double qn = qv;          // q^n
  double qn_minus1 = 1.0;  // q^{n-1}
  for (int n = 1; n < m; ++n) {
    const Complex next = (2.0 * x - (a + b) * qn) * curr -
                         (1.0 - qn) * (1.0 - a * b * qn_minus1) * prev;
    prev = curr;
    curr = next;
    qn_minus1 = qn;
    qn *= qv;
  }
  return curr;
}

std::vector<Complex> al_salam_chihara_recurrence(int m,
                                                 std::span<const double> xs,
                                                 Complex a, Complex b,
                                                 DeformationParameter q) {
  return map_points(xs, [&](double x) {
    return al_salam_chihara_recurrence(m, x, a, b, q);
  });
}

Complex qhermite2d(int r, int s, Complex z, Complex w, DeformationParameter q) {
  require_nonnegative(r, "qhermite2d");
  require_nonnegative(s, "qhermite2d");
  const int kmax = std::min(r, s);
  Complex sum = 0.0;
  for (int k = 0; k <= kmax; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double coeff = qbinomial(r, k, q) * qbinomial(s, k, q) * sign *
                         q.pow(k * (k - 1) / 2) * qq_factorial(k, q);
    sum += coeff * std::pow(z, r - k) * std::pow(w, s - k);
  }
  return sum;
}

Complex qhermite2d_wall_form(int r, int s, Complex z, DeformationParameter q) {
  require_nonnegative(r, "qhermite2d_wall_form");
  require_nonnegative(s, "qhermite2d_wall_form");
  const PolyIndexPair idx{r, s};
  const int lo = idx.min();
  const int gap = idx.gap();
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  const double radial = std::norm(z);
  const double prefactor = sign * qq_factorial(idx.max(), q) /
                           qq_factorial(gap, q) * q.pow(lo * (lo - 1) / 2) *
                           std::pow(std::abs(z), gap);
  const double phase_arg = (z == Complex(0.0)) ? 0.0 : std::arg(z);
  const Complex phase = std::polar(1.0, (r - s) * phase_arg);
  return prefactor * phase * wall(lo, radial, q.pow(gap), q);
}

Complex complex_hermite_classical(int r, int s, Complex z, Complex w) {
  require_nonnegative(r, "complex_hermite_classical");
  require_nonnegative(s, "complex_hermite_classical");
  const int kmax = std::min(r, s);
  Complex sum = 0.0;
  double k_factorial = 1.0;
  double binom_r = 1.0;
  double binom_s = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      k_factorial *= k;
      binom_r *= static_cast<double>(r - k + 1) / k;
      binom_s *= static_cast<double>(s - k + 1) / k;
    }
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    sum += sign * k_factorial * binom_r * binom_s * std::pow(z, r - k) *
           std::pow(w, s - k);
  }
  return sum;
}

double hermite_classical(int m, double x) {
  return hermite_classical(m, Complex(x, 0.0)).real();
}

Complex hermite_classical(int m, Complex x) {
  require_nonnegative(m, "hermite_classical");
  if (m == 0) return 1.0;
  Complex prev = 1.0;
  Complex curr = 2.0 * x;
  for (int n = 1; n < m; ++n) {
    const Complex next = 2.0 * x * curr - 2.0 * n * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> hermite_classical(int m, std::span<const double> xs) {
  return map_points(xs, [&](double x) { return hermite_classical(m, x); });
}

double laguerre_classical(int n, double alpha, double x) {
  require_nonnegative(n, "laguerre_classical");
  if (n == 0) return 1.0;
  double prev = 1.0;
  double curr = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next =
        ((2.0 * k + 1.0 + alpha - x) * curr - (k + alpha) * prev) / (k + 1.0);
    prev = curr;
    curr = next;
  }
  return curr;
}

std::vector<double> laguerre_classical(int n, double alpha,
                                       std::span<const double> xs) {
  return map_points(xs,
                    [&](double x) { return laguerre_classical(n, alpha, x); });
}

Complex cauchy_poly(int n, Complex a, Complex b, DeformationParameter q) {
  require_nonnegative(n, "cauchy_poly");
  Complex product = 1.0;
  double qk = 1.0;
  for (int k = 0; k < n; ++k) {
    product *= a - b * qk;
    qk *= q.value();
  }
  return product;
}

double wall_reflection_check(int n, int N, double x, DeformationParameter q) {
  require_nonnegative(n, "wall_reflection_check");
  const auto where = [&](const std::string& what) {
    return "wall reflection at n=" + std::to_string(n) +
           ", N=" + std::to_string(N) + ": " + what;
  };
  // LHS denominators (q^{1-N};q)_k, k <= n, vanish iff 1 <= N <= n; the
  // explicit RHS denominator (q^{1-N};q)_n vanishes under the same condition.
  if (N >= 1 && N <= n) {
    throw SingularParameters(where("(q^{1-N};q)_k vanishes on both sides"));
  }
  if (n - N < 0) {
    throw SingularParameters(where("P_{n-N} has negative degree"));
  }
  // Remaining case n >= N, N <= 0. P_{n-N}(x;q^N|q) has denominators
  // (q^{N+1};q)_k, k <= n-N, which vanish iff N <= -1.
  if (N <= -1) {
    throw SingularParameters(where(
        "(q^{N+1};q)_{n-N} = 0 multiplies a pole of P_{n-N}(x;q^N|q)"));
  }
  const double lhs = wall(n, x, q.pow(-N), q);
  const double sign = (N % 2 == 0) ? 1.0 : -1.0;
  const double rhs =
      std::pow(x, N) * sign * std::pow(q.value(), N * (N + 1 - 2 * n) / 2.0) *
      qpoch_finite(q.pow(N + 1), q, n - N).real() /
      qpoch_finite(q.pow(1 - N), q, n).real() * wall(n - N, x, q.pow(N), q);
  return std::abs(lhs - rhs);
}

}  // namespace qbargmann
