#include "qbargmann/coherent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "qbargmann/qpolys.hpp"

namespace qbargmann {

namespace {

constexpr double kTiny = std::numeric_limits<double>::min();

double log_qq_factorial(int n, DeformationParameter q) {
  double acc = 0.0;
  double qk = q.value();
  for (int k = 1; k <= n; ++k) {
    acc += std::log1p(-qk);
    qk *= q.value();
  }
  return acc;
}

// Radius of convergence indicator of sum_j h_j^{m,q}(z) ...: the coefficient
// ratio |h_{j+1}/h_j| tends to |z| sqrt((1-q)/q^m).
double asymptotic_ratio(int m, Complex z, DeformationParameter q) {
  return std::abs(z) * std::sqrt((1.0 - q.value()) / q.pow(m));
}

// Sums contribution(j) over j with truncation driven by the decay of the
// coefficient magnitudes |h_j|. partner_bound(j) bounds the factor that
// multiplies h_j for indices beyond j (empirically).
template <class Contribution, class Magnitude, class PartnerBound>
KernelValue coefficient_series(int m, double rho, int j_max, double eps,
                               Contribution&& contribution,
                               Magnitude&& magnitude,
                               PartnerBound&& partner_bound) {
  Complex sum = 0.0;
  double prev_mag = 0.0;
  double prev_ratio = 0.0;
  for (int j = 0; j <= j_max; ++j) {
    sum += contribution(j);
    const double mag = magnitude(j);
    const double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
    if (j > m + 1) {
      const double r = std::max({rho, ratio, prev_ratio});
      if (mag == 0.0 && prev_mag == 0.0) {
        return {sum, {static_cast<std::size_t>(j + 1), 0.0}};
      }
      if (r < 1.0) {
        const double tail = mag * r / (1.0 - r) * partner_bound(j);
        const double scale = std::max(std::abs(sum), kTiny);
        if (tail <= eps * scale) {
          return {sum, {static_cast<std::size_t>(j + 1), tail / scale}};
        }
      }
    }
    prev_ratio = ratio;
    prev_mag = mag;
  }
  throw NoConvergence("coefficient series: tail above tolerance at j_max = " +
                      std::to_string(j_max));
}

void require_admissible(DeformationParameter q, int m, Complex z,
                        const char* what) {
  if (!CoherentStateLabel::admissible(q, m, z)) {
    throw DomainError(std::string(what) + ": z outside C_{q,m}");
  }
}

}  // namespace

CoherentStateLabel::CoherentStateLabel(DeformationParameter q, int m, Complex z)
    : q_(q), m_(m), z_(z) {
  if (m < 0) throw DomainError("coherent state level m must be nonnegative");
  if (!admissible(q, m, z)) {
    throw DomainError("coherent state label outside C_{q,m}: (1-q)|z|^2 >= q^m");
  }
}

bool CoherentStateLabel::admissible(DeformationParameter q, int m, Complex z) {
  return m >= 0 && (1.0 - q.value()) * std::norm(z) < q.pow(m);
}

Complex coeff_h(int j, int m, Complex z, DeformationParameter q) {
  if (j < 0 || m < 0) throw DomainError("coeff_h: indices must be nonnegative");
  const int lo = std::min(m, j);
  const int hi = std::max(m, j);
  const int gap = hi - lo;
  const double abs_z = std::abs(z);
  if (gap > 0 && abs_z == 0.0) return 0.0;

  const double log_q = std::log(q.value());
  // Magnitude assembled in logs: q^{mj} and (q;q)_j underflow separately
  // long before the coefficient itself does.
  double log_mag = log_qq_factorial(hi, q) + 0.5 * lo * (lo - 1) * log_q +
                   0.5 * gap * std::log1p(-q.value()) -
                   log_qq_factorial(gap, q) -
                   0.5 * (m * static_cast<double>(j) * log_q +
                          log_qq_factorial(m, q) + log_qq_factorial(j, q));
  if (gap > 0) log_mag += gap * std::log(abs_z);

  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  const double theta = abs_z == 0.0 ? 0.0 : std::arg(z);
  const Complex phase = std::polar(1.0, -(m - j) * theta);
  const double radial = (1.0 - q.value()) * abs_z * abs_z;
  return sign * std::exp(log_mag) * phase * wall(lo, radial, q.pow(gap), q);
}

double normalization(int m, double x, DeformationParameter q,
                     const TruncationPolicy& policy) {
  if (m < 0) throw DomainError("normalization: m must be nonnegative");
  if (x < 0.0) throw DomainError("normalization: x = |z|^2 must be >= 0");
  const double scaled = (1.0 - q.value()) * x;
  if (!(scaled < q.pow(m))) {
    throw DomainError("normalization: (1-q)x must be < q^m");
  }
  const double numerator = qpoch_finite(q.pow(1 - m) * scaled, q, m).real();
  const double denominator = qpoch_infinite(q.pow(-m) * scaled, q, policy).real();
  return q.pow(-m) * numerator / denominator;
}

KernelValue kernel_series(double xi, int m, Complex z, DeformationParameter q,
                          int j_max, const TruncationPolicy& policy) {
  if (m < 0) throw DomainError("kernel_series: m must be nonnegative");
  const std::vector<double> phis = phi_q_all(j_max, xi, q, policy);
  std::vector<double> running_max(phis.size());
  double best = 0.0;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    best = std::max(best, std::abs(phis[i]));
    running_max[i] = best;
  }
  std::vector<Complex> coeffs;
  coeffs.reserve(phis.size());
  const auto coefficient = [&](int j) -> Complex {
    if (static_cast<std::size_t>(j) >= coeffs.size()) {
      coeffs.push_back(coeff_h(j, m, z, q));
    }
    return coeffs[static_cast<std::size_t>(j)];
  };
  return coefficient_series(
      m, asymptotic_ratio(m, z, q), j_max, policy.epsilon,
      [&](int j) { return coefficient(j) * phis[static_cast<std::size_t>(j)]; },
      [&](int j) { return std::abs(coefficient(j)); },
      // |phi_j| grows at most polynomially; allow a factor two over the
      // largest value seen.
      [&](int j) { return 2.0 * running_max[static_cast<std::size_t>(j)]; });
}

KernelValue wavefunction_series(double xi, const CoherentStateLabel& label,
                                int j_max, const TruncationPolicy& policy) {
  // sum_j conj(h_j(z)) phi_j = conj(sum_j h_j(z) phi_j) since phi_j is real.
  const KernelValue raw =
      kernel_series(xi, label.m(), label.z(), label.q(), j_max, policy);
  const double n =
      normalization(label.m(), std::norm(label.z()), label.q(), policy);
  return {std::conj(raw.value) / std::sqrt(n), raw.report};
}

Complex kernel_closed_bracket(double xi, int m, Complex z,
                              DeformationParameter q,
                              const TruncationPolicy& policy) {
  if (m < 0) throw DomainError("kernel_closed_bracket: m must be nonnegative");
  if (!IntervalIq(q).contains(xi)) {
    throw DomainError("kernel_closed_bracket: xi outside I_q");
  }
  const double qv = q.value();
  const double x = std::sqrt((1.0 - qv) / 2.0) * xi;
  const double theta = std::acos(x);
  const Complex e = std::polar(1.0, theta);
  const double c = std::sqrt((1.0 - qv) / q.pow(m));

  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double root = std::sqrt(std::sqrt(2.0) *
                                omega(std::sqrt(2.0) * xi, q, policy) /
                                (q.pow(m) * qq_factorial(m, q)));
  const Complex product = qpoch_infinite(c * z * e, q, policy) *
                          qpoch_infinite(c * z * std::conj(e), q, policy);
  const Complex asc =
      al_salam_chihara_recurrence(m, x, c * z, c * qv * std::conj(z), q);
  return sign * root * asc / product;
}

Complex wavefunction_closed(double xi, const CoherentStateLabel& label,
                            const TruncationPolicy& policy) {
  const DeformationParameter q = label.q();
  const Complex z = label.z();
  if (!IntervalIq(q).contains(xi)) {
    throw DomainError("wavefunction_closed: xi outside I_q");
  }
  if (label.m() == 0) {
    const double qv = q.value();
    const Complex zb = std::conj(z);
    const double coeff =
        (std::sqrt(2.0) * std::abs(z) * std::abs(xi) + std::norm(z)) * (1.0 - qv);
    const auto product = detail::geometric_product<double>(
        [&](std::size_t, double qk) {
          return 1.0 - std::sqrt(2.0) * zb * xi * qk * (1.0 - qv) +
                 zb * zb * qk * qk * (1.0 - qv);
        },
        coeff, qv, policy.epsilon, policy.max_terms);
    const double weight = std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q, policy);
    const double eq = eq_exp(std::norm(z), q, policy).real();
    return std::sqrt(weight / eq) / product.value;
  }
  const double n = normalization(label.m(), std::norm(z), q, policy);
  return std::conj(kernel_closed_bracket(xi, label.m(), z, q, policy)) /
         std::sqrt(n);
}

KernelValue overlap_kernel_series(Complex z, Complex w, int m,
                                  DeformationParameter q,
                                  const TruncationPolicy& policy) {
  require_admissible(q, m, z, "overlap_kernel_series");
  require_admissible(q, m, w, "overlap_kernel_series");
  std::vector<Complex> hz;
  std::vector<Complex> hw;
  const auto at = [&](std::vector<Complex>& cache, Complex arg, int j) {
    while (cache.size() <= static_cast<std::size_t>(j)) {
      cache.push_back(coeff_h(static_cast<int>(cache.size()), m, arg, q));
    }
    return cache[static_cast<std::size_t>(j)];
  };
  return coefficient_series(
      m, asymptotic_ratio(m, z, q) * asymptotic_ratio(m, w, q), kMaxSeriesTerms,
      policy.epsilon,
      [&](int j) { return std::conj(at(hz, z, j)) * at(hw, w, j); },
      [&](int j) { return std::abs(at(hz, z, j)) * std::abs(at(hw, w, j)); },
      [](int) { return 1.0; });
}

KernelValue overlap_kernel_closed(Complex z, Complex w, int m,
                                  DeformationParameter q,
                                  const TruncationPolicy& policy) {
  require_admissible(q, m, z, "overlap_kernel_closed");
  require_admissible(q, m, w, "overlap_kernel_closed");
  if (z == Complex(0.0) || w == Complex(0.0)) {
    throw RatioUndefined("overlap_kernel_closed: conj(w)/conj(z) needs z, w != 0");
  }
  const double qv = q.value();
  const double xzz = (1.0 - qv) * std::norm(z);
  const Complex xwz = (1.0 - qv) * w * std::conj(z);
  const Complex ratio = std::conj(w) / std::conj(z);

  // (q^{1-m} X;q)_inf / (q X;q)_inf = (q^{1-m} X;q)_m exactly.
  const Complex head = qpoch_finite(q.pow(1 - m) * xzz, q, m);
  const Truncated<Complex> tail = qpoch_infinite_report(q.pow(-m) * xwz, q, policy);
  const Complex prefactor = q.pow(-m) * head / tail.value *
                            qpoch_finite(ratio * qv, q, m) / qq_factorial(m, q);
  const Complex series =
      phi32_terminating(m, q.pow(-m) * xwz, ratio, q.pow(1 - m) * xzz,
                        q.pow(-m) / ratio, q, qv);
  return {prefactor * series,
          {static_cast<std::size_t>(m + 1), tail.report.tail_bound}};
}

OverlapKernel overlap_kernel(Complex z, Complex w, int m, DeformationParameter q,
                             const TruncationPolicy& policy) {
  OverlapKernel out{overlap_kernel_series(z, w, m, q, policy), std::nullopt, {}};
  try {
    out.closed_form = overlap_kernel_closed(z, w, m, q, policy);
  } catch (const RatioUndefined& e) {
    out.closed_form_note = e.what();
  } catch (const PoleInDenominator& e) {
    out.closed_form_note = e.what();
  }
  return out;
}

}  // namespace qbargmann
