#include "qbargmann/transform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qbargmann/qpolys.hpp"

namespace qbargmann {

namespace {

const detail::GaussRule& panel_rule() {
  static const detail::GaussRule rule = detail::gauss_legendre(20);
  return rule;
}

Complex integrate_real_line(const std::function<Complex(double)>& g,
                            const RealLineQuadrature& quad) {
  const detail::GaussRule& rule = panel_rule();
  const auto composite = [&](int panels, double& abs_sum) {
    const double width = 2.0 * quad.half_width / panels;
    Complex sum = 0.0;
    abs_sum = 0.0;
    for (int p = 0; p < panels; ++p) {
      const double mid = -quad.half_width + (p + 0.5) * width;
      for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double xi = mid + 0.5 * width * rule.nodes[i];
        const Complex v = g(xi) * (0.5 * width * rule.weights[i]);
        sum += v;
        abs_sum += std::abs(v);
      }
    }
    return sum;
  };
  int panels = quad.initial_panels;
  double abs_sum = 0.0;
  Complex previous = composite(panels, abs_sum);
  for (int step = 0; step < quad.max_refinements; ++step) {
    panels *= 2;
    const Complex current = composite(panels, abs_sum);
    if (std::abs(current - previous) <= quad.target_tol * abs_sum) return current;
    previous = current;
  }
  throw NoConvergence("real-line quadrature did not converge");
}

void require_admissible(DeformationParameter q, int m, Complex z) {
  if (!CoherentStateLabel::admissible(q, m, z)) {
    throw DomainError("transform: z outside C_{q,m}");
  }
}

// Sampled signals are only piecewise smooth in theta, with kinks at the samples.
QuadratureResult integrate_signal(const SampledSignal& f, DeformationParameter q,
                                  const RealFunction& integrand,
                                  const QuadratureSpec& quad) {
  if (f.is_sampled()) return quad_Iq(integrand, q, f.theta(), quad);
  return quad_Iq(integrand, q, quad);
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

SampledSignal SampledSignal::from_function(RealFunction f) {
  if (!f) throw DomainError("SampledSignal: empty function");
  SampledSignal s;
  s.function_ = std::move(f);
  return s;
}

SampledSignal SampledSignal::from_theta_samples(std::vector<double> theta,
                                                std::vector<Complex> values) {
  if (theta.empty() || theta.size() != values.size()) {
    throw DomainError("SampledSignal: theta and values must be non-empty and equally long");
  }
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (!(theta[i] >= 0.0 && theta[i] <= std::numbers::pi)) {
      throw DomainError("SampledSignal: theta samples must lie in [0, pi]");
    }
    if (i > 0 && !(theta[i] > theta[i - 1])) {
      throw DomainError("SampledSignal: theta samples must be strictly increasing");
    }
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw DomainError("SampledSignal: sample values must be finite");
    }
  }
  SampledSignal s;
  s.theta_ = std::move(theta);
  s.values_ = std::move(values);
  return s;
}

Complex SampledSignal::operator()(double xi, DeformationParameter q) const {
  if (function_) return function_(xi);
  const double x = std::clamp(xi * std::sqrt((1.0 - q.value()) / 2.0), -1.0, 1.0);
  const double theta = std::acos(x);
  if (theta <= theta_.front()) return values_.front();
  if (theta >= theta_.back()) return values_.back();
  const auto upper = std::upper_bound(theta_.begin(), theta_.end(), theta);
  const std::size_t hi = static_cast<std::size_t>(upper - theta_.begin());
  const std::size_t lo = hi - 1;
  const double t = (theta - theta_[lo]) / (theta_[hi] - theta_[lo]);
  return (1.0 - t) * values_[lo] + t * values_[hi];
}

double CoefficientVector::squared_norm() const {
  double sum = 0.0;
  for (const Complex& v : c) sum += std::norm(v);
  return sum;
}

SampledSignal phi_combination(const CoefficientVector& coeffs,
                              DeformationParameter q,
                              const TruncationPolicy& policy) {
  return SampledSignal::from_function([coeffs, q, policy](double xi) {
    if (coeffs.c.empty()) return Complex(0.0);
    const std::vector<double> phis = phi_q_all(coeffs.order(), xi, q, policy);
    Complex sum = 0.0;
    for (std::size_t j = 0; j < phis.size(); ++j) sum += coeffs.c[j] * phis[j];
    return sum;
  });
}

TransformValue bargmann_q(const SampledSignal& f, int m, DeformationParameter q,
                          Complex z, const QuadratureSpec& quad,
                          const TruncationPolicy& policy) {
  require_admissible(q, m, z);
  const QuadratureResult r = integrate_signal(
      f, q,
      [&](double xi) {
        return kernel_closed_bracket(xi, m, z, q, policy) * f(xi, q);
      },
      quad);
  return {r.value, r.nodes, r.estimated_error};
}

Complex product_kernel_m0(double xi, Complex z, DeformationParameter q,
                          const TruncationPolicy& policy) {
  const double qv = q.value();
  const double coeff =
      (std::sqrt(2.0) * std::abs(z) * std::abs(xi) + std::norm(z)) * (1.0 - qv);
  const auto product = detail::geometric_product<double>(
      [&](std::size_t, double qk) {
        return 1.0 - std::sqrt(2.0) * z * xi * qk * (1.0 - qv) +
               z * z * qk * qk * (1.0 - qv);
      },
      coeff, qv, policy.epsilon, policy.max_terms);
  if (product.value == Complex(0.0)) {
    throw PoleInDenominator("product_kernel_m0: vanishing factor");
  }
  return 1.0 / product.value;
}

TransformValue bargmann_q_m0(const SampledSignal& f, DeformationParameter q,
                             Complex z, const QuadratureSpec& quad,
                             const TruncationPolicy& policy) {
  require_admissible(q, 0, z);
  const QuadratureResult r = integrate_signal(
      f, q,
      [&](double xi) {
        const double root =
            std::sqrt(std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q, policy));
        return root * product_kernel_m0(xi, z, q, policy) * f(xi, q);
      },
      quad);
  return {r.value, r.nodes, r.estimated_error};
}

Complex classical_bargmann(const RealFunction& f, Complex z,
                           const RealLineQuadrature& quad) {
  const double prefactor = std::pow(std::numbers::pi, -0.25);
  return prefactor * integrate_real_line(
                         [&](double xi) {
                           return std::exp(-0.5 * z * z - 0.5 * xi * xi +
                                           std::sqrt(2.0) * xi * z) *
                                  f(xi);
                         },
                         quad);
}

Complex classical_bm(const RealFunction& f, int m, Complex z,
                     const RealLineQuadrature& quad) {
  if (m < 0) throw DomainError("classical_bm: m must be nonnegative");
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  const double prefactor =
      sign / std::sqrt(std::pow(2.0, m) * factorial(m) * std::sqrt(std::numbers::pi));
  const Complex shift = (z + std::conj(z)) / std::sqrt(2.0);
  return prefactor * integrate_real_line(
                         [&](double xi) {
                           return std::exp(-0.5 * z * z - 0.5 * xi * xi +
                                           std::sqrt(2.0) * xi * z) *
                                  hermite_classical(m, Complex(xi) - shift) * f(xi);
                         },
                         quad);
}

double hermite_function(int j, double xi) {
  // Normalized recurrence avoids the growth of H_j and 2^j j!.
  const double lead = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * xi * xi);
  if (j == 0) return lead;
  double prev = lead;
  double curr = std::sqrt(2.0) * xi * lead;
  for (int k = 1; k < j; ++k) {
    const double next =
        std::sqrt(2.0 / (k + 1.0)) * xi * curr - std::sqrt(k / (k + 1.0)) * prev;
    prev = curr;
    curr = next;
  }
  return curr;
}

Complex polyanalytic_basis_classical(int j, int m, Complex z) {
  if (j < 0 || m < 0) throw DomainError("polyanalytic_basis_classical: indices >= 0");
  const int lo = std::min(m, j);
  const int gap = std::abs(m - j);
  const double sign = (lo % 2 == 0) ? 1.0 : -1.0;
  const double theta = (z == Complex(0.0)) ? 0.0 : std::arg(z);
  const double magnitude = sign * factorial(lo) /
                           std::sqrt(factorial(m) * factorial(j)) *
                           std::pow(std::abs(z), gap);
  return magnitude * std::polar(1.0, -(m - j) * theta) *
         laguerre_classical(lo, gap, std::norm(z));
}

CoefficientVector analyze(const SampledSignal& f, DeformationParameter q, int J,
                          const QuadratureSpec& quad,
                          const TruncationPolicy& policy) {
  CoefficientVector out;
  if (J < 0) return out;
  out.c.reserve(static_cast<std::size_t>(J) + 1);
  for (int j = 0; j <= J; ++j) {
    const QuadratureResult r = integrate_signal(
        f, q, [&](double xi) { return phi_q(j, xi, q, policy) * f(xi, q); }, quad);
    out.c.push_back(r.value);
  }
  return out;
}

double norm_A2(const PlaneFunction& F, DeformationParameter q, int j_max,
               int angular_nodes, const TruncationPolicy& policy,
               int first_circle) {
  const MuIntegral r = mu_q_integral(
      [&](Complex z) { return Complex(std::norm(F(z)), 0.0); }, q, j_max,
      angular_nodes, policy, first_circle);
  return std::sqrt(std::max(0.0, r.value.real()));
}

VerificationReport isometry_check(const CoefficientVector& coeffs, int m,
                                  DeformationParameter q,
                                  const IsometryOptions& options,
                                  const TruncationPolicy& policy) {
  if (m < 0) throw DomainError("isometry_check: m must be nonnegative");
  const CircleMeasure measure(q, policy);
  const int j_max =
      options.j_max >= 0 ? options.j_max : measure.circles_for_tail(1e-16);
  const int J = std::max(coeffs.order(), 0);
  const std::size_t dim = static_cast<std::size_t>(J) + 1;

  double image_norm2 = 0.0;
  std::vector<Complex> gram_full(dim * dim, 0.0);
  std::vector<Complex> gram_inside(dim * dim, 0.0);
  std::vector<Complex> h(dim);
  for (int circle = 0; circle <= j_max; ++circle) {
    const double rho = measure.radius(circle);
    const double w = measure.weight(circle) / options.angular_nodes;
    const bool inside = circle > m;  // (1-q) rho_j^2 = q^j < q^m
    for (int a = 0; a < options.angular_nodes; ++a) {
      const Complex z =
          std::polar(rho, 2.0 * std::numbers::pi * a / options.angular_nodes);
      Complex image = 0.0;
      for (std::size_t j = 0; j < dim; ++j) {
        h[j] = coeff_h(static_cast<int>(j), m, z, q);
        if (j < coeffs.c.size()) image += coeffs.c[j] * h[j];
      }
      image_norm2 += w * std::norm(image);
      for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t k = 0; k < dim; ++k) {
          const Complex g = w * std::conj(h[j]) * h[k];
          gram_full[j * dim + k] += g;
          if (inside) gram_inside[j * dim + k] += g;
        }
      }
    }
  }

  const auto max_deviation = [&](const std::vector<Complex>& g) {
    double worst = 0.0;
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < dim; ++k) {
        const Complex target = (j == k) ? 1.0 : 0.0;
        worst = std::max(worst, std::abs(g[j * dim + k] - target));
      }
    }
    return worst;
  };

  const double f_norm = std::sqrt(coeffs.squared_norm());
  const double image_norm = std::sqrt(image_norm2);
  VerificationReport report;
  report.check_id = "isometry";
  report.mandatory = (m == 0);
  report.set("q", q.value())
      .set("m", static_cast<long long>(m))
      .set("J", static_cast<long long>(coeffs.order()))
      .set("j_max", static_cast<long long>(j_max))
      .set("angular_nodes", static_cast<long long>(options.angular_nodes))
      .set("weight_tail", measure.tail_weight(j_max))
      .set("norm_f", f_norm)
      .set("norm_Bf", image_norm)
      .set("gram_full_max_dev", max_deviation(gram_full))
      .set("gram_inside_max_dev", max_deviation(gram_inside));
  if (f_norm > 0.0) report.set("ratio", image_norm / f_norm);
  report.max_abs_error = std::abs(image_norm - f_norm);
  report.tolerance = options.tolerance;
  report.notes =
      "image B f = sum_j c_j h_j^{m,q} under dmu_q with normalized circle "
      "measure; gram_inside restricts dmu_q to circles inside C_{q,m}";
  report.settle();
  return report;
}

}  // namespace qbargmann
