#include "qbargmann/measure.hpp"

#include <cmath>
#include <numbers>

#include "qbargmann/qpolys.hpp"

namespace qbargmann {

IntervalIq::IntervalIq(DeformationParameter q)
    : half_width_(std::sqrt(2.0 / (1.0 - q.value()))) {}

void QuadratureSpec::validate() const {
  if (node_count < 1) throw DomainError("quadrature node_count must be >= 1");
  if (max_refinements < 0) throw DomainError("max_refinements must be >= 0");
  if (!(target_tol > 0.0)) throw DomainError("quadrature target_tol must be > 0");
}

double omega(double u, DeformationParameter q, const TruncationPolicy& policy) {
  policy.validate();
  const double qv = q.value();
  const double inner = 1.0 - (1.0 - qv) * u * u / 4.0;
  if (!(inner > 0.0)) {
    throw DomainError("omega: |u| must be < 2/sqrt(1-q)");
  }
  const double linear = 2.0 - u * u * (1.0 - qv);
  // (q;q)_inf and the product under/overflow separately as q -> 1, so their
  // combined factors (1 - q^{k+1})(1 + linear q^k + q^{2k}) are summed in logs.
  // |factor - 1| <= coeff q^k with coeff = 2|linear| + 4.
  const double coeff = 2.0 * std::abs(linear) + 4.0;
  double log_sum = 0.0;
  double qk = 1.0;
  for (std::size_t k = 0;; ++k) {
    const double remaining = coeff * qk;
    if (remaining <= 0.5 && 2.0 * remaining / (1.0 - qv) <= policy.epsilon) break;
    if (k >= policy.max_terms) {
      throw MaxTermsExceeded("omega: term cap reached before tolerance");
    }
    log_sum += std::log1p(-qk * qv) + std::log(1.0 + linear * qk + qk * qk);
    qk *= qv;
  }
  return std::sqrt(1.0 - qv) / (4.0 * std::numbers::pi * std::sqrt(inner)) *
         std::exp(log_sum);
}

double phi_q(int j, double xi, DeformationParameter q,
             const TruncationPolicy& policy) {
  if (j < 0) throw DomainError("phi_q: index must be nonnegative");
  if (!IntervalIq(q).contains(xi)) throw DomainError("phi_q: xi outside I_q");
  const double weight = std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q, policy);
  const double x = std::sqrt((1.0 - q.value()) / 2.0) * xi;
  return std::sqrt(weight / qq_factorial(j, q)) * cq_hermite(j, x, q);
}

std::vector<double> phi_q_all(int jmax, double xi, DeformationParameter q,
                              const TruncationPolicy& policy) {
  if (jmax < 0) return {};
  if (!IntervalIq(q).contains(xi)) throw DomainError("phi_q_all: xi outside I_q");
  const double qv = q.value();
  const double root_weight =
      std::sqrt(std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q, policy));
  const double x = std::sqrt((1.0 - qv) / 2.0) * xi;
  // Normalized recurrence for g_j = H_j / sqrt((q;q)_j):
  // sqrt(1-q^{j+1}) g_{j+1} = 2x g_j - sqrt(1-q^j) g_{j-1}.
  std::vector<double> out(static_cast<std::size_t>(jmax) + 1);
  double prev = 0.0;
  double curr = 1.0;
  double qj = 1.0;  // q^j
  for (int j = 0; j <= jmax; ++j) {
    out[static_cast<std::size_t>(j)] = root_weight * curr;
    const double next =
        (2.0 * x * curr - std::sqrt(1.0 - qj) * prev) / std::sqrt(1.0 - qj * qv);
    prev = curr;
    curr = next;
    qj *= qv;
  }
  return out;
}

namespace {

// theta = t - sin(2t)/2 maps [0, pi] onto itself with dtheta/dt = 2 sin^2 t.
double theta_of_t(double t) { return t - 0.5 * std::sin(2.0 * t); }

double t_of_theta(double theta) {
  double lo = 0.0;
  double hi = std::numbers::pi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-16; ++iter) {
    const double mid = 0.5 * (lo + hi);
    (theta_of_t(mid) < theta ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

namespace detail {

GaussRule gauss_legendre(int n) {
  GaussRule rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double derivative = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      derivative = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / derivative;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * derivative * derivative);
    rule.nodes[static_cast<std::size_t>(i)] = -x;
    rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
    rule.weights[static_cast<std::size_t>(i)] = w;
    rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
  }
  return rule;
}

}  // namespace detail

QuadratureResult quad_Iq(const RealFunction& f, DeformationParameter q,
                         const QuadratureSpec& spec) {
  spec.validate();
  const double half_width = IntervalIq(q).half_width();
  const auto midpoint_rule = [&](std::size_t n, double& abs_integral) {
    const double h = std::numbers::pi / static_cast<double>(n);
    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double t = (static_cast<double>(i) + 0.5) * h;
      const double theta = theta_of_t(t);
      const double st = std::sin(t);
      const double xi = half_width * std::cos(theta);
      // Nodes within ~1e-8 of an end round onto it; their weight is O(t^5).
      if (!(std::abs(xi) < half_width)) continue;
      const double jacobian = half_width * std::sin(theta) * 2.0 * st * st * h;
      const Complex v = f(xi) * jacobian;
      sum += v;
      abs_sum += std::abs(v);
    }
    abs_integral = abs_sum;
    return sum;
  };

  std::size_t n = spec.node_count;
  double abs_integral = 0.0;
  Complex previous = midpoint_rule(n, abs_integral);
  for (int step = 0; step < spec.max_refinements; ++step) {
    n *= 2;
    const Complex current = midpoint_rule(n, abs_integral);
    const double change = std::abs(current - previous);
    if (change <= spec.target_tol * abs_integral) {
      return {current, n, change};
    }
    previous = current;
  }
  throw NoConvergence("quad_Iq: no convergence after " +
                      std::to_string(spec.max_refinements) + " refinements");
}

QuadratureResult quad_Iq(const RealFunction& f, DeformationParameter q,
                         const std::vector<double>& theta_breaks,
                         const QuadratureSpec& spec) {
  spec.validate();
  std::vector<double> edges{0.0};
  for (double theta : theta_breaks) {
    if (!(theta >= 0.0 && theta <= std::numbers::pi)) {
      throw DomainError("quad_Iq: breakpoints must lie in [0, pi]");
    }
    const double t = t_of_theta(theta);
    if (t < edges.back()) throw DomainError("quad_Iq: breakpoints must be sorted");
    if (t > edges.back()) edges.push_back(t);
  }
  if (edges.back() < std::numbers::pi) edges.push_back(std::numbers::pi);

  static const detail::GaussRule rule = detail::gauss_legendre(10);
  const double half_width = IntervalIq(q).half_width();
  const auto composite = [&](int split, double& abs_integral) {
    Complex sum = 0.0;
    double abs_sum = 0.0;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
      const double width = (edges[p + 1] - edges[p]) / split;
      for (int s = 0; s < split; ++s) {
        const double mid = edges[p] + (s + 0.5) * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
          const double t = mid + 0.5 * width * rule.nodes[i];
          const double theta = theta_of_t(t);
          const double st = std::sin(t);
          const double xi = half_width * std::cos(theta);
          if (!(std::abs(xi) < half_width)) continue;
          const double jacobian =
              half_width * std::sin(theta) * 2.0 * st * st * 0.5 * width * rule.weights[i];
          const Complex v = f(xi) * jacobian;
          sum += v;
          abs_sum += std::abs(v);
        }
      }
    }
    abs_integral = abs_sum;
    return sum;
  };

  const std::size_t panels = edges.size() - 1;
  int split = 1;
  double abs_integral = 0.0;
  Complex previous = composite(split, abs_integral);
  for (int step = 0; step < spec.max_refinements; ++step) {
    split *= 2;
    const Complex current = composite(split, abs_integral);
    const double change = std::abs(current - previous);
    if (change <= spec.target_tol * abs_integral) {
      return {current, panels * static_cast<std::size_t>(split) * rule.nodes.size(), change};
    }
    previous = current;
  }
  throw NoConvergence("quad_Iq: no convergence after " +
                      std::to_string(spec.max_refinements) + " refinements");
}

CircleMeasure::CircleMeasure(DeformationParameter q,
                             const TruncationPolicy& policy)
    : q_(q), qq_infinity_(qpoch_infinite(q.value(), q, policy).real()) {}

double CircleMeasure::radius(int j) const {
  return std::sqrt(q_.pow(j) / (1.0 - q_.value()));
}

double CircleMeasure::weight(int j) const {
  if (j < 0) return 0.0;
  return q_.pow(j) * qq_infinity_ / qq_factorial(j, q_);
}

double CircleMeasure::tail_weight(int j) const {
  // w_{i+1}/w_i = q/(1 - q^{i+1}); sum forward until the terms are negligible.
  double tail = 0.0;
  double w = weight(j + 1);
  for (int i = j + 1; w > 1e-300 && i < j + 100000; ++i) {
    tail += w;
    if (w < 1e-20 * tail) break;
    w *= q_.value() / (1.0 - q_.pow(i + 1));
  }
  return tail;
}

int CircleMeasure::circles_for_tail(double tol) const {
  int j = 0;
  while (tail_weight(j) >= tol) ++j;
  return j;
}

MuIntegral mu_q_integral(const PlaneFunction& g, DeformationParameter q,
                         int j_max, int angular_nodes,
                         const TruncationPolicy& policy, int first_circle) {
  if (angular_nodes < 1) throw DomainError("mu_q_integral: angular_nodes >= 1");
  if (first_circle < 0) throw DomainError("mu_q_integral: first_circle >= 0");
  const CircleMeasure measure(q, policy);
  Complex total = 0.0;
  for (int j = first_circle; j <= j_max; ++j) {
    const double rho = measure.radius(j);
    Complex circle = 0.0;
    for (int a = 0; a < angular_nodes; ++a) {
      const double theta = 2.0 * std::numbers::pi * a / angular_nodes;
      circle += g(std::polar(rho, theta));
    }
    total += measure.weight(j) * circle / static_cast<double>(angular_nodes);
  }
  return {total, first_circle, j_max, measure.tail_weight(j_max)};
}

Complex monomial_gram(int j, int k, DeformationParameter q, int j_max,
                      int angular_nodes, const TruncationPolicy& policy) {
  const double norm_j = std::sqrt(qbracket_factorial(j, q));
  const double norm_k = std::sqrt(qbracket_factorial(k, q));
  const auto integrand = [&](Complex z) {
    return std::conj(std::pow(z, j)) * std::pow(z, k) / (norm_j * norm_k);
  };
  return mu_q_integral(integrand, q, j_max, angular_nodes, policy).value;
}

}  // namespace qbargmann
