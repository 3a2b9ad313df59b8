#pragma once

// The two measures of the construction: the weight omega_q with the
// orthonormal q-Hermite functions phi_j^q on I_q, and the discrete-circle
// measure dmu_q on the complex plane.

#include <functional>
#include <vector>

#include "qbargmann/qcore.hpp"

namespace qbargmann {

/// The open interval I_q = (-sqrt2/sqrt(1-q), sqrt2/sqrt(1-q)).
class IntervalIq {
 public:
  explicit IntervalIq(DeformationParameter q);

  double half_width() const noexcept { return half_width_; }
  bool contains(double xi) const noexcept {
    return xi > -half_width_ && xi < half_width_;
  }

 private:
  double half_width_;
};

/// Refinement policy for xi-integrals over I_q. The rule starts with
/// node_count nodes and doubles up to max_refinements times; convergence is
/// declared when two successive results differ by less than target_tol
/// relative to the integral of |f|.
struct QuadratureSpec {
  std::size_t node_count = 64;
  int max_refinements = 10;
  double target_tol = 1e-13;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  std::size_t nodes = 0;
  double estimated_error = 0.0;
};

using RealFunction = std::function<Complex(double)>;
using PlaneFunction = std::function<Complex(Complex)>;

/// omega_q(u). DomainError unless |u| < 2/sqrt(1-q).
double omega(double u, DeformationParameter q,
             const TruncationPolicy& policy = {});

/// phi_j^q(xi) = sqrt(sqrt2 omega_q(sqrt2 xi)/(q;q)_j) H_j(sqrt((1-q)/2) xi|q).
/// DomainError outside I_q.
double phi_q(int j, double xi, DeformationParameter q,
             const TruncationPolicy& policy = {});

/// phi_0^q(xi), ..., phi_jmax^q(xi) in one pass (shared weight, recurrence).
std::vector<double> phi_q_all(int jmax, double xi, DeformationParameter q,
                              const TruncationPolicy& policy = {});

/// Integral of f over I_q after the substitution xi = sqrt(2/(1-q)) cos theta,
/// which absorbs the inverse square-root endpoint behaviour of omega_q.
/// theta is further mapped as theta = t - sin(2t)/2 so that integrands with
/// fractional powers of sin theta at the ends (such as sqrt(omega_q) times a
/// smooth signal) still converge quickly. A midpoint rule in t is used, so f
/// is never evaluated at the endpoints.
QuadratureResult quad_Iq(const RealFunction& f, DeformationParameter q,
                         const QuadratureSpec& spec = {});

/// Same integral for integrands that are only piecewise smooth in theta, with
/// kinks at theta_breaks (sorted, inside [0, pi]). Composite Gauss-Legendre
/// between consecutive breaks, every panel halved on each refinement;
/// spec.node_count is ignored.
QuadratureResult quad_Iq(const RealFunction& f, DeformationParameter q,
                         const std::vector<double>& theta_breaks,
                         const QuadratureSpec& spec = {});

namespace detail {

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1].
GaussRule gauss_legendre(int n);

}  // namespace detail

/// Radii rho_j = q^{j/2} (1-q)^{-1/2} and weights w_j = q^j (q;q)_inf/(q;q)_j
/// of dmu_q. Each circle carries the normalized (mass one) angular measure.
class CircleMeasure {
 public:
  explicit CircleMeasure(DeformationParameter q,
                         const TruncationPolicy& policy = {});

  DeformationParameter q() const noexcept { return q_; }
  double radius(int j) const;
  double weight(int j) const;
  /// sum_{i > j} w_i.
  double tail_weight(int j) const;
  /// Smallest J with tail_weight(J) < tol.
  int circles_for_tail(double tol) const;

 private:
  DeformationParameter q_;
  double qq_infinity_;
};

struct MuIntegral {
  Complex value;
  int first_circle = 0;
  int j_max = 0;
  /// Weight of the circles beyond j_max (bounds the truncation error by
  /// tail_weight * sup |g| on those circles).
  double weight_tail = 0.0;
};

/// sum_{first_circle <= j <= j_max} w_j (1/2pi) int g(rho_j e^{i theta}) dtheta,
/// angular integral by the equispaced trapezoid rule.
MuIntegral mu_q_integral(const PlaneFunction& g, DeformationParameter q,
                         int j_max, int angular_nodes,
                         const TruncationPolicy& policy = {},
                         int first_circle = 0);

/// <h_j^{0,q}, h_k^{0,q}> under dmu_q with h_j^{0,q}(z) = z^j/sqrt([j]_q!).
Complex monomial_gram(int j, int k, DeformationParameter q, int j_max = 400,
                      int angular_nodes = 64,
                      const TruncationPolicy& policy = {});

}  // namespace qbargmann
