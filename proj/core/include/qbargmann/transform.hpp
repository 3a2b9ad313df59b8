#pragma once

// The q-deformed polyanalytic Bargmann transform B_m^q, its analytic (m = 0)
// product-kernel form, the classical transforms it deforms, and the analysis
// tools used to test isometry.

#include <functional>
#include <vector>

#include "qbargmann/coherent.hpp"
#include "qbargmann/measure.hpp"
#include "qbargmann/report.hpp"

namespace qbargmann {

/// A signal on I_q: either a callable xi -> f(xi), or samples on a grid in
/// theta = arccos(xi sqrt((1-q)/2)) in [0, pi], linearly interpolated.
class SampledSignal {
 public:
  static SampledSignal from_function(RealFunction f);
  /// theta must be strictly increasing inside [0, pi]; values finite.
  static SampledSignal from_theta_samples(std::vector<double> theta,
                                          std::vector<Complex> values);

  Complex operator()(double xi, DeformationParameter q) const;

  bool is_sampled() const noexcept { return !function_; }
  const std::vector<double>& theta() const noexcept { return theta_; }
  const std::vector<Complex>& values() const noexcept { return values_; }

 private:
  SampledSignal() = default;

  RealFunction function_;
  std::vector<double> theta_;
  std::vector<Complex> values_;
};

/// Expansion coefficients c_0..c_J in the basis {phi_j^q}.
struct CoefficientVector {
  std::vector<Complex> c;

  int order() const noexcept { return static_cast<int>(c.size()) - 1; }
  double squared_norm() const;
};

/// f = sum_j c_j phi_j^q as a signal.
SampledSignal phi_combination(const CoefficientVector& coeffs,
                              DeformationParameter q,
                              const TruncationPolicy& policy = {});

struct TransformValue {
  Complex value;
  std::size_t nodes = 0;
  double estimated_error = 0.0;
};

/// B_m^q[f](z) = int_{I_q} K(xi, z) f(xi) dxi with the closed-form kernel
/// K = kernel_closed_bracket = sum_j h_j^{m,q}(z) phi_j^q(xi), so that
/// B_m^q[phi_j^q] = h_j^{m,q}. DomainError for z outside C_{q,m}.
TransformValue bargmann_q(const SampledSignal& f, int m, DeformationParameter q,
                          Complex z, const QuadratureSpec& quad = {},
                          const TruncationPolicy& policy = {});

/// prod_k 1/(1 - sqrt2 z xi q^k (1-q) + z^2 q^{2k} (1-q)), z not conjugated.
Complex product_kernel_m0(double xi, Complex z, DeformationParameter q,
                          const TruncationPolicy& policy = {});

/// m = 0 transform through the explicit product kernel
/// prod_k 1/(1 - sqrt2 z xi q^k (1-q) + z^2 q^{2k} (1-q)) sqrt(sqrt2 omega_q(sqrt2 xi)).
TransformValue bargmann_q_m0(const SampledSignal& f, DeformationParameter q,
                             Complex z, const QuadratureSpec& quad = {},
                             const TruncationPolicy& policy = {});

/// Refinement policy for integrals over the real line, truncated to [-R, R].
struct RealLineQuadrature {
  double half_width = 10.0;
  int initial_panels = 8;
  int max_refinements = 8;
  double target_tol = 1e-13;
};

/// pi^{-1/4} int e^{-z^2/2 - xi^2/2 + sqrt2 xi z} f(xi) dxi.
Complex classical_bargmann(const RealFunction& f, Complex z,
                           const RealLineQuadrature& quad = {});

/// (-1)^m (2^m m! sqrt(pi))^{-1/2}
///   int e^{-z^2/2 - xi^2/2 + sqrt2 xi z} H_m(xi - (z + conj z)/sqrt2) f(xi) dxi.
Complex classical_bm(const RealFunction& f, int m, Complex z,
                     const RealLineQuadrature& quad = {});

/// Hermite function H_j(xi) e^{-xi^2/2} / sqrt(2^j j! sqrt(pi)).
double hermite_function(int j, double xi);

/// h_j^m(z) of the true-polyanalytic Fock space (Laguerre form).
Complex polyanalytic_basis_classical(int j, int m, Complex z);

/// c_j = int_{I_q} phi_j^q f, j = 0..J.
CoefficientVector analyze(const SampledSignal& f, DeformationParameter q, int J,
                          const QuadratureSpec& quad = {},
                          const TruncationPolicy& policy = {});

/// sqrt(int |F|^2 dmu_q), truncated to circles first_circle..j_max.
double norm_A2(const PlaneFunction& F, DeformationParameter q, int j_max,
               int angular_nodes = 64, const TruncationPolicy& policy = {},
               int first_circle = 0);

struct IsometryOptions {
  int j_max = -1;  // -1: chosen from the weight tail
  int angular_nodes = 64;
  double tolerance = 1e-6;
};

/// Compares ||f||^2 = sum |c_j|^2 with ||B_m^q f||^2 under dmu_q, where the
/// image is B_m^q f = sum_j c_j h_j^{m,q} (the action of B_m^q on the basis,
/// extended continuously to circles on the boundary of C_{q,m}). Also reports
/// the Gram matrix deviation of {h_j^{m,q}} under the full dmu_q and under
/// dmu_q restricted to circles inside C_{q,m}.
VerificationReport isometry_check(const CoefficientVector& coeffs, int m,
                                  DeformationParameter q,
                                  const IsometryOptions& options = {},
                                  const TruncationPolicy& policy = {});

}  // namespace qbargmann
