#pragma once

// Coherent states |z,m,q> of the q-deformed polyanalytic construction:
// coefficients h_j^{m,q}, normalization N_{m,q}, wavefunctions in series and
// closed form, and the overlap (reproducing) kernel.
//
// Conventions:
//  * The wavefunction is <xi|z,m,q> = N^{-1/2} sum_j conj(h_j^{m,q}(z)) phi_j^q(xi).
//  * The closed form evaluates the z-side bracket
//        (-1)^m (sqrt2 omega_q(sqrt2 xi)/(q^m (q;q)_m))^{1/2}
//        Q_m(x; c z, c q conj(z)|q) / ((c z e^{i theta};q)_inf (c z e^{-i theta};q)_inf),
//    c = sqrt((1-q)/q^m), x = cos theta = sqrt((1-q)/2) xi, with the product
//    taken WITHOUT conjugating z. That bracket equals sum_j h_j^{m,q}(z) phi_j^q(xi),
//    so the wavefunction is its conjugate divided by sqrt(N).

#include <optional>
#include <string>

#include "qbargmann/measure.hpp"

namespace qbargmann {

/// Label (q, m, z) of a coherent state. Requires (1-q)|z|^2 < q^m.
class CoherentStateLabel {
 public:
  CoherentStateLabel(DeformationParameter q, int m, Complex z);

  DeformationParameter q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  Complex z() const noexcept { return z_; }

  static bool admissible(DeformationParameter q, int m, Complex z);

 private:
  DeformationParameter q_;
  int m_;
  Complex z_;
};

struct KernelValue {
  Complex value;
  TruncationReport report;
};

/// h_j^{m,q}(z). At z = 0 only j = m survives (arg 0 is taken as 0).
Complex coeff_h(int j, int m, Complex z, DeformationParameter q);

/// N_{m,q}(x), x = |z|^2:
/// q^{-m} (q^{1-m}(1-q)x;q)_m / (q^{-m}(1-q)x;q)_inf.
/// DomainError unless (1-q) x < q^m.
double normalization(int m, double x, DeformationParameter q,
                     const TruncationPolicy& policy = {});

/// Default cap on the number of basis terms in coefficient series.
inline constexpr int kMaxSeriesTerms = 500;

/// Truncated series with the number of terms chosen from an empirical ratio
/// bound on |h_j|. NoConvergence if the tail estimate is still above
/// policy.epsilon at j_max.
KernelValue wavefunction_series(double xi, const CoherentStateLabel& label,
                                int j_max = kMaxSeriesTerms,
                                const TruncationPolicy& policy = {});

/// Unnormalized series sum_j h_j^{m,q}(z) phi_j^q(xi) (the transform kernel).
KernelValue kernel_series(double xi, int m, Complex z, DeformationParameter q,
                          int j_max = kMaxSeriesTerms,
                          const TruncationPolicy& policy = {});

/// Closed-form wavefunction. For m = 0 this is the product formula
/// (sqrt2 omega_q(sqrt2 xi)/e_q(|z|^2))^{1/2}
///   prod_k 1/(1 - sqrt2 conj(z) xi q^k (1-q) + conj(z)^2 q^{2k} (1-q)).
Complex wavefunction_closed(double xi, const CoherentStateLabel& label,
                            const TruncationPolicy& policy = {});

/// Closed-form z-side bracket (see file comment); defined for every z,
/// including z = 0.
Complex kernel_closed_bracket(double xi, int m, Complex z,
                              DeformationParameter q,
                              const TruncationPolicy& policy = {});

/// Series kernel K(z,w) = sum_j conj(h_j^{m,q}(z)) h_j^{m,q}(w).
KernelValue overlap_kernel_series(Complex z, Complex w, int m,
                                  DeformationParameter q,
                                  const TruncationPolicy& policy = {});

/// Terminating 3phi2 closed form of the overlap kernel. RatioUndefined for
/// z = 0 or w = 0; DomainError outside C_{q,m}.
KernelValue overlap_kernel_closed(Complex z, Complex w, int m,
                                  DeformationParameter q,
                                  const TruncationPolicy& policy = {});

struct OverlapKernel {
  KernelValue series;
  std::optional<KernelValue> closed_form;
  /// Why closed_form is absent, if it is.
  std::string closed_form_note;
};

/// Both evaluation paths of the overlap kernel.
OverlapKernel overlap_kernel(Complex z, Complex w, int m, DeformationParameter q,
                             const TruncationPolicy& policy = {});

}  // namespace qbargmann
