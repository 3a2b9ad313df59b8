#pragma once

// Named numerical checks of identities, closed forms and q -> 1 limits.
// Each check returns a VerificationReport; run_suite assembles them in
// check_id order.

#include <optional>
#include <string>
#include <vector>

#include "qbargmann/report.hpp"
#include "qbargmann/transform.hpp"

namespace qbargmann {

/// q values used by the limit checks unless a caller supplies its own.
inline const std::vector<double> kLimitQs = {0.9, 0.99, 0.999};

/// Errors at or below this level count as zero when judging a trend; near
/// q = 0.999 double evaluation loses about three digits to 1/(1-q).
inline constexpr double kTrendFloor = 1e-12;

/// True when errors strictly decrease (pairs both below kTrendFloor pass).
bool strictly_decreasing(const std::vector<double>& errors);

/// |2phi1(q^{-n},0;q^{alpha+1};q,q(1-q)x) - n!/(alpha+1)_n L_n^{(alpha)}(x)|
/// along q_list; passes on a strict decrease ending below 1e-3.
VerificationReport check_phi21_laguerre_limit(int n, double alpha, double x,
                                              const std::vector<double>& q_list = kLimitQs);

/// prod_k 1/(1 - sqrt2 z xi q^k (1-q) + z^2 q^{2k} (1-q)) against
/// e^{sqrt2 xi z - z^2/2}; strict decrease ending below 1e-2.
VerificationReport check_product_exp_limit(Complex z, double xi,
                                           const std::vector<double>& q_list = kLimitQs);

/// sup over u_grid of |omega_q(u) - e^{-u^2/2}/sqrt(2 pi)|.
VerificationReport check_omega_gauss_limit(const std::vector<double>& u_grid,
                                           const std::vector<double>& q_list = kLimitQs);

/// |h_j^{m,q}(z) - h_j^m(z)| along q_list.
VerificationReport check_coeff_limit(int j, int m, Complex z,
                                     const std::vector<double>& q_list = kLimitQs);

/// sum_n (lambda;q)_{m+n} t^n/(q;q)_n against
/// (lambda;q)_m/(lambda t;q)_m (lambda t;q)_inf/(t;q)_inf. Needs |t| < 1.
VerificationReport check_sa_summation(Complex lambda, Complex t, int m,
                                      DeformationParameter q);

/// Double sum of Cauchy polynomials against
/// (bs;q)_inf/(as;q)_inf 2phi1(b/a, 0; bs; q, at).
VerificationReport check_cauchy_gf(Complex a, Complex b, Complex t, Complex s,
                                   DeformationParameter q);

/// The finite part S_(<inf) of the wavefunction sum, read literally with
/// 1/(q;q)_{negative} = 0, relative to the full unnormalized sum.
/// Exploratory.
VerificationReport check_finite_sum_cancellation(int m, Complex z, double xi,
                                                 DeformationParameter q);

/// Glauber-type state
///   e_q(4|alpha|^2)^{-1/2} phi_0(theta) / ((2 alpha e^{i theta};q)_inf (2 alpha e^{-i theta};q)_inf)
/// against the m = 0 wavefunction at z = 2 conj(alpha)/sqrt(1-q),
/// xi = sqrt(2/(1-q)) cos theta; they must differ by the factor
/// sqrt(N_{0,q}(|z|^2)/e_q(4|alpha|^2)) alone.
VerificationReport check_odake_sasaki(Complex alpha, const std::vector<double>& thetas,
                                      DeformationParameter q);

struct SuiteConfig {
  /// Check ids to run; unknown ids raise DomainError.
  std::vector<std::string> checks;
  std::vector<double> q_values;
  /// Replaces every check's tolerance when set.
  std::optional<double> tolerance;

  /// Every check, q in {0.3, 0.5, 0.8}.
  static SuiteConfig defaults();
};

/// Every check id run_suite understands, sorted.
std::vector<std::string> available_checks();

/// Runs config.checks in sorted order. Deterministic.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// The four limit checks (coefficients, Laguerre, omega, product kernel)
/// on their fixed grids along q_list, in check_id order.
std::vector<VerificationReport> run_limits(const std::vector<double>& q_list = kLimitQs);

/// True when every mandatory report passed.
bool mandatory_passed(const std::vector<VerificationReport>& reports);

}  // namespace qbargmann
