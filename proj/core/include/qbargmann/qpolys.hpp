#pragma once

// Polynomial families: continuous q-Hermite, Wall (little q-Laguerre),
// Al-Salam-Chihara, two-dimensional q-Hermite, Cauchy polynomials, and the
// classical Hermite / Laguerre / complex Hermite families used as q -> 1
// references.

#include <span>
#include <vector>

#include "qbargmann/qcore.hpp"

namespace qbargmann {

/// Index pair (r, s) of a two-dimensional Hermite polynomial.
struct PolyIndexPair {
  int r = 0;
  int s = 0;

  int min() const noexcept { return r < s ? r : s; }
  int max() const noexcept { return r < s ? s : r; }
  int gap() const noexcept { return r < s ? s - r : r - s; }
};

/// Continuous q-Hermite H_n(x|q):
/// H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}, H_0 = 1, H_1 = 2x.
double cq_hermite(int n, double x, DeformationParameter q);
std::vector<double> cq_hermite(int n, std::span<const double> xs,
                               DeformationParameter q);

/// Wall polynomial P_n(x;a|q) = 2phi1(q^{-n}, 0; aq; q, qx).
double wall(int n, double x, double a, DeformationParameter q);
std::vector<double> wall(int n, std::span<const double> xs, double a,
                         DeformationParameter q);

/// Al-Salam-Chihara Q_m(x;a,b|q) from its 3phi2 definition
/// (ab;q)_m a^{-m} 3phi2(q^{-m}, a e^{i theta}, a e^{-i theta}; ab, 0; q, q),
/// x = cos theta. DomainError for a = 0 or |x| > 1.
Complex al_salam_chihara(int m, double x, Complex a, Complex b,
                         DeformationParameter q);

/// Same polynomial through its three-term recurrence
/// 2x Q_n = Q_{n+1} + (a+b) q^n Q_n + (1-q^n)(1-ab q^{n-1}) Q_{n-1}.
/// Defined for every a (including 0) and every real x.
Complex al_salam_chihara_recurrence(int m, double x, Complex a, Complex b,
                                    DeformationParameter q);
std::vector<Complex> al_salam_chihara_recurrence(int m,
                                                 std::span<const double> xs,
                                                 Complex a, Complex b,
                                                 DeformationParameter q);

/// H_{r,s}(z,w|q) as the finite sum over k <= min(r,s).
Complex qhermite2d(int r, int s, Complex z, Complex w, DeformationParameter q);

/// H_{r,s}(z, conj z|q) through the Wall-polynomial form
/// (-1)^{r^s} (q;q)_{rvs}/(q;q)_{|r-s|} q^{C(r^s,2)} |z|^{|r-s|}
///   e^{i(r-s) arg z} P_{r^s}(|z|^2; q^{|r-s|}|q).
Complex qhermite2d_wall_form(int r, int s, Complex z, DeformationParameter q);

/// Ito's complex Hermite polynomial H_{r,s}(z,w).
Complex complex_hermite_classical(int r, int s, Complex z, Complex w);

/// Physicists' Hermite polynomial H_m(x).
double hermite_classical(int m, double x);
std::vector<double> hermite_classical(int m, std::span<const double> xs);

/// Complex argument variant, needed by the classical polyanalytic transform.
Complex hermite_classical(int m, Complex x);

/// Generalized Laguerre polynomial L_n^{(alpha)}(x).
double laguerre_classical(int n, double alpha, double x);
std::vector<double> laguerre_classical(int n, double alpha,
                                       std::span<const double> xs);

/// Cauchy polynomial P_n(a,b) = prod_{k<n} (a - b q^k).
Complex cauchy_poly(int n, Complex a, Complex b, DeformationParameter q);

/// |LHS - RHS| of the Wall reflection identity
///   P_n(x;q^{-N}|q) = x^N (-1)^{-N} q^{N(N+1-2n)/2}
///       (q^{N+1};q)_{n-N} / (q^{1-N};q)_n  P_{n-N}(x;q^N|q).
///
/// Only parameters where both sides are literally finite are evaluated;
/// otherwise SingularParameters names the offending factor. In practice this
/// leaves N = 0: for N >= 1 the left side already meets (q^{1-N};q)_k = 0 once
/// n >= N and P_{n-N} has negative degree once n < N; for N < 0 the right side
/// is a vanishing Pochhammer times such a pole.
double wall_reflection_check(int n, int N, double x, DeformationParameter q);

}  // namespace qbargmann
