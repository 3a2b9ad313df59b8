#include "qbargmann/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <random>

#include "qbargmann/qpolys.hpp"

namespace qbargmann {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string join(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::string format_complex(Complex z) {
  return format_double(z.real()) + (std::signbit(z.imag()) ? "" : "+") +
         format_double(z.imag()) + "i";
}

// Running maximum that turns a NaN into +inf instead of dropping it.
double worse(double accumulated, double error) {
  if (std::isnan(error)) return kInf;
  return std::max(accumulated, error);
}

double relative_error(Complex value, Complex reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

// Uniform double in [0, 1) from the raw 64-bit stream, identical on every
// standard library.
double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Finishes a trend check: the reported error is the final one, or +inf
// when the sequence fails to decrease strictly.
void settle_trend(VerificationReport& report, const std::vector<double>& errors,
                  double tolerance) {
  for (std::size_t i = 0; i < errors.size(); ++i) {
    report.set("error_" + std::to_string(i), errors[i]);
  }
  const bool decreasing = strictly_decreasing(errors);
  report.set("strictly_decreasing", decreasing ? "true" : "false");
  report.max_abs_error = errors.empty() ? 0.0 : errors.back();
  if (!decreasing) report.max_abs_error = kInf;
  report.tolerance = tolerance;
  report.settle();
}

double pochhammer_rising(double a, int n) {
  double p = 1.0;
  for (int k = 0; k < n; ++k) p *= a + k;
  return p;
}

double factorial(int n) {
  double f = 1.0;
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

// Several reports of the same check folded into one: worst error, all
// parameters prefixed by case index.
VerificationReport merge(const std::string& id, bool mandatory,
                         const std::vector<VerificationReport>& parts,
                         double tolerance, const std::string& notes) {
  VerificationReport out;
  out.check_id = id;
  out.mandatory = mandatory;
  out.tolerance = tolerance;
  out.notes = notes;
  out.set("cases", static_cast<long long>(parts.size()));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string prefix = "case" + std::to_string(i) + ".";
    for (const auto& [key, value] : parts[i].params) out.set(prefix + key, value);
    out.set(prefix + "max_abs_error", parts[i].max_abs_error);
    out.max_abs_error = worse(out.max_abs_error, parts[i].max_abs_error);
  }
  out.settle();
  return out;
}

// Points of modulus fraction * radius of C_{q,m}, at fixed angles.
std::vector<Complex> sample_points(DeformationParameter q, int m,
                                   const std::vector<double>& fractions) {
  static const double angles[] = {0.0, 0.9, 2.1, -1.3, 3.0, -2.5, 1.6};
  const double radius = std::sqrt(q.pow(m) / (1.0 - q.value()));
  std::vector<Complex> points;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    points.push_back(std::polar(fractions[i] * radius, angles[i % 7]));
  }
  return points;
}

// ---- individual suite checks -------------------------------------------

using QList = std::vector<double>;

VerificationReport suite_euler(const QList& qs) {
  VerificationReport r;
  r.check_id = "euler";
  r.notes = "eq_exp series against 1/((1-q)u;q)_inf in long double";
  static const double fractions[] = {0.0, 0.1, 0.3, 0.5, 0.7, 0.9};
  static const double angles[] = {0.0, 1.0, std::numbers::pi / 2, std::numbers::pi, 4.0};
  std::size_t count = 0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (double f : fractions) {
      for (double a : angles) {
        const Complex u = std::polar(f / (1.0 - qv), a);
        const extended::ComplexL arg((1.0L - qv) * u.real(), (1.0L - qv) * u.imag());
        const extended::ComplexL product = extended::qpoch_infinite(arg, qv);
        const Complex reference(static_cast<double>((1.0L / product).real()),
                                static_cast<double>((1.0L / product).imag()));
        r.max_abs_error =
            worse(r.max_abs_error, relative_error(eq_exp(u, q), reference));
        ++count;
      }
    }
  }
  r.set("q_values", join(qs)).set("points", static_cast<long long>(count));
  r.set("max_abs_u_scaled", 0.9);
  r.tolerance = 1e-10;
  r.settle();
  return r;
}

VerificationReport suite_qhermite2d(const QList& qs) {
  VerificationReport r;
  r.check_id = "qhermite2d_wall_form";
  r.notes = "finite sum at w = conj z against the Wall form with phase e^{+i(r-s) arg z}; "
            "error relative to the sum of the term magnitudes, which bounds the rounding "
            "of either side";
  static const Complex zs[] = {{0.3, 0.0},  {-1.1, 0.4}, {0.0, 0.7}, {1.5, -1.2},
                               {2.0, 0.0},  {-0.2, -0.9}, {1.2, 1.2}, {-1.9, 0.5}};
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int rr = 0; rr <= 6; ++rr) {
      for (int s = 0; s <= 6; ++s) {
        for (const Complex& z : zs) {
          const Complex sum = qhermite2d(rr, s, z, std::conj(z), q);
          const Complex wall_form = qhermite2d_wall_form(rr, s, z, q);
          double scale = 0.0;
          for (int k = 0; k <= std::min(rr, s); ++k) {
            scale += qbinomial(rr, k, q) * qbinomial(s, k, q) * std::pow(qv, k * (k - 1) / 2.0) *
                     qq_factorial(k, q) * std::pow(std::abs(z), rr + s - 2 * k);
          }
          r.max_abs_error = worse(r.max_abs_error, std::abs(wall_form - sum) / scale);
        }
      }
    }
  }
  r.set("q_values", join(qs)).set("max_index", 6LL).set("max_abs_z", 2.0);
  r.tolerance = 1e-10;
  r.settle();
  return r;
}

VerificationReport suite_orthonormality(const QList& qs) {
  VerificationReport r;
  r.check_id = "orthonormality_phi";
  r.notes = "Gram matrix of phi_j^q, j <= 10, theta-substituted midpoint quadrature";
  const QuadratureSpec spec;
  std::size_t max_nodes = 0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int j = 0; j <= 10; ++j) {
      for (int k = j; k <= 10; ++k) {
        const QuadratureResult g = quad_Iq(
            [&](double xi) {
              const std::vector<double> phis = phi_q_all(k, xi, q);
              return Complex(phis[static_cast<std::size_t>(j)] *
                             phis[static_cast<std::size_t>(k)]);
            },
            q, spec);
        max_nodes = std::max(max_nodes, g.nodes);
        r.max_abs_error =
            worse(r.max_abs_error, std::abs(g.value - (j == k ? 1.0 : 0.0)));
      }
    }
  }
  r.set("q_values", join(qs)).set("max_index", 10LL);
  r.set("max_nodes", static_cast<long long>(max_nodes));
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport suite_moments(const QList& qs) {
  VerificationReport r;
  r.check_id = "mu_moments";
  r.notes = "int |z|^{2n} dmu_q = [n]_q! with normalized angular measure per circle";
  for (double qv : qs) {
    const DeformationParameter q(qv);
    const int j_max = CircleMeasure(q).circles_for_tail(1e-18);
    for (int n = 0; n <= 10; ++n) {
      const MuIntegral m = mu_q_integral(
          [n](Complex z) { return Complex(std::pow(std::norm(z), n)); }, q, j_max, 8);
      r.max_abs_error =
          worse(r.max_abs_error, relative_error(m.value, qbracket_factorial(n, q)));
    }
  }
  r.set("q_values", join(qs)).set("max_n", 10LL);
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport suite_m0_kernel(const QList& qs) {
  VerificationReport r;
  r.check_id = "m0_overlap_kernel";
  r.notes = "closed form and series against e_q(w conj z); diagonal against N_{0,q}";
  for (double qv : qs) {
    const DeformationParameter q(qv);
    const std::vector<Complex> zs = sample_points(q, 0, {0.2, 0.5, 0.8});
    const std::vector<Complex> ws = sample_points(q, 0, {0.7, 0.35, 0.6, 0.1});
    for (const Complex& z : zs) {
      for (const Complex& w : ws) {
        const Complex reference = eq_exp(w * std::conj(z), q);
        const OverlapKernel k = overlap_kernel(z, w, 0, q);
        r.max_abs_error = worse(r.max_abs_error, relative_error(k.series.value, reference));
        r.max_abs_error =
            worse(r.max_abs_error, relative_error(k.closed_form->value, reference));
      }
      const double n0 = normalization(0, std::norm(z), q);
      const OverlapKernel d = overlap_kernel(z, z, 0, q);
      r.max_abs_error = worse(r.max_abs_error, relative_error(d.series.value, n0));
      r.max_abs_error = worse(r.max_abs_error, relative_error(d.closed_form->value, n0));
    }
  }
  r.set("q_values", join(qs));
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport suite_m0_wavefunction(const QList& qs) {
  VerificationReport r;
  r.check_id = "m0_wavefunction";
  r.notes = "product-form wavefunction against the coefficient series";
  for (double qv : qs) {
    const DeformationParameter q(qv);
    const double edge = IntervalIq(q).half_width();
    for (const Complex& z : sample_points(q, 0, {0.0, 0.3, 0.6, 0.8})) {
      const CoherentStateLabel label(q, 0, z);
      for (double t : {-0.9, -0.4, 0.0, 0.3, 0.75}) {
        const double xi = t * edge;
        const Complex closed = wavefunction_closed(xi, label);
        const Complex series = wavefunction_series(xi, label).value;
        r.max_abs_error = worse(r.max_abs_error, std::abs(closed - series));
      }
    }
  }
  r.set("q_values", join(qs));
  r.tolerance = 1e-10;
  r.settle();
  return r;
}

VerificationReport suite_normalization(const QList& qs) {
  VerificationReport r;
  r.check_id = "normalization_series";
  r.notes = "sum_j |h_j^{m,q}|^2 against the closed normalization, m = 0..3";
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int m = 0; m <= 3; ++m) {
      for (const Complex& z : sample_points(q, m, {0.0, 0.25, 0.5, 0.75, 0.9})) {
        const double closed = normalization(m, std::norm(z), q);
        const Complex series = overlap_kernel_series(z, z, m, q).value;
        r.max_abs_error = worse(r.max_abs_error, relative_error(series, closed));
      }
    }
  }
  r.set("q_values", join(qs)).set("max_m", 3LL);
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport suite_transform_basis(const QList& qs, int m) {
  VerificationReport r;
  r.check_id = "transform_basis_m" + std::to_string(m);
  r.mandatory = (m == 0);
  r.notes = "B_m^q[phi_j^q](z) against h_j^{m,q}(z), j <= 6, five z per (j, q); "
            "kernel is the closed-form bracket without conjugation of z; error relative to "
            "max(|h|, 1) since h vanishes at zeros of the Wall factor";
  static const double fractions[] = {0.15, 0.35, 0.5, 0.65, 0.8};
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int j = 0; j <= 6; ++j) {
      const SampledSignal f = SampledSignal::from_function(
          [j, q](double xi) { return Complex(phi_q(j, xi, q)); });
      std::vector<double> shifted;
      for (int i = 0; i < 5; ++i) shifted.push_back(fractions[(i + j) % 5]);
      for (const Complex& z : sample_points(q, m, shifted)) {
        const Complex b = bargmann_q(f, m, q, z).value;
        const Complex h = coeff_h(j, m, z, q);
        r.max_abs_error =
            worse(r.max_abs_error, std::abs(b - h) / std::max(std::abs(h), 1.0));
      }
    }
  }
  r.set("q_values", join(qs)).set("m", static_cast<long long>(m)).set("max_j", 6LL);
  r.tolerance = 1e-6;
  r.settle();
  return r;
}

VerificationReport suite_isometry_m0(const QList& qs) {
  VerificationReport r;
  r.check_id = "isometry_m0";
  r.notes = "20 random unit phi-combinations per q (J <= 8, seed 20240607); "
            "norm of the image sum_j c_j h_j^{0,q} under dmu_q, and the quadrature "
            "transform of the combination against that image at two interior points";
  std::mt19937_64 gen(20240607);
  double worst_norm = 0.0;
  double worst_pointwise = 0.0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int trial = 0; trial < 20; ++trial) {
      const int J = static_cast<int>(unit_draw(gen) * 9.0);
      CoefficientVector c;
      for (int j = 0; j <= J; ++j) {
        c.c.emplace_back(2.0 * unit_draw(gen) - 1.0, 2.0 * unit_draw(gen) - 1.0);
      }
      const double norm = std::sqrt(c.squared_norm());
      for (Complex& v : c.c) v /= norm;
      const VerificationReport iso = isometry_check(c, 0, q);
      worst_norm = worse(worst_norm, iso.max_abs_error);

      const SampledSignal f = phi_combination(c, q);
      for (const Complex& z : sample_points(q, 0, {0.3 + 0.02 * trial, 0.7})) {
        Complex image = 0.0;
        for (int j = 0; j <= J; ++j) image += c.c[static_cast<std::size_t>(j)] * coeff_h(j, 0, z, q);
        worst_pointwise =
            worse(worst_pointwise, std::abs(bargmann_q(f, 0, q, z).value - image));
      }
    }
  }
  r.set("q_values", join(qs)).set("trials_per_q", 20LL);
  r.set("max_norm_deviation", worst_norm).set("max_pointwise_deviation", worst_pointwise);
  r.max_abs_error = worse(worst_norm, worst_pointwise);
  r.tolerance = 1e-6;
  r.settle();
  return r;
}

VerificationReport suite_isometry_m1(const QList& qs) {
  VerificationReport r;
  r.check_id = "isometry_m1";
  r.mandatory = false;
  r.notes = "m = 1, c = e_0 and Gram matrix of h_j^{1,q}, j <= 4; error is the full-dmu_q "
            "Gram deviation; gram_inside drops circles outside C_{q,1}";
  double worst_full = 0.0;
  double worst_inside = 0.0;
  double worst_ratio = 0.0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    const VerificationReport e0 = isometry_check(CoefficientVector{{1.0}}, 1, q);
    worst_ratio = worse(worst_ratio, e0.max_abs_error);
    const VerificationReport gram =
        isometry_check(CoefficientVector{{1.0, 0.0, 0.0, 0.0, 0.0}}, 1, q);
    worst_full = worse(worst_full, std::get<double>(gram.params.at("gram_full_max_dev")));
    worst_inside =
        worse(worst_inside, std::get<double>(gram.params.at("gram_inside_max_dev")));
  }
  r.set("q_values", join(qs));
  r.set("e0_norm_deviation", worst_ratio);
  r.set("gram_full_max_dev", worst_full).set("gram_inside_max_dev", worst_inside);
  r.max_abs_error = worse(worst_full, worst_ratio);
  r.tolerance = 1e-6;
  r.settle();
  return r;
}

VerificationReport suite_limit_laguerre(const QList& limit_qs) {
  std::vector<VerificationReport> parts;
  parts.push_back(check_phi21_laguerre_limit(0, 0.0, 0.5, limit_qs));
  parts.push_back(check_phi21_laguerre_limit(1, 0.0, 0.5, limit_qs));
  parts.push_back(check_phi21_laguerre_limit(2, 1.0, 0.8, limit_qs));
  parts.push_back(check_phi21_laguerre_limit(3, 2.0, 1.2, limit_qs));
  return merge("limit_laguerre", true, parts, 1e-3,
               "terminating 2phi1 -> n!/(alpha+1)_n L_n^(alpha)");
}

VerificationReport suite_limit_product(const QList& limit_qs) {
  std::vector<VerificationReport> parts;
  parts.push_back(check_product_exp_limit({0.0, 0.0}, 0.5, limit_qs));
  parts.push_back(check_product_exp_limit({0.3, 0.0}, 0.2, limit_qs));
  parts.push_back(check_product_exp_limit({0.0, 0.5}, 1.0, limit_qs));
  parts.push_back(check_product_exp_limit({0.2, 0.3}, -0.7, limit_qs));
  return merge("limit_product_exp", true, parts, 1e-2,
               "m = 0 product kernel -> e^{sqrt2 xi z - z^2/2}");
}

VerificationReport suite_limit_omega(const QList& limit_qs) {
  std::vector<double> grid;
  for (int i = -12; i <= 12; ++i) grid.push_back(0.25 * i);
  VerificationReport r = check_omega_gauss_limit(grid, limit_qs);
  r.check_id = "limit_omega";
  return r;
}

VerificationReport suite_limit_coeff(const QList& limit_qs) {
  std::vector<VerificationReport> parts;
  parts.push_back(check_coeff_limit(0, 0, {0.7, 0.0}, limit_qs));
  parts.push_back(check_coeff_limit(1, 0, {0.7, 0.0}, limit_qs));
  parts.push_back(check_coeff_limit(2, 1, {0.3, 0.1}, limit_qs));
  parts.push_back(check_coeff_limit(1, 2, {0.3, 0.2}, limit_qs));
  parts.push_back(check_coeff_limit(3, 3, {0.5, -0.2}, limit_qs));
  return merge("limit_coeff", true, parts, 1e-2,
               "h_j^{m,q}(z) -> h_j^m(z) at fixed z");
}

VerificationReport suite_sa(const QList& qs) {
  std::vector<VerificationReport> parts;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    parts.push_back(check_sa_summation(0.3, 0.0, 2, q));
    parts.push_back(check_sa_summation(0.3, 0.4, 2, q));
    parts.push_back(check_sa_summation(q.pow(-2), 0.2, 2, q));
    parts.push_back(check_sa_summation({0.7, 0.2}, {0.0, 0.5}, 3, q));
  }
  return merge("sa_summation", true, parts, 1e-8,
               "includes lambda = q^{-m}, where the left side terminates");
}

VerificationReport suite_cauchy(const QList& qs) {
  std::vector<VerificationReport> parts;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    parts.push_back(check_cauchy_gf(0.4, 0.2, 0.0, 0.0, q));
    parts.push_back(check_cauchy_gf(0.4, 0.2, 0.3, 0.3, q));
    parts.push_back(check_cauchy_gf(0.5, 0.5, 0.4, 0.6, q));
    parts.push_back(check_cauchy_gf({0.5, 0.2}, {0.0, 0.3}, 0.4, {0.5, -0.3}, q));
  }
  return merge("cauchy_gf", true, parts, 1e-8,
               "Cauchy polynomial P_n(a,b) = prod_{k<n} (a - b q^k)");
}

VerificationReport suite_finite_sum(const QList& qs) {
  std::vector<VerificationReport> parts;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int m = 0; m <= 2; ++m) {
      const Complex z = sample_points(q, m, {0.4}).front();
      parts.push_back(check_finite_sum_cancellation(m, z, 0.1, q));
    }
  }
  return merge("finite_sum_cancellation", false, parts, 1e-8,
               "literal reading with 1/(q;q)_{negative} = 0: the second finite sum vanishes "
               "and the first is the j < m part of the kernel series");
}

VerificationReport suite_odake_sasaki(const QList& qs) {
  std::vector<VerificationReport> parts;
  const std::vector<double> thetas = {0.3, std::numbers::pi / 3, 1.0, 2.0, 2.8};
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (const Complex& alpha :
         {Complex(0.0), Complex(0.1), Complex(0.0, 0.05), Complex(0.15, -0.1)}) {
      parts.push_back(check_odake_sasaki(alpha, thetas, q));
    }
  }
  return merge("odake_sasaki", true, parts, 1e-8,
               "z = 2 conj(alpha)/sqrt(1-q) and phi_0(theta)^2 = sqrt2 omega_q(sqrt2 xi(theta))");
}

VerificationReport suite_overlap_closed(const QList& qs) {
  VerificationReport r;
  r.check_id = "overlap_closed_m_ge_1";
  r.mandatory = false;
  r.notes = "terminating 3phi2 closed form against the series kernel; error is the "
            "off-diagonal worst case, diagonal_max_rel_error covers z = w";
  double diagonal = 0.0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (int m = 1; m <= 2; ++m) {
      const std::vector<Complex> zs = sample_points(q, m, {0.3, 0.6});
      const std::vector<Complex> ws = sample_points(q, m, {0.5, 0.2, 0.7});
      for (const Complex& z : zs) {
        for (const Complex& w : ws) {
          const OverlapKernel k = overlap_kernel(z, w, m, q);
          if (!k.closed_form) continue;
          r.max_abs_error = worse(r.max_abs_error,
                                     relative_error(k.closed_form->value, k.series.value));
        }
        const OverlapKernel d = overlap_kernel(z, z, m, q);
        if (d.closed_form) {
          diagonal = worse(diagonal, relative_error(d.closed_form->value, d.series.value));
        }
      }
    }
  }
  r.set("q_values", join(qs)).set("diagonal_max_rel_error", diagonal);
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport suite_wall_reflection(const QList& qs) {
  VerificationReport r;
  r.check_id = "wall_reflection";
  r.mandatory = false;
  r.notes = "reflection identity P_n(x;q^{-N}|q) ~ P_{n-N}(x;q^N|q); literally "
            "evaluable only at N = 0, other cases are counted as singular";
  struct Case {
    int n;
    int N;
    double x;
  };
  static const Case cases[] = {{0, 0, 0.3}, {2, 0, 0.3}, {5, 0, 0.8}, {1, 1, 0.2},
                               {3, 3, 0.1}, {3, 1, 0.4}, {2, -1, 0.3}};
  long long singular = 0;
  long long evaluated = 0;
  double worst = 0.0;
  for (double qv : qs) {
    const DeformationParameter q(qv);
    for (const Case& c : cases) {
      try {
        worst = worse(worst, wall_reflection_check(c.n, c.N, c.x, q));
        ++evaluated;
      } catch (const SingularParameters&) {
        ++singular;
      }
    }
  }
  r.set("q_values", join(qs)).set("evaluated", evaluated).set("singular", singular);
  r.set("max_residual_evaluable", worst);
  r.max_abs_error = singular > 0 ? kInf : worst;
  r.tolerance = 1e-12;
  r.settle();
  return r;
}

using SuiteEntry = std::function<VerificationReport(const QList&)>;

const std::map<std::string, SuiteEntry>& registry() {
  static const std::map<std::string, SuiteEntry> entries = {
      {"cauchy_gf", suite_cauchy},
      {"euler", suite_euler},
      {"finite_sum_cancellation", suite_finite_sum},
      {"isometry_m0", suite_isometry_m0},
      {"isometry_m1", suite_isometry_m1},
      {"limit_coeff", [](const QList&) { return suite_limit_coeff(kLimitQs); }},
      {"limit_laguerre", [](const QList&) { return suite_limit_laguerre(kLimitQs); }},
      {"limit_omega", [](const QList&) { return suite_limit_omega(kLimitQs); }},
      {"limit_product_exp", [](const QList&) { return suite_limit_product(kLimitQs); }},
      {"m0_overlap_kernel", suite_m0_kernel},
      {"m0_wavefunction", suite_m0_wavefunction},
      {"mu_moments", suite_moments},
      {"normalization_series", suite_normalization},
      {"odake_sasaki", suite_odake_sasaki},
      {"orthonormality_phi", suite_orthonormality},
      {"overlap_closed_m_ge_1", suite_overlap_closed},
      {"qhermite2d_wall_form", suite_qhermite2d},
      {"sa_summation", suite_sa},
      {"transform_basis_m0", [](const QList& qs) { return suite_transform_basis(qs, 0); }},
      {"transform_basis_m1", [](const QList& qs) { return suite_transform_basis(qs, 1); }},
      {"transform_basis_m2", [](const QList& qs) { return suite_transform_basis(qs, 2); }},
      {"wall_reflection", suite_wall_reflection},
  };
  return entries;
}

}  // namespace

bool strictly_decreasing(const std::vector<double>& errors) {
  for (std::size_t i = 1; i < errors.size(); ++i) {
    if (errors[i] <= kTrendFloor && errors[i - 1] <= kTrendFloor) continue;
    if (!(errors[i] < errors[i - 1])) return false;
  }
  return true;
}

VerificationReport check_phi21_laguerre_limit(int n, double alpha, double x,
                                              const std::vector<double>& q_list) {
  VerificationReport r;
  r.check_id = "limit_laguerre";
  r.set("n", static_cast<long long>(n)).set("alpha", alpha).set("x", x);
  r.set("q_values", join(q_list));
  const double reference =
      factorial(n) / pochhammer_rising(alpha + 1.0, n) * laguerre_classical(n, alpha, x);
  std::vector<double> errors;
  for (double qv : q_list) {
    const DeformationParameter q(qv);
    const Complex value =
        phi21_terminating(n, 0.0, std::pow(qv, alpha + 1.0), q, qv * (1.0 - qv) * x);
    errors.push_back(std::abs(value - reference));
  }
  settle_trend(r, errors, 1e-3);
  return r;
}

VerificationReport check_product_exp_limit(Complex z, double xi,
                                           const std::vector<double>& q_list) {
  VerificationReport r;
  r.check_id = "limit_product_exp";
  r.set("z", format_complex(z)).set("xi", xi).set("q_values", join(q_list));
  const Complex reference = std::exp(std::sqrt(2.0) * xi * z - 0.5 * z * z);
  std::vector<double> errors;
  for (double qv : q_list) {
    errors.push_back(std::abs(product_kernel_m0(xi, z, DeformationParameter(qv)) - reference));
  }
  settle_trend(r, errors, 1e-2);
  return r;
}

VerificationReport check_omega_gauss_limit(const std::vector<double>& u_grid,
                                           const std::vector<double>& q_list) {
  VerificationReport r;
  r.check_id = "limit_omega";
  r.notes = "sup over the u grid of |omega_q(u) - e^{-u^2/2}/sqrt(2 pi)|";
  r.set("q_values", join(q_list)).set("grid_points", static_cast<long long>(u_grid.size()));
  std::vector<double> errors;
  double asymmetry = 0.0;
  for (double qv : q_list) {
    const DeformationParameter q(qv);
    double worst = 0.0;
    for (double u : u_grid) {
      const double value = omega(u, q);
      const double gauss = std::exp(-0.5 * u * u) / std::sqrt(2.0 * std::numbers::pi);
      worst = worse(worst, std::abs(value - gauss));
      asymmetry = std::max(asymmetry, std::abs(value - omega(-u, q)));
    }
    errors.push_back(worst);
  }
  r.set("max_asymmetry", asymmetry);
  settle_trend(r, errors, 1e-2);
  return r;
}

VerificationReport check_coeff_limit(int j, int m, Complex z,
                                     const std::vector<double>& q_list) {
  VerificationReport r;
  r.check_id = "limit_coeff";
  r.set("j", static_cast<long long>(j)).set("m", static_cast<long long>(m));
  r.set("z", format_complex(z)).set("q_values", join(q_list));
  const Complex reference = polyanalytic_basis_classical(j, m, z);
  std::vector<double> errors;
  for (double qv : q_list) {
    errors.push_back(std::abs(coeff_h(j, m, z, DeformationParameter(qv)) - reference));
  }
  settle_trend(r, errors, 1e-2);
  return r;
}

VerificationReport check_sa_summation(Complex lambda, Complex t, int m,
                                      DeformationParameter q) {
  if (!(std::abs(t) < 1.0)) throw DomainError("check_sa_summation: |t| < 1 required");
  if (m < 0) throw DomainError("check_sa_summation: m >= 0 required");
  VerificationReport r;
  r.check_id = "sa_summation";
  r.set("lambda", format_complex(lambda)).set("t", format_complex(t));
  r.set("m", static_cast<long long>(m)).set("q", q.value());

  // |(lambda;q)_{m+n}/(q;q)_n| <= prod_k (1 + |lambda| q^k) / (q;q)_inf =: C,
  // so the tail after N terms is below C |t|^N / (1 - |t|).
  const double bound = qpoch_infinite(-std::abs(lambda), q).real() /
                       qpoch_infinite(q.value(), q).real() / (1.0 - std::abs(t));
  Complex lhs = 0.0;
  Complex poch = qpoch_finite(lambda, q, m);
  Complex tn = 1.0;
  double qn = 1.0;  // q^n
  double qqn = 1.0;  // (q;q)_n
  long long terms = 0;
  for (int n = 0; n < 100000; ++n) {
    lhs += poch / qqn * tn;
    ++terms;
    poch *= 1.0 - lambda * q.pow(m + n);
    tn *= t;
    qn *= q.value();
    qqn *= 1.0 - qn;
    if (bound * std::abs(tn) <= 1e-17 * std::max(std::abs(lhs), 1e-300) || tn == Complex(0.0)) break;
  }
  const Complex rhs = qpoch_finite(lambda, q, m) / qpoch_finite(lambda * t, q, m) *
                      qpoch_infinite(lambda * t, q) / qpoch_infinite(t, q);
  r.set("terms", terms);
  r.max_abs_error = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport check_cauchy_gf(Complex a, Complex b, Complex t, Complex s,
                                   DeformationParameter q) {
  if (a == Complex(0.0)) throw DomainError("check_cauchy_gf: a != 0 required");
  const double growth = std::abs(a) + std::abs(b);
  const double rate = growth * std::max(std::abs(t), std::abs(s));
  if (!(rate < 1.0)) throw DomainError("check_cauchy_gf: (|a|+|b|) max(|t|,|s|) < 1 required");
  VerificationReport r;
  r.check_id = "cauchy_gf";
  r.set("a", format_complex(a)).set("b", format_complex(b));
  r.set("t", format_complex(t)).set("s", format_complex(s)).set("q", q.value());

  // |P_n| <= (|a|+|b|)^n, so the terms with r + k >= R are bounded by
  // (R + 1) rate^R / ((q;q)_inf^2 (1 - rate)^2).
  const double qq_inf = qpoch_infinite(q.value(), q).real();
  int R = 1;
  while ((R + 1) * std::pow(rate, R) / (qq_inf * qq_inf * (1.0 - rate) * (1.0 - rate)) > 1e-17 &&
         R < 4000) {
    ++R;
  }
  std::vector<Complex> cauchy(static_cast<std::size_t>(R) + 1);
  cauchy[0] = 1.0;
  for (int n = 0; n < R; ++n) {
    cauchy[static_cast<std::size_t>(n) + 1] = cauchy[static_cast<std::size_t>(n)] * (a - b * q.pow(n));
  }
  Complex lhs = 0.0;
  for (int rr = 0; rr <= R; ++rr) {
    const Complex tr = std::pow(t, rr) / qq_factorial(rr, q);
    for (int k = 0; rr + k <= R; ++k) {
      lhs += cauchy[static_cast<std::size_t>(rr + k)] * tr * std::pow(s, k) / qq_factorial(k, q);
    }
  }
  const Complex rhs = qpoch_infinite(b * s, q) / qpoch_infinite(a * s, q) *
                      phi21(b / a, 0.0, b * s, q, a * t);
  r.set("max_total_degree", static_cast<long long>(R));
  r.max_abs_error = std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport check_finite_sum_cancellation(int m, Complex z, double xi,
                                                 DeformationParameter q) {
  if (m < 0) throw DomainError("check_finite_sum_cancellation: m >= 0 required");
  const CoherentStateLabel label(q, m, z);
  VerificationReport r;
  r.check_id = "finite_sum_cancellation";
  r.mandatory = false;
  r.set("m", static_cast<long long>(m)).set("z", format_complex(z));
  r.set("xi", xi).set("q", q.value());
  const double qv = q.value();
  const double x = (1.0 - qv) * std::norm(z);
  const std::vector<double> phis = phi_q_all(std::max(m - 1, 0), xi, q);
  Complex first = 0.0;
  for (int j = 0; j < m; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    const double coefficient =
        sign * qq_factorial(m, q) * std::pow(qv, j * (j - 1) / 2.0) *
        std::pow(std::sqrt(1.0 - qv), m - j) /
        (qq_factorial(m - j, q) *
         std::sqrt(std::pow(qv, m * j) * qq_factorial(m, q) * qq_factorial(j, q)));
    first += coefficient * std::pow(std::conj(z), m - j) * wall(j, x, q.pow(m - j), q) *
             phis[static_cast<std::size_t>(j)];
  }
  // Every term of the second finite sum carries 1/(q;q)_{j-m} with j < m.
  const Complex second = 0.0;
  const Complex finite = first - second;
  const Complex full = kernel_series(xi, m, z, q).value;
  r.set("finite_sum_abs", std::abs(finite)).set("full_sum_abs", std::abs(full));
  r.max_abs_error = std::abs(finite) / std::max(std::abs(full), 1e-300);
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

VerificationReport check_odake_sasaki(Complex alpha, const std::vector<double>& thetas,
                                      DeformationParameter q) {
  const double qv = q.value();
  const Complex z = 2.0 * std::conj(alpha) / std::sqrt(1.0 - qv);
  const CoherentStateLabel label(q, 0, z);
  VerificationReport r;
  r.check_id = "odake_sasaki";
  r.set("alpha", format_complex(alpha)).set("q", qv).set("thetas", join(thetas));
  const double eq_alpha = eq_exp(4.0 * std::norm(alpha), q).real();
  const double factor = std::sqrt(normalization(0, std::norm(z), q) / eq_alpha);
  for (double theta : thetas) {
    const double xi = std::sqrt(2.0 / (1.0 - qv)) * std::cos(theta);
    const double phi0 = std::sqrt(std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q));
    const Complex products = qpoch_infinite(2.0 * alpha * std::polar(1.0, theta), q) *
                             qpoch_infinite(2.0 * alpha * std::polar(1.0, -theta), q);
    const Complex glauber = phi0 / (std::sqrt(eq_alpha) * products);
    const Complex psi = wavefunction_closed(xi, label);
    r.max_abs_error = worse(r.max_abs_error, std::abs(glauber - factor * psi));
  }
  r.set("normalization_factor", factor);
  r.notes = "differs from the m = 0 wavefunction by the theta-independent factor "
            "sqrt(N_{0,q}(|z|^2)/e_q(4|alpha|^2))";
  r.tolerance = 1e-8;
  r.settle();
  return r;
}

SuiteConfig SuiteConfig::defaults() {
  return SuiteConfig{available_checks(), {0.3, 0.5, 0.8}, std::nullopt};
}

std::vector<std::string> available_checks() {
  std::vector<std::string> ids;
  for (const auto& [id, entry] : registry()) ids.push_back(id);
  return ids;
}

std::vector<VerificationReport> run_suite(const SuiteConfig& config) {
  if (config.tolerance && !(*config.tolerance > 0.0)) {
    throw DomainError("run_suite: tolerance must be > 0");
  }
  std::vector<DeformationParameter> validated;
  for (double qv : config.q_values) validated.emplace_back(qv);

  std::vector<std::string> ids = config.checks;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<VerificationReport> reports;
  for (const std::string& id : ids) {
    const auto it = registry().find(id);
    if (it == registry().end()) throw DomainError("run_suite: unknown check '" + id + "'");
    VerificationReport report = it->second(config.q_values);
    if (config.tolerance) {
      report.tolerance = *config.tolerance;
      report.settle();
    }
    reports.push_back(std::move(report));
  }
  return reports;
}

std::vector<VerificationReport> run_limits(const std::vector<double>& q_list) {
  for (double qv : q_list) (void)DeformationParameter(qv);
  return {suite_limit_coeff(q_list), suite_limit_laguerre(q_list),
          suite_limit_omega(q_list), suite_limit_product(q_list)};
}

bool mandatory_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) {
    return !r.mandatory || r.passed;
  });
}

}  // namespace qbargmann
