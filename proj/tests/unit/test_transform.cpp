#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "oracles/oracle_values.hpp"
#include "qbargmann/transform.hpp"
#include "unit/support.hpp"

using namespace qbargmann;
using doctest::Approx;

namespace {

Complex random_point(std::mt19937_64& gen, DeformationParameter q, int m, double fill) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double radius = std::sqrt(q.pow(m) / (1.0 - q.value()));
  return std::polar(fill * radius * std::sqrt(unit(gen)), 2.0 * std::numbers::pi * unit(gen));
}

SampledSignal basis(int j, DeformationParameter q) {
  return SampledSignal::from_function([j, q](double xi) { return Complex(phi_q(j, xi, q)); });
}

}  // namespace

TEST_CASE("transform examples") {
  const DeformationParameter half(0.5);
  for (Complex z : {Complex(0.0), Complex(0.4, 0.3), Complex(-1.1, 0.2)}) {
    CHECK(std::abs(bargmann_q(basis(0, half), 0, half, z).value - 1.0) < 1e-10);
  }
  CHECK(bargmann_q(basis(2, half), 0, half, 0.4).value.real() ==
        Approx(0.16 / std::sqrt(1.5)).epsilon(1e-10));
  const Complex h11 = coeff_h(1, 1, 0.3, half);
  CHECK(std::abs(bargmann_q(basis(1, half), 1, half, 0.3).value - h11) < 1e-10);
  CHECK(std::abs(bargmann_q_m0(basis(0, half), half, 0.0).value - 1.0) < 1e-12);

  CHECK_THROWS_AS(bargmann_q(basis(0, half), 0, half, 1.5), DomainError);
  CHECK_THROWS_AS(bargmann_q(basis(0, half), 1, half, 1.0), DomainError);
  CHECK_THROWS_AS(bargmann_q_m0(basis(0, half), half, {1.0, 1.0}), DomainError);
}

TEST_CASE("defining contract B[phi_j] = h_j") {
  std::mt19937_64 gen(20240607);
  for (double qv : {0.3, 0.5, 0.8}) {
    const DeformationParameter q(qv);
    for (int m = 0; m <= 2; ++m) {
      for (int j = 0; j <= 6; ++j) {
        const SampledSignal f = basis(j, q);
        for (int trial = 0; trial < 5; ++trial) {
          const Complex z = random_point(gen, q, m, 0.95);
          const Complex h = coeff_h(j, m, z, q);
          const Complex b = bargmann_q(f, m, q, z).value;
          CHECK(std::abs(b - h) / std::max(std::abs(h), 1.0) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("product kernel form agrees at m = 0") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const std::array<double, 3> qs = {0.3, 0.5, 0.8};
  for (int trial = 0; trial < 20; ++trial) {
    const DeformationParameter q(qs[trial % 3]);
    CoefficientVector c;
    const int order = trial % 6;
    for (int j = 0; j <= order; ++j) c.c.emplace_back(unit(gen), unit(gen));
    const SampledSignal f = phi_combination(c, q);
    const Complex z = random_point(gen, q, 0, 0.9);
    const Complex general = bargmann_q(f, 0, q, z).value;
    const Complex product = bargmann_q_m0(f, q, z).value;
    CHECK(std::abs(general - product) < 1e-8);
  }

  SUBCASE("kernels agree pointwise") {
    const DeformationParameter q(0.5);
    const Complex z(0.3, -0.6);
    for (double xi : {-1.5, -0.2, 0.0, 0.9}) {
      const Complex root = std::sqrt(std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, q));
      CHECK(std::abs(root * product_kernel_m0(xi, z, q) - kernel_closed_bracket(xi, 0, z, q)) <
            1e-12);
    }
  }
}

TEST_CASE("linearity") {
  const DeformationParameter q(0.5);
  const SampledSignal f = basis(1, q);
  const SampledSignal g = SampledSignal::from_function([](double xi) { return Complex(std::cos(xi), xi); });
  const Complex alpha(0.7, -0.2);
  const Complex beta(-1.3, 0.5);
  const SampledSignal mix = SampledSignal::from_function(
      [&](double xi) { return alpha * f(xi, q) + beta * g(xi, q); });
  for (int m = 0; m <= 2; ++m) {
    const Complex z = 0.3 * std::polar(1.0, 0.8) * std::sqrt(q.pow(m));
    const Complex lhs = bargmann_q(mix, m, q, z).value;
    const Complex rhs = alpha * bargmann_q(f, m, q, z).value + beta * bargmann_q(g, m, q, z).value;
    CHECK(std::abs(lhs - rhs) < 1e-10);
  }
}

TEST_CASE("classical transforms") {
  const RealFunction ground = [](double xi) {
    return Complex(std::pow(std::numbers::pi, -0.25) * std::exp(-xi * xi / 2.0));
  };
  for (Complex z : {Complex(0.0), Complex(0.5, -0.4), Complex(-1.2, 0.7)}) {
    CHECK(std::abs(classical_bargmann(ground, z) - 1.0) < 1e-12);
    CHECK(std::abs(classical_bm(ground, 0, z) - classical_bargmann(ground, z)) < 1e-12);
  }

  const Complex z(0.3, 0.2);
  const RealFunction h2 = [](double xi) { return Complex(hermite_function(2, xi)); };
  CHECK(support::rel(polyanalytic_basis_classical(2, 1, z), oracle::kHClassical21) < 1e-12);
  CHECK(support::rel(classical_bm(h2, 1, z), oracle::kClassicalBm) < 1e-10);

  for (int j = 0; j <= 3; ++j) {
    const RealFunction hj = [j](double xi) { return Complex(hermite_function(j, xi)); };
    for (int m = 0; m <= 3; ++m) {
      for (Complex w : {Complex(0.4, -0.1), Complex(-0.8, 0.9)}) {
        CHECK(std::abs(classical_bm(hj, m, w) - polyanalytic_basis_classical(j, m, w)) < 1e-6);
      }
    }
  }

  SUBCASE("Hermite functions are orthonormal") {
    for (int j = 0; j <= 5; ++j) {
      for (int k = 0; k <= j; ++k) {
        const double n = classical_bargmann(
            [&](double xi) {
              return Complex(hermite_function(j, xi) * hermite_function(k, xi) *
                             std::pow(std::numbers::pi, 0.25) * std::exp(xi * xi / 2.0));
            },
            0.0).real();
        CHECK(n == Approx(j == k ? 1.0 : 0.0).epsilon(1e-10).scale(1.0));
      }
    }
  }
}

TEST_CASE("m = 0 transform tends to the classical one") {
  const RealFunction bump = [](double xi) { return Complex(std::exp(-(xi - 0.3) * (xi - 0.3))); };
  const SampledSignal f = SampledSignal::from_function(bump);
  const Complex z(0.4, 0.3);
  const Complex classical = classical_bargmann(bump, z);
  double previous = 1e300;
  for (double qv : {0.9, 0.99, 0.999}) {
    const double error = std::abs(bargmann_q_m0(f, DeformationParameter(qv), z).value - classical);
    CHECK(error < previous);
    previous = error;
  }
  CHECK(previous < 1e-2);
}

TEST_CASE("analysis") {
  const DeformationParameter q(0.5);
  const CoefficientVector e3 = analyze(basis(3, q), q, 6);
  REQUIRE(e3.order() == 6);
  for (int j = 0; j <= 6; ++j) CHECK(std::abs(e3.c[j] - (j == 3 ? 1.0 : 0.0)) < 1e-8);

  const CoefficientVector zero =
      analyze(SampledSignal::from_function([](double) { return Complex(0.0); }), q, 4);
  for (const Complex& c : zero.c) CHECK(c == Complex(0.0));

  const SampledSignal mix = SampledSignal::from_function([q](double xi) {
    return Complex((phi_q(0, xi, q) + phi_q(1, xi, q)) / std::sqrt(2.0));
  });
  CHECK(analyze(mix, q, 8).squared_norm() == Approx(1.0).epsilon(1e-8));
  CHECK(analyze(mix, q, -1).c.empty());
}

TEST_CASE("norm in A^2") {
  const DeformationParameter q(0.5);
  const int j_max = CircleMeasure(q).circles_for_tail(1e-16);
  CHECK(norm_A2([](Complex) { return Complex(1.0); }, q, j_max) == Approx(1.0).epsilon(1e-12));
  CHECK(norm_A2([q](Complex z) { return coeff_h(2, 0, z, q); }, q, j_max) ==
        Approx(1.0).epsilon(1e-8));
  CHECK(norm_A2([](Complex z) { return z + z * z; }, q, j_max) ==
        Approx(std::sqrt(2.5)).epsilon(1e-8));
}

TEST_CASE("isometry") {
  const DeformationParameter half(0.5);
  const VerificationReport zero = isometry_check(CoefficientVector{{0.0, 0.0}}, 0, half);
  CHECK(std::get<double>(zero.params.at("norm_f")) == 0.0);
  CHECK(std::get<double>(zero.params.at("norm_Bf")) == 0.0);
  CHECK(zero.passed);

  std::mt19937_64 gen(5);
  std::normal_distribution<double> normal;
  for (double qv : {0.3, 0.5, 0.8}) {
    const DeformationParameter q(qv);
    for (int trial = 0; trial < 5; ++trial) {
      CoefficientVector c;
      for (int j = 0; j <= 8; ++j) c.c.emplace_back(normal(gen), normal(gen));
      const VerificationReport r = isometry_check(c, 0, q);
      CHECK(r.mandatory);
      CHECK(r.passed);
      CHECK(r.max_abs_error < 1e-6);
      CHECK(std::get<double>(r.params.at("gram_full_max_dev")) < 1e-8);
    }
  }

  const VerificationReport m1 = isometry_check(CoefficientVector{{1.0}}, 1, half);
  CHECK_FALSE(m1.mandatory);
  CHECK(m1.params.count("ratio") == 1);
}

TEST_CASE("sampled signals") {
  const DeformationParameter q(0.5);
  std::vector<double> theta;
  std::vector<Complex> values;
  for (int i = 0; i <= 40; ++i) {
    theta.push_back(std::numbers::pi * i / 40.0);
    values.emplace_back(2.0 * theta.back(), -theta.back());
  }
  const SampledSignal s = SampledSignal::from_theta_samples(theta, values);
  CHECK(s.is_sampled());
  for (double xi : {-1.7, -0.3, 0.0, 1.2}) {
    const double t = std::acos(xi * std::sqrt(0.25));
    CHECK(std::abs(s(xi, q) - Complex(2.0 * t, -t)) < 1e-13);
  }
  CHECK_FALSE(SampledSignal::from_function([](double) { return Complex(1.0); }).is_sampled());

  CHECK_THROWS_AS(SampledSignal::from_theta_samples({}, {}), DomainError);
  CHECK_THROWS_AS(SampledSignal::from_theta_samples({0.1, 0.2}, {1.0}), DomainError);
  CHECK_THROWS_AS(SampledSignal::from_theta_samples({0.2, 0.1}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(SampledSignal::from_theta_samples({0.1, 3.5}, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(SampledSignal::from_theta_samples({0.1, 0.2}, {1.0, std::nan("")}),
                  DomainError);
  CHECK_THROWS_AS(SampledSignal::from_function(nullptr), DomainError);

  SUBCASE("sampled basis function transforms close to h_j") {
    std::vector<double> th;
    std::vector<Complex> v;
    const double scale = std::sqrt(2.0 / (1.0 - q.value()));
    for (int i = 0; i < 2000; ++i) {
      th.push_back(std::numbers::pi * (i + 0.5) / 2000.0);
      v.emplace_back(phi_q(1, scale * std::cos(th.back()), q));
    }
    const SampledSignal sampled = SampledSignal::from_theta_samples(th, v);
    const Complex z(0.2, 0.1);
    CHECK(std::abs(bargmann_q(sampled, 0, q, z).value - coeff_h(1, 0, z, q)) < 1e-5);
  }
}
