#include <array>
#include <cmath>
#include <random>

#include "oracles/oracle_values.hpp"
#include "qbargmann/coherent.hpp"
#include "unit/support.hpp"

using namespace qbargmann;
using doctest::Approx;

TEST_CASE("labels live in C_{q,m}") {
  const DeformationParameter half(0.5);
  CHECK_NOTHROW(CoherentStateLabel(half, 0, {1.0, 0.9}));
  CHECK_THROWS_AS(CoherentStateLabel(half, 0, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(CoherentStateLabel(half, 1, 1.0), DomainError);
  CHECK_THROWS_AS(CoherentStateLabel(half, -1, 0.0), DomainError);
  CHECK(CoherentStateLabel::admissible(half, 2, 0.49));
  CHECK_FALSE(CoherentStateLabel::admissible(half, 2, 0.71));
  const CoherentStateLabel label(half, 1, {0.3, -0.1});
  CHECK(label.m() == 1);
  CHECK(label.z() == Complex(0.3, -0.1));
}

TEST_CASE("coefficients h_j^{m,q}") {
  const DeformationParameter half(0.5);
  CHECK(coeff_h(0, 0, {0.7, -2.0}, half) == Complex(1.0));
  CHECK(support::rel(coeff_h(2, 0, {1.0, 1.0}, half), Complex(0.0, 2.0 / std::sqrt(1.5))) <
        1e-14);
  CHECK(support::rel(coeff_h(2, 1, {0.3, 0.2}, half), oracle::kCoeff21) < 1e-12);
  CHECK(support::rel(coeff_h(1, 3, {0.2, -0.1}, DeformationParameter(0.8)), oracle::kCoeff13) <
        1e-12);
  CHECK(std::abs(coeff_h(1, 2, 0.0, half)) == 0.0);
  CHECK(std::abs(coeff_h(2, 2, 0.0, half)) > 0.0);
  CHECK_THROWS_AS(coeff_h(-1, 0, 0.1, half), DomainError);

  SUBCASE("m = 0 gives normalized monomials") {
    for (double qv : {0.3, 0.5, 0.8}) {
      const DeformationParameter q(qv);
      const Complex z(0.6, -0.4);
      for (int j = 0; j <= 10; ++j) {
        const Complex expected = std::pow(z, j) / std::sqrt(qbracket_factorial(j, q));
        CHECK(std::abs(coeff_h(j, 0, z, q) - expected) <= 1e-13 * std::abs(expected));
      }
    }
  }
}

TEST_CASE("normalization N_{m,q}") {
  const DeformationParameter half(0.5);
  CHECK(normalization(0, 0.0, half) == Approx(1.0));
  CHECK(normalization(0, 1.0, half) == Approx(oracle::kEqHalfAtOne.real()).epsilon(1e-12));
  CHECK(normalization(2, 0.4, half) == Approx(oracle::kNormalization2.real()).epsilon(1e-12));
  CHECK_THROWS_AS(normalization(1, 1.0, half), DomainError);
  CHECK_THROWS_AS(normalization(0, -0.1, half), DomainError);

  SUBCASE("equals the coefficient series") {
    for (double qv : {0.3, 0.5, 0.8}) {
      const DeformationParameter q(qv);
      for (int m = 0; m <= 3; ++m) {
        const double x = 0.6 * q.pow(m) / (1.0 - qv);
        const Complex z = std::polar(std::sqrt(x), 0.7);
        double sum = 0.0;
        for (int j = 0; j < kMaxSeriesTerms; ++j) sum += std::norm(coeff_h(j, m, z, q));
        CHECK(sum == Approx(normalization(m, x, q)).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("wavefunctions") {
  const DeformationParameter half(0.5);

  SUBCASE("vacuum") {
    for (double xi : {-1.2, 0.0, 0.9}) {
      const double expected = std::sqrt(std::sqrt(2.0) * omega(std::sqrt(2.0) * xi, half));
      const CoherentStateLabel vacuum(half, 0, 0.0);
      CHECK(wavefunction_series(xi, vacuum).value.real() == Approx(expected).epsilon(1e-14));
      CHECK(wavefunction_closed(xi, vacuum).real() == Approx(expected).epsilon(1e-14));
    }
  }

  SUBCASE("series against closed form") {
    struct Case {
      int m;
      Complex z;
      double q;
      double xi;
      double tol;
    };
    const std::array<Case, 4> cases = {Case{0, 0.5, 0.5, 0.3, 1e-10},
                                       Case{0, {0.4, -0.7}, 0.3, -0.8, 1e-10},
                                       Case{1, 0.3, 0.5, 0.2, 1e-6},
                                       Case{2, {0.0, 0.2}, 0.5, 0.0, 1e-6}};
    for (const Case& c : cases) {
      const CoherentStateLabel label(DeformationParameter(c.q), c.m, c.z);
      const KernelValue series = wavefunction_series(c.xi, label);
      const Complex closed = wavefunction_closed(c.xi, label);
      CHECK(std::abs(series.value - closed) < c.tol);
      CHECK(series.report.terms > 0);
    }
  }

  SUBCASE("z is real: conjugation conventions coincide") {
    const CoherentStateLabel label(half, 0, 0.8);
    const double xi = 0.45;
    const Complex closed = wavefunction_closed(xi, label);
    CHECK(std::abs(closed.imag()) < 1e-15);
  }

  CHECK_THROWS_AS(wavefunction_closed(2.5, CoherentStateLabel(half, 0, 0.1)), DomainError);
}

TEST_CASE("kernel bracket equals sum_j h_j phi_j") {
  const DeformationParameter half(0.5);
  const KernelValue series = kernel_series(0.2, 2, {0.1, 0.15}, half);
  CHECK(support::rel(series.value, oracle::kKernelSeries2) < 1e-12);
  CHECK(support::rel(kernel_closed_bracket(0.2, 2, {0.1, 0.15}, half), oracle::kKernelSeries2) <
        1e-12);

  for (double qv : {0.3, 0.5, 0.8}) {
    const DeformationParameter q(qv);
    for (int m = 0; m <= 3; ++m) {
      const Complex z = std::polar(0.5 * std::sqrt(q.pow(m) / (1.0 - qv)), 2.1);
      for (double xi : {-0.7, 0.0, 1.1}) {
        const Complex s = kernel_series(xi, m, z, q).value;
        const Complex c = kernel_closed_bracket(xi, m, z, q);
        CHECK(std::abs(s - c) <= 1e-10 * std::max(1.0, std::abs(s)));
      }
    }
  }
}

TEST_CASE("overlap kernel") {
  const DeformationParameter half(0.5);

  SUBCASE("m = 0 closed form is e_q(w conj z)") {
    for (double qv : {0.3, 0.5, 0.8}) {
      const DeformationParameter q(qv);
      const Complex z(0.5, 0.3);
      const Complex w(-0.2, 0.6);
      const Complex expected = eq_exp(w * std::conj(z), q);
      CHECK(std::abs(overlap_kernel_closed(z, w, 0, q).value - expected) < 1e-8);
      CHECK(std::abs(overlap_kernel_series(z, w, 0, q).value - expected) < 1e-8);
    }
  }

  SUBCASE("diagonal reproduces N_{m,q}") {
    for (double qv : {0.3, 0.5, 0.8}) {
      const DeformationParameter q(qv);
      for (int m = 0; m <= 3; ++m) {
        for (double frac : {0.1, 0.5, 0.8}) {
          const double x = frac * q.pow(m) / (1.0 - qv);
          const Complex z = std::polar(std::sqrt(x), -0.4);
          const double n = normalization(m, x, q);
          CHECK(overlap_kernel_series(z, z, m, q).value.real() == Approx(n).epsilon(1e-8));
        }
      }
    }
    const Complex z = std::polar(std::sqrt(0.5), 0.3);
    CHECK(overlap_kernel_series(z, z, 1, half).value.real() ==
          Approx(normalization(1, 0.5, half)).epsilon(1e-8));
  }

  SUBCASE("series oracle for m = 1") {
    const KernelValue k = overlap_kernel_series(0.3, {0.2, 0.1}, 1, half);
    CHECK(support::rel(k.value, oracle::kOverlapSeries1) < 1e-12);
  }

  SUBCASE("Hermitian symmetry") {
    for (int m = 0; m <= 2; ++m) {
      const Complex z(0.3, -0.2);
      const Complex w(-0.1, 0.4);
      const Complex kzw = overlap_kernel_series(z, w, m, half).value;
      const Complex kwz = overlap_kernel_series(w, z, m, half).value;
      CHECK(std::abs(kzw - std::conj(kwz)) < 1e-10);
    }
  }

  SUBCASE("3x3 kernel matrices are positive semidefinite") {
    std::mt19937_64 gen(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int m = 0; m <= 2; ++m) {
      const double radius = std::sqrt(half.pow(m) / (1.0 - half.value()));
      for (int trial = 0; trial < 10; ++trial) {
        std::array<Complex, 3> pts;
        for (Complex& p : pts) p = std::polar(0.95 * radius * unit(gen), 6.283 * unit(gen));
        std::array<std::array<Complex, 3>, 3> k;
        for (int a = 0; a < 3; ++a) {
          for (int b = 0; b < 3; ++b) k[a][b] = overlap_kernel_series(pts[a], pts[b], m, half).value;
        }
        for (int a = 0; a < 3; ++a) CHECK(k[a][a].real() >= -1e-8);
        for (int a = 0; a < 3; ++a) {
          for (int b = a + 1; b < 3; ++b) {
            CHECK((k[a][a] * k[b][b] - k[a][b] * k[b][a]).real() >= -1e-8);
          }
        }
        const Complex det = k[0][0] * (k[1][1] * k[2][2] - k[1][2] * k[2][1]) -
                            k[0][1] * (k[1][0] * k[2][2] - k[1][2] * k[2][0]) +
                            k[0][2] * (k[1][0] * k[2][1] - k[1][1] * k[2][0]);
        CHECK(det.real() >= -1e-8);
      }
    }
  }

  SUBCASE("closed form needs nonzero arguments") {
    CHECK_THROWS_AS(overlap_kernel_closed(0.0, 0.2, 1, half), RatioUndefined);
    CHECK_THROWS_AS(overlap_kernel_closed(0.2, 0.0, 1, half), RatioUndefined);
    CHECK_THROWS_AS(overlap_kernel_closed(1.0, 0.2, 1, half), DomainError);
    const OverlapKernel both = overlap_kernel(0.0, 0.2, 1, half);
    CHECK_FALSE(both.closed_form.has_value());
    CHECK_FALSE(both.closed_form_note.empty());
  }

  SUBCASE("m >= 1 closed form departs from the series off the diagonal") {
    const OverlapKernel both = overlap_kernel(0.3, 0.2, 1, half);
    REQUIRE(both.closed_form.has_value());
    CHECK(std::abs(both.closed_form->value - both.series.value) > 1e-3);
  }
}
