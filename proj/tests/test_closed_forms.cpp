#include "doctest.h"

#include <cmath>
#include <numbers>

#include "graphentropy/closed_forms.hpp"
#include "graphentropy/entropy.hpp"

using namespace graphentropy;

namespace {

// Root of S = 1 - exp(-c S) on (0, 1) by bisection.
double bisection_giant(double c) {
  double lo = 1e-12;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid - (1.0 - std::exp(-c * mid)) < 0.0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double closed_form_entropy_from_entries(std::size_t n, double a, double b) {
  const double nb = static_cast<double>(n - 1);
  return -a * std::log(a) - (b > 0 ? nb * b * std::log(b) : 0.0);
}

}  // namespace

TEST_CASE("complete graph kernel and entropy") {
  const auto [a, b] = complete_kernel_entries(5, 0.3);
  CHECK(a == doctest::Approx(0.2 + 0.8 * std::exp(-1.5)));
  CHECK(b == doctest::Approx(0.2 - 0.2 * std::exp(-1.5)));
  CHECK(complete_heat_entropy(5, 0.0) == 0.0);
  CHECK(complete_heat_entropy(5, 1e4) == std::log(5.0));
  CHECK(std::abs(complete_heat_entropy(7, 1e-14)) < 1e-11);
  for (std::size_t n : {2u, 3u, 10u, 50u}) {
    for (double t : {1e-6, 1e-3, 0.05, 0.4, 3.0}) {
      const auto [d, o] = complete_kernel_entries(n, t);
      CHECK(complete_heat_entropy(n, t) == doctest::Approx(closed_form_entropy_from_entries(n, d, o)).epsilon(1e-12));
    }
  }
  const HeatKernel k3 = HeatKernel::heat(make_complete(3));
  CHECK(std::abs(complete_heat_entropy(3, 0.5) - conditional_entropy(k3, Distribution::delta(3, 1), 0.5)) < 1e-10);
  CHECK_THROWS_AS(complete_heat_entropy(0, 1.0), Error);
  CHECK_THROWS_AS(complete_heat_entropy(4, -1.0), Error);

  CHECK(complete_rw_entropy(5, 0.0) == 0.0);
  CHECK(complete_rw_entropy(5, 2.0) == complete_heat_entropy(5, 0.5));
  CHECK(complete_rw_entropy(6, 1e5) == doctest::Approx(std::log(6.0)));
  const HeatKernel rw = HeatKernel::random_walk(make_complete(6));
  for (double t : {0.1, 1.0, 4.0})
    CHECK(std::abs(complete_rw_entropy(6, t) - conditional_entropy(rw, Distribution::uniform(6), t)) < 1e-10);
}

TEST_CASE("circulant kernel rows") {
  const StepSet cyc({1}, 9);
  const Eigen::VectorXd h0 = circulant_kernel_row(9, cyc, 0.0);
  CHECK(h0(0) == doctest::Approx(1.0));
  CHECK(h0.tail(8).cwiseAbs().maxCoeff() < 1e-14);

  // Cycle row from the explicit cosine sum.
  const double t = 0.8;
  const Eigen::VectorXd row = circulant_kernel_row(9, cyc, t);
  for (int r = 0; r < 9; ++r) {
    double sum = 0.0;
    for (int k = 0; k < 9; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / 9.0;
      sum += std::exp(2.0 * t * std::cos(theta)) * std::cos(theta * r);
    }
    CHECK(row(r) == doctest::Approx(std::exp(-2.0 * t) * sum / 9.0).epsilon(1e-13));
  }

  const StepSet s({1, 2, 3}, 20);
  const Eigen::MatrixXd L = laplacian(make_circulant(20, s), LaplacianKind::Combinatorial);
  const Eigen::MatrixXd E = expm_oracle(-L);
  CHECK((circulant_kernel_row(20, s, 1.0).transpose() - E.row(0)).cwiseAbs().maxCoeff() < 1e-9);
  CHECK((circulant_kernel(20, s, 1.0) - E).cwiseAbs().maxCoeff() < 1e-9);

  for (std::size_t n : {6u, 16u, 31u, 64u, 100u}) {
    const StepSet steps({1, n / 3, n / 2}, n);
    for (double tt : {0.01, 0.5, 7.0}) {
      const Eigen::VectorXd direct = circulant_kernel_row_direct(n, steps, tt);
      const Eigen::VectorXd fft = circulant_kernel_row_fft(n, steps, tt);
      CHECK((direct - fft).cwiseAbs().maxCoeff() < 1e-12);
      CHECK(std::abs(direct.sum() - 1.0) < 1e-10);
      CHECK(direct.minCoeff() >= 0.0);
    }
  }
  const StepSet big({1, 2, 3}, 600);
  CHECK((circulant_kernel_row(600, big, 2.0) - circulant_kernel_row_direct(600, big, 2.0)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("circulant entropy") {
  const StepSet s1({1}, 20);
  const StepSet s3({1, 2, 3}, 20);
  CHECK(circulant_entropy(20, s3, 0.0) == 0.0);
  CHECK(circulant_entropy(20, s3, 500.0) == doctest::Approx(std::log(20.0)));
  CHECK(circulant_entropy(20, s3, 0.5) > circulant_entropy(20, s1, 0.5));
  const HeatKernel k = HeatKernel::heat(make_circulant(20, s3));
  CounterRng rng(RngSeed{1});
  for (double t : {0.02, 0.3, 2.0}) {
    Eigen::VectorXd w(20);
    for (int i = 0; i < 20; ++i) w(i) = rng.uniform01();
    CHECK(std::abs(circulant_entropy(20, s3, t) - conditional_entropy(k, Distribution::from_weights(w), t)) < 1e-9);
  }
}

TEST_CASE("mean-field erdos-renyi") {
  const MeanFieldER mf(30, 0.2);
  const auto [a0, b0] = mf.entries(0.0);
  CHECK(a0 == 1.0);
  CHECK(b0 == 0.0);
  CHECK(mf.entropy(0.0) == 0.0);
  CHECK(mf.entropy(1e4) == doctest::Approx(std::log(30.0)));
  const auto [a, b] = mf.entries(0.4);
  CHECK(a + 29.0 * b == doctest::Approx(1.0));
  for (double t : {1e-4, 0.01, 0.2, 1.0, 5.0}) CHECK(meanfield_er_entropy(12, 1.0, t) == doctest::Approx(complete_heat_entropy(12, t)).epsilon(1e-12));
  CHECK(meanfield_er_entropy(12, 0.5, 0.2) == doctest::Approx(complete_heat_entropy(12, 0.1)).epsilon(1e-12));
  CHECK_THROWS_AS(MeanFieldER(10, 1.5), Error);
  CHECK_THROWS_AS(MeanFieldER(0, 0.5), Error);
}

TEST_CASE("lambert w and giant component") {
  CHECK(lambert_w0(0.0) == 0.0);
  CHECK(lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(lambert_w0(-1.0 / std::exp(1.0)) == doctest::Approx(-1.0).epsilon(1e-7));
  for (double x : {-0.3, -0.1, 0.5, 2.0, 100.0}) {
    const double w = lambert_w0(x);
    CHECK(w * std::exp(w) == doctest::Approx(x).epsilon(1e-13));
  }
  CHECK_THROWS_AS(lambert_w0(-0.5), Error);

  CHECK(giant_component_fraction(2.0) == doctest::Approx(0.79681).epsilon(1e-5));
  for (double c : {1.1, 1.5, 2.0, 5.0, 10.0}) {
    const double s = giant_component_fraction(c);
    CHECK(std::abs(s - (1.0 - std::exp(-c * s))) <= 1e-10);
    CHECK(std::abs(s - bisection_giant(c)) <= 1e-9);
  }
  CHECK(giant_component_fraction(50.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(giant_component_fraction(1.0 + 1e-6) < 1e-5);
  CHECK_THROWS_AS(giant_component_fraction(1.0), Error);
  CHECK_THROWS_AS(giant_component_fraction(0.5), Error);
}
