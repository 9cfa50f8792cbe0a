#include "graphentropy/closed_forms.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "fft.hpp"
#include "graphentropy/diffusion.hpp"
#include "graphentropy/entropy.hpp"
#include "graphentropy/error.hpp"
#include "graphentropy/spectral.hpp"

namespace graphentropy {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error(ErrorCode::InvalidParameter, "time must be finite and >= 0");
}

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

Eigen::VectorXd finish_circulant_row(const std::vector<std::complex<double>>& sums, std::size_t n) {
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd row(1, N);
  for (Eigen::Index r = 0; r < N; ++r) {
    const std::complex<double> h = sums[static_cast<std::size_t>(r)] / static_cast<double>(n);
    if (std::abs(h.imag()) > 1e-10) {
      throw Error(ErrorCode::NumericFailure, "circulant row imaginary residual " + std::to_string(h.imag()));
    }
    row(0, r) = h.real();
  }
  clip_stochastic_rows(row);
  return row.row(0).transpose();
}

std::vector<double> circulant_weights(std::size_t n, const StepSet& steps, double t) {
  require_time(t);
  const CirculantSpectrum spec = spectrum_circulant(n, steps);
  std::vector<double> w(n);
  for (std::size_t k = 0; k < n; ++k) w[k] = std::exp(-t * spec.by_frequency(static_cast<Eigen::Index>(k)));
  return w;
}

}  // namespace

std::pair<double, double> complete_kernel_entries(std::size_t n, double t) {
  if (n < 1) throw Error(ErrorCode::InvalidSize, "complete graph needs n >= 1");
  require_time(t);
  const double nd = static_cast<double>(n);
  const double decay = std::exp(-nd * t);
  const double spread = -std::expm1(-nd * t);
  return {1.0 / nd + (nd - 1.0) / nd * decay, spread / nd};
}

double complete_heat_entropy(std::size_t n, double t) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "complete-graph entropy needs n >= 2");
  require_time(t);
  const double nd = static_cast<double>(n);
  const double decay = std::exp(-nd * t);
  if (decay < 1e-300) return std::log(nd);
  const double spread = -std::expm1(-nd * t);  // 1 - e^{-nt}
  // a = (1 + (n-1)e)/n, b = (1-e)/n and a + (n-1)b = 1, so
  // H = ln n - a log1p((n-1)e) - (n-1)/n (1-e) ln(1-e).
  const double diag = (1.0 + (nd - 1.0) * decay) / nd;
  return std::log(nd) - diag * std::log1p((nd - 1.0) * decay) - (nd - 1.0) / nd * xlogx(spread);
}

double complete_rw_entropy(std::size_t n, double t) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "complete-graph entropy needs n >= 2");
  require_time(t);
  return complete_heat_entropy(n, t / static_cast<double>(n - 1));
}

Eigen::VectorXd circulant_kernel_row_direct(std::size_t n, const StepSet& steps, double t) {
  const std::vector<double> w = circulant_weights(n, steps, t);
  std::vector<std::complex<double>> sums(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::complex<double> acc{};
    for (std::size_t k = 0; k < n; ++k) {
      const auto kr = static_cast<double>((k * r) % n);
      acc += w[k] * std::polar(1.0, -2.0 * std::numbers::pi * kr / static_cast<double>(n));
    }
    sums[r] = acc;
  }
  return finish_circulant_row(sums, n);
}

Eigen::VectorXd circulant_kernel_row_fft(std::size_t n, const StepSet& steps, double t) {
  const std::vector<double> w = circulant_weights(n, steps, t);
  std::vector<std::complex<double>> x(w.begin(), w.end());
  return finish_circulant_row(detail::dft(x), n);
}

Eigen::VectorXd circulant_kernel_row(std::size_t n, const StepSet& steps, double t) {
  return n > kCirculantFftThreshold ? circulant_kernel_row_fft(n, steps, t) : circulant_kernel_row_direct(n, steps, t);
}

Eigen::MatrixXd circulant_kernel(std::size_t n, const StepSet& steps, double t) {
  const Eigen::VectorXd h = circulant_kernel_row(n, steps, t);
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd T(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) T(i, j) = h(((j - i) % N + N) % N);
  return T;
}

double circulant_entropy(std::size_t n, const StepSet& steps, double t) {
  return shannon_entropy(circulant_kernel_row(n, steps, t));
}

MeanFieldER::MeanFieldER(std::size_t n_, double p_) : n(n_), p(p_) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "mean-field ER needs n >= 2");
  if (!(p > 0.0)) throw Error(ErrorCode::InvalidProbability, "mean-field ER needs p > 0");
  if (!(p <= 1.0)) throw Error(ErrorCode::InvalidProbability, "mean-field ER needs p <= 1");
}

std::pair<double, double> MeanFieldER::entries(double t) const {
  require_time(t);
  const double nd = static_cast<double>(n);
  const double decay = std::exp(-p * nd * t);
  const double b = -std::expm1(-p * nd * t) / nd;
  return {decay + b, b};
}

double MeanFieldER::entropy(double t) const {
  const auto [a, b] = entries(t);
  return -(xlogx(a) + static_cast<double>(n - 1) * xlogx(b));
}

double meanfield_er_entropy(std::size_t n, double p, double t) { return MeanFieldER(n, p).entropy(t); }

double lambert_w0(double x) {
  constexpr double kBranch = -1.0 / std::numbers::e;
  if (!std::isfinite(x) || x < kBranch) throw Error(ErrorCode::InvalidParameter, "lambert_w0 needs x >= -1/e");
  if (x == 0.0) return 0.0;
  double w;
  const double branch_dist = std::numbers::e * x + 1.0;
  if (branch_dist <= 0.0) return -1.0;
  if (x < -0.25) {
    // Series around the branch point in p = sqrt(2(e x + 1)).
    const double p = std::sqrt(2.0 * branch_dist);
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 3.0) {
    w = std::log1p(x);
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
  }
  return w;
}

double giant_component_fraction(double c) {
  if (!(c > 1.0)) throw Error(ErrorCode::Subcritical, "mean degree " + std::to_string(c) + " <= 1");
  if (!std::isfinite(c)) return 1.0;
  return 1.0 + lambert_w0(-c * std::exp(-c)) / c;
}

}  // namespace graphentropy
