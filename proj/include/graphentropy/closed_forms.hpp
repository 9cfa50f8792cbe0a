#pragma once

#include <cstddef>
#include <utility>

#include <Eigen/Dense>

#include "graphentropy/graph.hpp"

namespace graphentropy {

/// Diagonal and off-diagonal entries of exp(-t L(K_n)):
/// 1/n + (n-1)/n e^{-nt} and 1/n - e^{-nt}/n.
std::pair<double, double> complete_kernel_entries(std::size_t n, double t);

/// Exact heat conditional entropy on K_n; the same for every initial
/// distribution. Returns ln n once e^{-nt} < 1e-300.
double complete_heat_entropy(std::size_t n, double t);

/// Random walk on K_n is heat diffusion slowed by 1/(n-1).
double complete_rw_entropy(std::size_t n, double t);

/// First row h_t(r) = (1/n) sum_k exp(-t lambda_{k+1}) omega^{kr} of the
/// circulant heat kernel. Direct DFT sum up to n = kCirculantFftThreshold,
/// FFT above.
Eigen::VectorXd circulant_kernel_row(std::size_t n, const StepSet& steps, double t);

/// Same row through the O(n^2) direct sum regardless of n.
Eigen::VectorXd circulant_kernel_row_direct(std::size_t n, const StepSet& steps, double t);

/// Same row through the FFT path regardless of n.
Eigen::VectorXd circulant_kernel_row_fft(std::size_t n, const StepSet& steps, double t);

inline constexpr std::size_t kCirculantFftThreshold = 512;

/// Full kernel: T_ij = h_t((j - i) mod n).
Eigen::MatrixXd circulant_kernel(std::size_t n, const StepSet& steps, double t);

/// -sum_r h_t(r) ln h_t(r); rows are shifts of each other, so this is the
/// conditional entropy for every initial distribution.
double circulant_entropy(std::size_t n, const StepSet& steps, double t);

/// Mean-field Erdos-Renyi kernel exp(-p(nI - J)t).
struct MeanFieldER {
  std::size_t n;
  double p;

  MeanFieldER(std::size_t n, double p);

  /// {a(t), b(t)}: diagonal e^{-pnt} + (1 - e^{-pnt})/n, off-diagonal (1 - e^{-pnt})/n.
  std::pair<double, double> entries(double t) const;
  double entropy(double t) const;
};

double meanfield_er_entropy(std::size_t n, double p, double t);

/// Principal branch W_0(x) for x >= -1/e by Halley iteration.
double lambert_w0(double x);

/// Giant-component fraction S = 1 + W_0(-c e^{-c}) / c of a supercritical ER
/// graph with mean degree c > 1. Throws Subcritical for c <= 1.
double giant_component_fraction(double c);

}  // namespace graphentropy
