#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "graphentropy/graph.hpp"
#include "graphentropy/spectral.hpp"

namespace graphentropy {

/// Probability vector over nodes: non-negative, summing to 1 within 1e-12.
class Distribution {
 public:
  static constexpr double kSumTolerance = 1e-12;

  explicit Distribution(Eigen::VectorXd probs);

  static Distribution uniform(std::size_t n);
  static Distribution delta(std::size_t n, Node i);
  /// Normalizes non-negative weights first.
  static Distribution from_weights(const Eigen::VectorXd& weights);

  const Eigen::VectorXd& probs() const noexcept { return probs_; }
  Eigen::Index size() const noexcept { return probs_.size(); }
  double operator[](Eigen::Index i) const { return probs_(i); }

 private:
  Eigen::VectorXd probs_;
};

/// Transition operator T(t) = exp(-t L) at unit diffusion rate.
///
/// Heat kernels carry a symmetric spectral decomposition and evaluate
/// U diag(exp(-lambda t)) U^T. Random-walk kernels carry the generator
/// -L_RW and evaluate it through `expm_oracle`.
class HeatKernel {
 public:
  static HeatKernel heat(const Graph& g, std::size_t dense_cap = kDefaultDenseCap);
  static HeatKernel random_walk(const Graph& g, std::size_t dense_cap = kDefaultDenseCap);
  /// Heat kernel from a precomputed (possibly exact) decomposition.
  static HeatKernel from_spectrum(SpectralDecomposition dec);

  LaplacianKind kind() const noexcept { return kind_; }
  Eigen::Index size() const noexcept;
  /// Always 1; use `rescaled_time` for other rates.
  double rate() const noexcept { return 1.0; }

  /// Decomposition for heat kernels, nullptr for random-walk kernels.
  const SpectralDecomposition* spectrum() const noexcept { return std::get_if<SpectralDecomposition>(&state_); }
  /// Generator -L_RW for random-walk kernels, nullptr otherwise.
  const Eigen::MatrixXd* generator() const noexcept { return std::get_if<Eigen::MatrixXd>(&state_); }

 private:
  HeatKernel(std::variant<SpectralDecomposition, Eigen::MatrixXd> state, LaplacianKind kind)
      : state_(std::move(state)), kind_(kind) {}

  std::variant<SpectralDecomposition, Eigen::MatrixXd> state_;
  LaplacianKind kind_;
};

/// Time at unit rate equivalent to time `t` at diffusion rate `rate`.
constexpr double rescaled_time(double t, double rate) noexcept { return rate * t; }

/// Entries in [-kClipTolerance, 0) are treated as roundoff and clipped.
inline constexpr double kClipTolerance = 1e-10;

/// Clips roundoff negatives to zero and renormalizes each row. Throws
/// NumericFailure on entries below -kClipTolerance or non-finite values.
void clip_stochastic_rows(Eigen::MatrixXd& T);

/// Row-stochastic T(t). Throws InvalidParameter for t < 0. Random-walk rows
/// are divided by their sums after exponentiation, removing the drift that
/// repeated squaring leaves in the row sums.
Eigen::MatrixXd kernel_at(const HeatKernel& k, double t);

/// T(t) minus its limit, summed over the non-zero modes only:
/// sum_{lambda_k > 0} exp(-lambda_k t) u_k u_k^T. Keeps relative precision
/// long after T(t) itself is indistinguishable from the limit. Heat kernels only.
Eigen::MatrixXd kernel_deviation(const HeatKernel& k, double t);

/// exp(M) by scaling and squaring with a degree-18 Taylor polynomial on
/// M / 2^s, where s makes the 1-norm at most 1/2. Throws NumericFailure on
/// overflow.
Eigen::MatrixXd expm_oracle(const Eigen::MatrixXd& M);

/// p(t)^T = p(0)^T T(t).
Distribution propagate(const HeatKernel& k, const Distribution& p0, double t);

struct MixingEstimate {
  double gap = 0.0;
  /// p0^T P_2, with P_2 the projector on the lambda_2 eigenspace.
  Eigen::RowVectorXd leading_term;
  /// max |leading_term|.
  double coefficient = 0.0;
  /// ln(coefficient / eps) / gap, floored at 0.
  double t_eps = 0.0;
};

/// Mixing-time estimate from the slowest spectral mode. Heat kernels only.
/// Throws NoMixing when the gap is below 1e-10 (disconnected graph).
MixingEstimate mixing_estimate(const HeatKernel& k, const Distribution& p0, double eps);

/// Sampling times for entropy curves.
class TimeGrid {
 public:
  static TimeGrid logarithmic(double t_min, double t_max, std::size_t points);
  static TimeGrid linear(double t_min, double t_max, std::size_t points);
  /// `decades` decades ending at t_max with `per_decade` points each (plus the endpoint).
  static TimeGrid decades(double t_max, std::size_t decades, std::size_t per_decade);
  static TimeGrid from_times(std::vector<double> times);

  const std::vector<double>& times() const noexcept { return times_; }
  std::size_t size() const noexcept { return times_.size(); }
  bool is_logarithmic() const noexcept { return logarithmic_; }

  /// Indices of grid points within the middle decade (log10 centre +- 1/2).
  std::vector<std::size_t> middle_decade() const;

 private:
  TimeGrid(std::vector<double> times, bool logarithmic);
  std::vector<double> times_;
  bool logarithmic_ = false;
};

}  // namespace graphentropy
