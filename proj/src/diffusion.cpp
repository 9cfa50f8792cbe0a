#include "graphentropy/diffusion.hpp"

#include <algorithm>
#include <cmath>

#include "graphentropy/error.hpp"

namespace graphentropy {

Distribution::Distribution(Eigen::VectorXd probs) : probs_(std::move(probs)) {
  if (probs_.size() == 0) throw Error(ErrorCode::InvalidSize, "empty distribution");
  if (!probs_.allFinite()) throw Error(ErrorCode::NumericInput, "distribution has non-finite entries");
  if (probs_.minCoeff() < 0.0) throw Error(ErrorCode::InvalidProbability, "negative probability");
  const double sum = probs_.sum();
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw Error(ErrorCode::InvalidProbability, "probabilities sum to " + std::to_string(sum));
  }
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "empty distribution");
  return Distribution(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)));
}

Distribution Distribution::delta(std::size_t n, Node i) {
  if (i >= n) throw Error(ErrorCode::NodeOutOfRange, "delta at " + std::to_string(i) + " with n=" + std::to_string(n));
  Eigen::VectorXd p = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  p(static_cast<Eigen::Index>(i)) = 1.0;
  return Distribution(std::move(p));
}

Distribution Distribution::from_weights(const Eigen::VectorXd& weights) {
  if (weights.size() == 0) throw Error(ErrorCode::InvalidSize, "empty distribution");
  if (!weights.allFinite() || weights.minCoeff() < 0.0) {
    throw Error(ErrorCode::InvalidProbability, "weights must be finite and non-negative");
  }
  const double total = weights.sum();
  if (!(total > 0.0)) throw Error(ErrorCode::InvalidProbability, "weights sum to zero");
  return Distribution(weights / total);
}

HeatKernel HeatKernel::heat(const Graph& g, std::size_t dense_cap) {
  return HeatKernel(heat_spectrum(g, dense_cap), LaplacianKind::Combinatorial);
}

HeatKernel HeatKernel::random_walk(const Graph& g, std::size_t dense_cap) {
  Eigen::MatrixXd Q = -laplacian(g, LaplacianKind::RandomWalk, dense_cap);
  return HeatKernel(std::move(Q), LaplacianKind::RandomWalk);
}

HeatKernel HeatKernel::from_spectrum(SpectralDecomposition dec) {
  if (dec.kind != LaplacianKind::Combinatorial) {
    throw Error(ErrorCode::InvalidParameter, "spectral heat kernels need a combinatorial decomposition");
  }
  return HeatKernel(std::move(dec), LaplacianKind::Combinatorial);
}

Eigen::Index HeatKernel::size() const noexcept {
  if (const auto* dec = spectrum()) return dec->size();
  return generator()->rows();
}

void clip_stochastic_rows(Eigen::MatrixXd& T) {
  if (!T.allFinite()) throw Error(ErrorCode::NumericFailure, "kernel has non-finite entries");
  for (Eigen::Index i = 0; i < T.rows(); ++i) {
    auto row = T.row(i);
    const double lowest = row.minCoeff();
    if (lowest >= 0.0) continue;
    if (lowest < -kClipTolerance) {
      throw Error(ErrorCode::NumericFailure,
                  "kernel entry " + std::to_string(lowest) + " in row " + std::to_string(i));
    }
    row = row.cwiseMax(0.0);
    row /= row.sum();
  }
}

Eigen::MatrixXd kernel_at(const HeatKernel& k, double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "negative time " + std::to_string(t));
  const Eigen::Index n = k.size();
  Eigen::MatrixXd T;
  if (const auto* dec = k.spectrum()) {
    if (t == 0.0) return Eigen::MatrixXd::Identity(n, n);
    // T = W W^T with W = U diag(exp(-lambda t / 2)).
    const Eigen::VectorXd half = (-0.5 * t * dec->eigenvalues.array()).exp().matrix();
    const Eigen::MatrixXd W = dec->eigenvectors * half.asDiagonal();
    T = Eigen::MatrixXd::Zero(n, n);
    T.selfadjointView<Eigen::Lower>().rankUpdate(W);
    T.triangularView<Eigen::StrictlyUpper>() = T.transpose();
  } else {
    T = expm_oracle(t * *k.generator());
    T.array().colwise() /= T.rowwise().sum().array();
  }
  clip_stochastic_rows(T);
  return T;
}

Eigen::MatrixXd kernel_deviation(const HeatKernel& k, double t) {
  const auto* dec = k.spectrum();
  if (dec == nullptr) throw Error(ErrorCode::InvalidParameter, "kernel_deviation needs a heat kernel");
  if (!(t >= 0.0)) throw Error(ErrorCode::InvalidParameter, "negative time " + std::to_string(t));
  const double scale = std::max(1.0, dec->eigenvalues.cwiseAbs().maxCoeff());
  return dec->apply([&](double lambda) { return lambda > 1e-10 * scale ? std::exp(-lambda * t) : 0.0; });
}

Distribution propagate(const HeatKernel& k, const Distribution& p0, double t) {
  if (p0.size() != k.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                "distribution of size " + std::to_string(p0.size()) + " for kernel of size " + std::to_string(k.size()));
  }
  const Eigen::MatrixXd T = kernel_at(k, t);
  Eigen::VectorXd pt = T.transpose() * p0.probs();
  return Distribution(std::move(pt));
}

MixingEstimate mixing_estimate(const HeatKernel& k, const Distribution& p0, double eps) {
  const auto* dec = k.spectrum();
  if (dec == nullptr) throw Error(ErrorCode::InvalidParameter, "mixing estimate needs a heat kernel");
  if (p0.size() != k.size()) throw Error(ErrorCode::DimensionMismatch, "distribution size");
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidParameter, "eps must be positive");
  MixingEstimate est;
  est.gap = spectral_gap(*dec);
  if (!(est.gap > 1e-10)) throw Error(ErrorCode::NoMixing, "spectral gap " + std::to_string(est.gap));
  // Projector on the whole lambda_2 cluster, so degenerate gaps are basis-free.
  const auto clusters = eigenvalue_clusters(dec->eigenvalues);
  const auto it = std::find_if(clusters.begin(), clusters.end(), [](const auto& c) { return c.first <= 1 && 1 < c.second; });
  const Eigen::Index begin = std::max<Eigen::Index>(1, it->first);
  const Eigen::MatrixXd P = cluster_projector(*dec, begin, it->second);
  est.leading_term = p0.probs().transpose() * P;
  est.coefficient = est.leading_term.cwiseAbs().maxCoeff();
  est.t_eps = est.coefficient > eps ? std::log(est.coefficient / eps) / est.gap : 0.0;
  return est;
}

TimeGrid::TimeGrid(std::vector<double> times, bool logarithmic) : times_(std::move(times)), logarithmic_(logarithmic) {
  if (times_.empty()) throw Error(ErrorCode::InvalidParameter, "empty time grid");
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (!(times_[i] >= 0.0) || !std::isfinite(times_[i])) {
      throw Error(ErrorCode::InvalidParameter, "time grid entries must be finite and non-negative");
    }
    if (i > 0 && !(times_[i] > times_[i - 1])) throw Error(ErrorCode::InvalidParameter, "time grid must be ascending");
  }
}

TimeGrid TimeGrid::logarithmic(double t_min, double t_max, std::size_t points) {
  if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
    throw Error(ErrorCode::InvalidParameter, "log grid needs 0 < t_min < t_max and points >= 2");
  }
  std::vector<double> times(points);
  const double a = std::log10(t_min);
  const double b = std::log10(t_max);
  for (std::size_t i = 0; i < points; ++i) {
    times[i] = std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1));
  }
  times.front() = t_min;
  times.back() = t_max;
  return TimeGrid(std::move(times), true);
}

TimeGrid TimeGrid::linear(double t_min, double t_max, std::size_t points) {
  if (!(t_min >= 0.0) || !(t_max > t_min) || points < 2) {
    throw Error(ErrorCode::InvalidParameter, "linear grid needs 0 <= t_min < t_max and points >= 2");
  }
  std::vector<double> times(points);
  for (std::size_t i = 0; i < points; ++i) {
    times[i] = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  times.back() = t_max;
  return TimeGrid(std::move(times), false);
}

TimeGrid TimeGrid::decades(double t_max, std::size_t decades, std::size_t per_decade) {
  if (decades == 0 || per_decade == 0) throw Error(ErrorCode::InvalidParameter, "decades and per_decade must be positive");
  return logarithmic(t_max / std::pow(10.0, static_cast<double>(decades)), t_max, decades * per_decade + 1);
}

TimeGrid TimeGrid::from_times(std::vector<double> times) { return TimeGrid(std::move(times), false); }

std::vector<std::size_t> TimeGrid::middle_decade() const {
  std::vector<std::size_t> out;
  const auto first_positive = std::find_if(times_.begin(), times_.end(), [](double t) { return t > 0.0; });
  if (first_positive == times_.end()) return out;
  const double centre = 0.5 * (std::log10(*first_positive) + std::log10(times_.back()));
  for (std::size_t i = 0; i < times_.size(); ++i) {
    if (times_[i] > 0.0 && std::abs(std::log10(times_[i]) - centre) <= 0.5 + 1e-12) out.push_back(i);
  }
  return out;
}

}  // namespace graphentropy
