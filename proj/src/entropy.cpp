#include "graphentropy/entropy.hpp"

#include <algorithm>
#include <limits>

#include "graphentropy/error.hpp"

namespace graphentropy {

double shannon_entropy(const Distribution& p) { return shannon_entropy(p.probs()); }

double kl_divergence(const Distribution& p, const Distribution& q) { return kl_divergence(p.probs(), q.probs()); }

Eigen::VectorXd row_entropies(const Eigen::MatrixXd& T) {
  Eigen::VectorXd h(T.rows());
  for (Eigen::Index i = 0; i < T.rows(); ++i) h(i) = shannon_entropy(T.row(i).transpose());
  return h;
}

double conditional_entropy(const Eigen::MatrixXd& T, const Distribution& p0) {
  if (T.rows() != p0.size()) throw Error(ErrorCode::DimensionMismatch, "transition matrix and distribution sizes differ");
  double h = 0.0;
  for (Eigen::Index i = 0; i < T.rows(); ++i) {
    if (p0[i] > 0.0) h += p0[i] * shannon_entropy(T.row(i).transpose());
  }
  return h;
}

double conditional_entropy(const HeatKernel& k, const Distribution& p0, double t) {
  if (p0.size() != k.size()) throw Error(ErrorCode::DimensionMismatch, "distribution size");
  return conditional_entropy(kernel_at(k, t), p0);
}

std::string InitialCondition::to_string() const {
  switch (kind) {
    case Kind::Uniform: return "uniform";
    case Kind::Delta: return "delta:" + std::to_string(node);
    case Kind::Custom: return "custom";
  }
  return "custom";
}

double EntropyCurve::worst_step() const {
  double worst = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < values.size(); ++i) worst = std::min(worst, values[i] - values[i - 1]);
  return worst;
}

double EntropyCurve::max_value() const {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

EntropyCurve entropy_curve(const HeatKernel& k, const Distribution& p0, const TimeGrid& grid, InitialCondition initial,
                           GraphMeta meta) {
  if (p0.size() != k.size()) throw Error(ErrorCode::DimensionMismatch, "distribution size");
  EntropyCurve curve;
  curve.times = grid.times();
  curve.values.reserve(grid.size());
  for (const double t : grid.times()) curve.values.push_back(conditional_entropy(k, p0, t));
  curve.dynamic = k.kind();
  curve.initial = initial;
  if (meta.n == 0) meta.n = static_cast<std::size_t>(k.size());
  curve.graph = std::move(meta);
  return curve;
}

double asymptotic_value_heat(const Graph& g, const Distribution& p0) {
  if (p0.size() != static_cast<Eigen::Index>(g.size())) throw Error(ErrorCode::DimensionMismatch, "distribution size");
  require_dense_diffusion_ready(g, std::numeric_limits<std::size_t>::max());
  double h = 0.0;
  for (const auto& part : connected_components(g)) {
    double mass = 0.0;
    for (const Node v : part) mass += p0[static_cast<Eigen::Index>(v)];
    h += mass * std::log(static_cast<double>(part.size()));
  }
  return h;
}

double asymptotic_value_rw(const Graph& g) {
  require_dense_diffusion_ready(g, std::numeric_limits<std::size_t>::max());
  if (!is_connected(g)) throw Error(ErrorCode::DisconnectedGraph, "random-walk limit of " + g.label());
  if (g.size() == 1) return 0.0;
  const double two_m = 2.0 * static_cast<double>(g.edge_count());
  double weighted = 0.0;
  for (const auto d : g.degrees()) {
    const double dd = static_cast<double>(d);
    weighted += dd * std::log(dd);
  }
  return std::log(two_m) - weighted / two_m;
}

EntropyGapReport pinsker_report(const HeatKernel& k, const Distribution& p0, double t) {
  if (k.kind() != LaplacianKind::Combinatorial) throw Error(ErrorCode::InvalidParameter, "Pinsker report needs a heat kernel");
  if (p0.size() != k.size()) throw Error(ErrorCode::DimensionMismatch, "distribution size");
  const Eigen::MatrixXd T = kernel_at(k, t);
  const double n = static_cast<double>(T.rows());
  EntropyGapReport r;
  r.t = t;
  r.gap = std::log(n) - conditional_entropy(T, p0);
  for (Eigen::Index i = 0; i < T.rows(); ++i) {
    const double l1 = (T.row(i).array() - 1.0 / n).abs().sum();
    r.pinsker_bound += 0.5 * p0[i] * l1 * l1;
  }
  r.slack = r.gap - r.pinsker_bound;
  return r;
}

namespace {

void check_counterexample_args(double t, std::size_t n) {
  if (!(t > 0.0)) throw Error(ErrorCode::InvalidParameter, "counterexample needs t > 0");
  if (n < 2) throw Error(ErrorCode::InvalidSize, "counterexample needs n >= 2");
}

}  // namespace

double counterexample_entropy(double t, std::size_t n) {
  check_counterexample_args(t, n);
  const double stay = std::exp(-t);
  const double leave = -std::expm1(-t);
  // (e^{-t} - 1) ln(1 - e^{-t}) = -leave * ln(leave); 0 ln 0 = 0 once leave underflows.
  const double jump_term = leave > 0.0 ? -leave * std::log(leave) : 0.0;
  return jump_term + t * stay;
}

Eigen::MatrixXd counterexample_transition(std::size_t n, double t) {
  check_counterexample_args(t, n);
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(N, N);
  T(0, 0) = 1.0;
  for (Eigen::Index i = 1; i < N; ++i) {
    T(i, 0) = -std::expm1(-t);
    T(i, i) = std::exp(-t);
  }
  return T;
}

Eigen::MatrixXd counterexample_generator(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "counterexample needs n >= 2");
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd Q = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 1; i < N; ++i) {
    Q(i, 0) = 1.0;
    Q(i, i) = -1.0;
  }
  return Q;
}

Distribution counterexample_initial(std::size_t n) {
  if (n < 2) throw Error(ErrorCode::InvalidSize, "counterexample needs n >= 2");
  Eigen::VectorXd p = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n - 1));
  p(0) = 0.0;
  return Distribution(std::move(p));
}

double counterexample_entropy_from_matrix(double t, std::size_t n) {
  return conditional_entropy(counterexample_transition(n, t), counterexample_initial(n));
}

}  // namespace graphentropy
