#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "graphentropy/diffusion.hpp"
#include "graphentropy/graph.hpp"
#include "graphentropy/spectral.hpp"

namespace graphentropy {

/// -sum p ln p over the entries of any Eigen vector expression, with 0 ln 0 = 0.
template <typename Derived>
typename Derived::Scalar shannon_entropy(const Eigen::MatrixBase<Derived>& p) {
  using Scalar = typename Derived::Scalar;
  Scalar h(0);
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    const Scalar x = p(i);
    if (x > Scalar(0)) h -= x * std::log(x);
  }
  return h;
}

/// Shannon entropy in nats.
double shannon_entropy(const Distribution& p);

/// sum p ln(p/q). Throws SupportViolation if p > 0 where q = 0.
double kl_divergence(const Distribution& p, const Distribution& q);

template <typename DerivedP, typename DerivedQ>
double kl_divergence(const Eigen::MatrixBase<DerivedP>& p, const Eigen::MatrixBase<DerivedQ>& q) {
  if (p.size() != q.size()) throw Error(ErrorCode::DimensionMismatch, "kl_divergence sizes differ");
  double d = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= 0.0) continue;
    if (q(i) <= 0.0) throw Error(ErrorCode::SupportViolation, "q vanishes at index " + std::to_string(i));
    d += p(i) * std::log(p(i) / q(i));
  }
  return d;
}

/// H_i = -sum_j T_ij ln T_ij for every row.
Eigen::VectorXd row_entropies(const Eigen::MatrixXd& T);

/// sum_i p0_i H_i for an explicit transition matrix.
double conditional_entropy(const Eigen::MatrixXd& T, const Distribution& p0);

/// H(X(t) | X(0)) for the kernel's dynamic.
double conditional_entropy(const HeatKernel& k, const Distribution& p0, double t);

struct InitialCondition {
  enum class Kind { Uniform, Delta, Custom };
  Kind kind = Kind::Uniform;
  Node node = 0;

  std::string to_string() const;
};

struct GraphMeta {
  std::size_t n = 0;
  std::size_t edges = 0;
  std::string family;

  static GraphMeta of(const Graph& g) { return {g.size(), g.edge_count(), g.label()}; }
};

struct EntropyCurve {
  std::vector<double> times;
  std::vector<double> values;
  LaplacianKind dynamic = LaplacianKind::Combinatorial;
  InitialCondition initial;
  GraphMeta graph;

  /// Smallest consecutive increment values[i+1] - values[i]; +inf for a
  /// single point.
  double worst_step() const;
  bool is_non_decreasing(double slack = 1e-9) const { return worst_step() >= -slack; }
  double max_value() const;
};

/// Evaluates conditional_entropy at every grid time.
EntropyCurve entropy_curve(const HeatKernel& k, const Distribution& p0, const TimeGrid& grid,
                           InitialCondition initial = {}, GraphMeta meta = {});

/// Limit of the heat conditional entropy: sum_k ln|V_k| * p0(V_k); ln n when connected.
double asymptotic_value_heat(const Graph& g, const Distribution& p0);

/// Limit of the random-walk conditional entropy on a connected graph:
/// ln(2M) - sum_j d_j ln d_j / (2M).
double asymptotic_value_rw(const Graph& g);

struct EntropyGapReport {
  double t = 0.0;
  double gap = 0.0;
  double pinsker_bound = 0.0;
  double slack = 0.0;
};

/// ln n - H(t) against sum_i p0_i / 2 * ||T_i - pi||_1^2, from one kernel evaluation.
EntropyGapReport pinsker_report(const HeatKernel& k, const Distribution& p0, double t);

// Non-heat chain whose conditional entropy rises and then falls back to 0:
// state 0 absorbs and every other state jumps to 0 at rate 1.

/// Closed form (e^{-t} - 1) ln(1 - e^{-t}) + t e^{-t}; independent of n.
/// Throws InvalidParameter for t <= 0 or n < 2.
double counterexample_entropy(double t, std::size_t n);

/// T(0, t): T_00 = 1, T_i0 = 1 - e^{-t} and T_ii = e^{-t} for i >= 1.
Eigen::MatrixXd counterexample_transition(std::size_t n, double t);

/// Intensity matrix Q with T(0, t) = exp(Q t).
Eigen::MatrixXd counterexample_generator(std::size_t n);

/// [0, 1/(n-1), ..., 1/(n-1)].
Distribution counterexample_initial(std::size_t n);

/// conditional_entropy(counterexample_transition(n, t), counterexample_initial(n)).
double counterexample_entropy_from_matrix(double t, std::size_t n);

}  // namespace graphentropy
