#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "graphentropy/error.hpp"
#include "graphentropy/graph.hpp"

namespace graphentropy {

enum class LaplacianKind { Combinatorial, RandomWalk };

const char* to_string(LaplacianKind kind) noexcept;

/// Dense operators are refused above this many nodes unless the caller
/// passes a larger cap.
inline constexpr std::size_t kDefaultDenseCap = 2000;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Throws IsolatedNode if a graph with n >= 2 has a degree-zero node, and
/// InvalidSize above the dense cap. A single node is not isolated.
void require_dense_diffusion_ready(const Graph& g, std::size_t dense_cap = kDefaultDenseCap);

/// Combinatorial L = D - A or random-walk L_RW = I - D^{-1} A.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const Graph& g, LaplacianKind kind, std::size_t dense_cap = kDefaultDenseCap) {
  require_dense_diffusion_ready(g, dense_cap);
  const auto n = static_cast<Eigen::Index>(g.size());
  DenseMatrix<Scalar> L = DenseMatrix<Scalar>::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& nbrs = g.neighbors(static_cast<Node>(i));
    if (nbrs.empty()) continue;
    const Scalar off = kind == LaplacianKind::Combinatorial ? Scalar(-1) : Scalar(-1) / Scalar(nbrs.size());
    L(i, i) = kind == LaplacianKind::Combinatorial ? Scalar(nbrs.size()) : Scalar(1);
    for (const Node j : nbrs) L(i, static_cast<Eigen::Index>(j)) = off;
  }
  return L;
}

/// Ascending eigenpairs of a Laplacian. Column k of `eigenvectors` pairs
/// with `eigenvalues(k)`.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Eigen::MatrixXd eigenvectors;
  LaplacianKind kind = LaplacianKind::Combinatorial;
  bool exact = false;

  Eigen::Index size() const noexcept { return eigenvalues.size(); }

  /// U diag(f(lambda)) U^T for a scalar function f.
  template <typename Fn>
  Eigen::MatrixXd apply(Fn&& fn) const {
    const Eigen::VectorXd weights = eigenvalues.unaryExpr(std::forward<Fn>(fn));
    return eigenvectors * weights.asDiagonal() * eigenvectors.transpose();
  }

  Eigen::MatrixXd reconstruct() const {
    return apply([](double l) { return l; });
  }
};

/// Symmetric eigendecomposition of (L + L^T)/2. Throws NumericInput on
/// non-finite entries.
SpectralDecomposition eig_symmetric(const Eigen::MatrixXd& L, LaplacianKind kind = LaplacianKind::Combinatorial);

/// Numerical heat spectrum of a graph.
SpectralDecomposition heat_spectrum(const Graph& g, std::size_t dense_cap = kDefaultDenseCap);

/// K_n: eigenvalues (0, n, ..., n); the constant vector first, then the
/// Helmert completion as an explicit orthonormal basis of 1^perp.
SpectralDecomposition spectrum_complete(std::size_t n);

/// P_n: lambda_k = 2(1 - cos(pi (k-1)/n)) with the DCT-II basis
/// v_j = sqrt((2 - delta_k1)/n) cos(pi (k-1)(j - 1/2)/n).
SpectralDecomposition spectrum_path(std::size_t n);

/// Laplacian spectrum of C_n(S), diagonalized by the unitary DFT matrix.
struct CirculantSpectrum {
  std::size_t n = 0;
  std::size_t degree = 0;
  /// lambda_{k+1} = d - 2 sum_s cos(2 pi s k / n), indexed by frequency k.
  Eigen::VectorXd by_frequency;
  /// Same values ascending.
  Eigen::VectorXd sorted;

  /// F = n^{-1/2} [omega^{jk}], omega = exp(-2 pi i / n).
  Eigen::MatrixXcd fourier_matrix() const;

  /// F^* diag(lambda) F; its real part is L(C_n(S)).
  Eigen::MatrixXcd reconstruct() const;
};

CirculantSpectrum spectrum_circulant(std::size_t n, const StepSet& steps);

/// Second-smallest eigenvalue; 0 for a single node.
double spectral_gap(const SpectralDecomposition& dec);

/// Groups equal eigenvalues: indices [begin, end) of each cluster in an
/// ascending spectrum, using relative tolerance `rel_tol` (scaled by the
/// largest magnitude, floored at 1).
std::vector<std::pair<Eigen::Index, Eigen::Index>> eigenvalue_clusters(const Eigen::VectorXd& ascending,
                                                                      double rel_tol = 1e-8);

/// Orthogonal projector onto the eigenspace spanned by columns [begin, end).
Eigen::MatrixXd cluster_projector(const SpectralDecomposition& dec, Eigen::Index begin, Eigen::Index end);

struct WeylReport {
  Eigen::VectorXd before;
  Eigen::VectorXd after;
  /// after(i) - before(i); non-negative up to tolerance when the property holds.
  Eigen::VectorXd increments;
  std::vector<bool> holds;
  bool all_hold = false;
  /// Every eigenvalue of the augmented graph stays <= n.
  bool bounded_by_complete = false;
  double worst_increment = 0.0;
};

/// Compares sorted spectra of g and g + {u, v} index by index.
WeylReport check_weyl_monotonicity(const Graph& g, Edge extra_edge, double tol = 1e-9);

}  // namespace graphentropy
