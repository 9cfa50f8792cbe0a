#include "graphentropy/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace graphentropy {

const char* to_string(LaplacianKind kind) noexcept {
  return kind == LaplacianKind::Combinatorial ? "heat" : "rw";
}

void require_dense_diffusion_ready(const Graph& g, std::size_t dense_cap) {
  if (g.size() > dense_cap) {
    throw Error(ErrorCode::InvalidSize, "n=" + std::to_string(g.size()) + " exceeds dense cap " +
                                            std::to_string(dense_cap));
  }
  if (g.has_isolated_node()) {
    for (Node u = 0; u < g.size(); ++u) {
      if (g.degree(u) == 0) {
        throw Error(ErrorCode::IsolatedNode, "node " + std::to_string(u) + " of " + g.label() + " has degree 0");
      }
    }
  }
}

SpectralDecomposition eig_symmetric(const Eigen::MatrixXd& L, LaplacianKind kind) {
  if (L.rows() != L.cols()) throw Error(ErrorCode::DimensionMismatch, "eig_symmetric needs a square matrix");
  if (!L.allFinite()) throw Error(ErrorCode::NumericInput, "matrix has non-finite entries");
  const Eigen::MatrixXd sym = 0.5 * (L + L.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::NumericFailure, "symmetric eigensolver did not converge");
  // Eigen returns ascending eigenvalues.
  return SpectralDecomposition{solver.eigenvalues(), solver.eigenvectors(), kind, false};
}

SpectralDecomposition heat_spectrum(const Graph& g, std::size_t dense_cap) {
  return eig_symmetric(laplacian(g, LaplacianKind::Combinatorial, dense_cap), LaplacianKind::Combinatorial);
}

SpectralDecomposition spectrum_complete(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "complete graph needs n >= 1");
  const auto N = static_cast<Eigen::Index>(n);
  SpectralDecomposition dec;
  dec.kind = LaplacianKind::Combinatorial;
  dec.exact = true;
  dec.eigenvalues = Eigen::VectorXd::Constant(N, static_cast<double>(n));
  dec.eigenvalues(0) = 0.0;
  dec.eigenvectors = Eigen::MatrixXd::Zero(N, N);
  dec.eigenvectors.col(0).setConstant(1.0 / std::sqrt(static_cast<double>(n)));
  // Helmert column k: k entries of 1/sqrt(k(k+1)), then -k/sqrt(k(k+1)).
  for (Eigen::Index k = 1; k < N; ++k) {
    const double kk = static_cast<double>(k);
    const double scale = 1.0 / std::sqrt(kk * (kk + 1.0));
    dec.eigenvectors.col(k).head(k).setConstant(scale);
    dec.eigenvectors(k, k) = -kk * scale;
  }
  return dec;
}

SpectralDecomposition spectrum_path(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidSize, "path graph needs n >= 1");
  const auto N = static_cast<Eigen::Index>(n);
  const double nd = static_cast<double>(n);
  SpectralDecomposition dec;
  dec.kind = LaplacianKind::Combinatorial;
  dec.exact = true;
  dec.eigenvalues.resize(N);
  dec.eigenvectors.resize(N, N);
  for (Eigen::Index k = 0; k < N; ++k) {
    const double theta = std::numbers::pi * static_cast<double>(k) / nd;
    // 4 sin^2(theta/2) == 2(1 - cos theta) without cancellation near 0.
    const double s = std::sin(0.5 * theta);
    dec.eigenvalues(k) = 4.0 * s * s;
    const double norm = std::sqrt((k == 0 ? 1.0 : 2.0) / nd);
    for (Eigen::Index j = 0; j < N; ++j) {
      dec.eigenvectors(j, k) = norm * std::cos(theta * (static_cast<double>(j) + 0.5));
    }
  }
  return dec;
}

Eigen::MatrixXcd CirculantSpectrum::fourier_matrix() const {
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXcd F(N, N);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index k = 0; k < N; ++k) {
      // Reduce jk mod n first so the angle stays small and exact.
      const auto r = static_cast<double>((j * k) % N);
      const double angle = -2.0 * std::numbers::pi * r / static_cast<double>(n);
      F(j, k) = std::polar(scale, angle);
    }
  }
  return F;
}

Eigen::MatrixXcd CirculantSpectrum::reconstruct() const {
  const Eigen::MatrixXcd F = fourier_matrix();
  return F.adjoint() * by_frequency.cast<std::complex<double>>().asDiagonal() * F;
}

CirculantSpectrum spectrum_circulant(std::size_t n, const StepSet& steps) {
  if (steps.n() != n) throw Error(ErrorCode::InvalidStep, "step set built for a different n");
  CirculantSpectrum spec;
  spec.n = n;
  spec.degree = steps.degree();
  const auto N = static_cast<Eigen::Index>(n);
  spec.by_frequency.resize(N);
  for (Eigen::Index k = 0; k < N; ++k) {
    double mu = 0.0;
    for (const auto s : steps.steps()) {
      const auto r = static_cast<double>((static_cast<Eigen::Index>(s) * k) % N);
      const double c = std::cos(2.0 * std::numbers::pi * r / static_cast<double>(n));
      // Step n/2 contributes a single neighbor, so only half of 2cos.
      mu += 2 * s == n ? c : 2.0 * c;
    }
    spec.by_frequency(k) = static_cast<double>(spec.degree) - mu;
  }
  spec.by_frequency(0) = 0.0;
  spec.sorted = spec.by_frequency;
  std::sort(spec.sorted.begin(), spec.sorted.end());
  return spec;
}

double spectral_gap(const SpectralDecomposition& dec) {
  if (dec.size() < 2) return 0.0;
  return dec.eigenvalues(1);
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> eigenvalue_clusters(const Eigen::VectorXd& ascending,
                                                                      double rel_tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
  if (ascending.size() == 0) return clusters;
  const double scale = std::max(1.0, ascending.cwiseAbs().maxCoeff());
  Eigen::Index begin = 0;
  for (Eigen::Index i = 1; i <= ascending.size(); ++i) {
    if (i == ascending.size() || ascending(i) - ascending(i - 1) > rel_tol * scale) {
      clusters.emplace_back(begin, i);
      begin = i;
    }
  }
  return clusters;
}

Eigen::MatrixXd cluster_projector(const SpectralDecomposition& dec, Eigen::Index begin, Eigen::Index end) {
  const auto block = dec.eigenvectors.middleCols(begin, end - begin);
  return block * block.transpose();
}

WeylReport check_weyl_monotonicity(const Graph& g, Edge extra_edge, double tol) {
  const Graph augmented = g.with_edge(extra_edge.first, extra_edge.second);
  WeylReport report;
  // Isolated nodes are fine here: only the spectra are compared.
  const auto spectrum_of = [](const Graph& h) {
    Eigen::MatrixXd L = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(h.size()), static_cast<Eigen::Index>(h.size()));
    for (const auto& [u, v] : h.edges()) {
      const auto a = static_cast<Eigen::Index>(u);
      const auto b = static_cast<Eigen::Index>(v);
      L(a, a) += 1.0;
      L(b, b) += 1.0;
      L(a, b) -= 1.0;
      L(b, a) -= 1.0;
    }
    return eig_symmetric(L).eigenvalues;
  };
  report.before = spectrum_of(g);
  report.after = spectrum_of(augmented);
  report.increments = report.after - report.before;
  report.holds.resize(static_cast<std::size_t>(report.before.size()));
  report.all_hold = true;
  for (Eigen::Index i = 0; i < report.before.size(); ++i) {
    const bool ok = report.increments(i) >= -tol;
    report.holds[static_cast<std::size_t>(i)] = ok;
    report.all_hold = report.all_hold && ok;
  }
  report.worst_increment = report.increments.size() ? report.increments.minCoeff() : 0.0;
  report.bounded_by_complete = report.after.size() == 0 ||
                               report.after.maxCoeff() <= static_cast<double>(g.size()) + tol;
  return report;
}

}  // namespace graphentropy
