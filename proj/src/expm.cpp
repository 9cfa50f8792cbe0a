#include <cmath>

#include "graphentropy/diffusion.hpp"
#include "graphentropy/error.hpp"

namespace graphentropy {

Eigen::MatrixXd expm_oracle(const Eigen::MatrixXd& M) {
  if (M.rows() != M.cols()) throw Error(ErrorCode::DimensionMismatch, "expm needs a square matrix");
  if (!M.allFinite()) throw Error(ErrorCode::NumericInput, "expm input has non-finite entries");
  const Eigen::Index n = M.rows();
  if (n == 0) return M;

  // Induced 1-norm: max column sum.
  const double norm = M.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  if (squarings > 1000) throw Error(ErrorCode::NumericFailure, "expm scaling overflow");
  const Eigen::MatrixXd A = M / std::ldexp(1.0, squarings);

  constexpr int kDegree = 18;
  const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
  // Horner: I + A(I + A/2(I + A/3(... (I + A/18)))).
  Eigen::MatrixXd E = I;
  for (int k = kDegree; k >= 1; --k) {
    Eigen::MatrixXd next = I;
    next.noalias() += (A * E) / static_cast<double>(k);
    E.swap(next);
  }
  Eigen::MatrixXd tmp(n, n);
  for (int i = 0; i < squarings; ++i) {
    tmp.noalias() = E * E;
    E.swap(tmp);
  }
  if (!E.allFinite()) throw Error(ErrorCode::NumericFailure, "expm overflowed");
  return E;
}

}  // namespace graphentropy
