#include "seriate/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace seriate {

Spectrum eig_symmetric_full(const Eigen::MatrixXd& m) {
  const auto n = m.rows();
  if (n < 1 || m.cols() != n)
    throw std::invalid_argument("eig_symmetric: matrix must be square and non-empty");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!std::isfinite(m(i, j)))
        throw std::invalid_argument("eig_symmetric: non-finite entry at (" +
                                    std::to_string(i) + "," + std::to_string(j) + ")");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_symmetric: eigensolver did not converge");

  Spectrum s;
  s.values = solver.eigenvalues();  // ascending
  s.vectors = solver.eigenvectors();

  // Fix each eigenvector's sign: first nonzero component positive.
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      double x = s.vectors(i, j);
      if (x != 0.0) {
        if (x < 0.0) s.vectors.col(j) = -s.vectors.col(j);
        break;
      }
    }
  }

  // Flag eigenvalues that are numerically degenerate with a neighbor.
  const double tol = 1e-10 * m.norm();  // Frobenius norm
  s.degenerate.assign(n, false);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    if (s.values[j + 1] - s.values[j] <= tol) {
      s.degenerate[j] = true;
      s.degenerate[j + 1] = true;
    }
  }
  return s;
}

Spectrum slice_spectrum(const Spectrum& full, int k, Which which) {
  const int n = static_cast<int>(full.values.size());
  if (k < 1 || k > n)
    throw std::invalid_argument("eig_symmetric: k must be in [1, n], got " + std::to_string(k));
  const int start = (which == Which::Smallest) ? 0 : n - k;
  Spectrum s;
  s.values = full.values.segment(start, k);
  s.vectors = full.vectors.middleCols(start, k);
  s.degenerate.assign(full.degenerate.begin() + start, full.degenerate.begin() + start + k);
  return s;
}

Spectrum eig_symmetric(const Eigen::MatrixXd& m, int k, Which which) {
  if (k < 1 || k > m.rows())
    throw std::invalid_argument("eig_symmetric: k must be in [1, n], got " + std::to_string(k));
  return slice_spectrum(eig_symmetric_full(m), k, which);
}

}  // namespace seriate
