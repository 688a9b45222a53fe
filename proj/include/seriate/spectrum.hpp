#pragma once

#include <Eigen/Dense>
#include <vector>

namespace seriate {

enum class Which { Smallest, Largest };

// Eigendecomposition slice of a real symmetric matrix.
//   values:     eigenvalues, ascending;
//   vectors:    column j is the unit eigenvector of values[j];
//   degenerate: flag per returned eigenpair, set when the eigenvalue is
//               within 1e-10 * ||M||_F of a neighboring eigenvalue in the
//               full spectrum (rank selections among such pairs are
//               numerically arbitrary).
//
// Determinism: for bit-identical input the result is bit-identical. Each
// eigenvector's sign is fixed so its first nonzero component is positive.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
  std::vector<bool> degenerate;
};

// Full decomposition (all n eigenpairs). Throws on non-square or non-finite
// input and on solver failure.
Spectrum eig_symmetric_full(const Eigen::MatrixXd& m);

// The k eigenpairs at one end of the spectrum, eigenvalues ascending within
// the slice. Requires 1 <= k <= n.
Spectrum eig_symmetric(const Eigen::MatrixXd& m, int k, Which which);

// Slice an already-computed full spectrum (avoids re-solving when both an
// ordering and a clustering are derived from the same matrix).
Spectrum slice_spectrum(const Spectrum& full, int k, Which which);

}  // namespace seriate
