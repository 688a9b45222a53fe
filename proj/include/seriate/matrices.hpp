#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>

#include "seriate/graph.hpp"

namespace seriate {

// The six symmetric matrix representations used for ordering and clustering.
//
//   Laplacian        L  = D - A
//   NormLaplacian    Ln = D^{-1/2} L D^{-1/2}
//   Modularity       Q  = A - d d^T / (2M)
//   BetheHessian     B  = D - rA            (hyperparameter r)
//   RegLaplacian     I - (D+tI)^{-1/2} (A + t/N) (D+tI)^{-1/2}   (hyperparameter t)
//   RegAdjacency     (D+tI)^{-1/2} A (D+tI)^{-1/2}               (hyperparameter t)
//
// RegLaplacian adds t/N to every adjacency entry (diagonal included), so that
// the regularized degree of each vertex is exactly d_i + t.
enum class MatrixKind {
  Laplacian,
  NormLaplacian,
  Modularity,
  BetheHessian,
  RegLaplacian,
  RegAdjacency,
};

constexpr std::array<MatrixKind, 6> kAllMatrixKinds = {
    MatrixKind::Laplacian,    MatrixKind::NormLaplacian, MatrixKind::Modularity,
    MatrixKind::BetheHessian, MatrixKind::RegLaplacian,  MatrixKind::RegAdjacency,
};

// CLI/CSV names: laplacian, norm-laplacian, modularity, bethe-hessian,
// reg-laplacian, reg-adjacency.
std::string to_string(MatrixKind kind);
MatrixKind matrix_kind_from_string(const std::string& name);

struct MatrixOptions {
  MatrixKind kind = MatrixKind::Laplacian;
  std::optional<double> r;    // BetheHessian only
  std::optional<double> tau;  // RegLaplacian / RegAdjacency only
};

// Default Bethe-Hessian r: sqrt(sum(d^2)/sum(d) - 1). Requires m >= 1.
double default_bethe_r(const Graph& g);

// Default regularization tau: the average degree 2m/n.
double default_reg_tau(const Graph& g);

// Fill in missing hyperparameters with the defaults above; drops
// hyperparameters that do not apply to the kind.
MatrixOptions resolve_defaults(const Graph& g, MatrixOptions opts);

// Build the dense symmetric matrix. Requirements:
//   NormLaplacian: every degree >= 1 (throws naming an isolated vertex);
//   Modularity:    m >= 1;
//   BetheHessian:  r present and nonzero;
//   Reg*:          tau present and d_i + tau > 0 for all i.
// Entries are exactly symmetric (both triangles assigned from one value).
Eigen::MatrixXd build_matrix(const Graph& g, const MatrixOptions& opts);

}  // namespace seriate
