#include "seriate/matrices.hpp"

#include <cmath>
#include <stdexcept>

namespace seriate {

std::string to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::Laplacian: return "laplacian";
    case MatrixKind::NormLaplacian: return "norm-laplacian";
    case MatrixKind::Modularity: return "modularity";
    case MatrixKind::BetheHessian: return "bethe-hessian";
    case MatrixKind::RegLaplacian: return "reg-laplacian";
    case MatrixKind::RegAdjacency: return "reg-adjacency";
  }
  throw std::logic_error("unknown matrix kind");
}

MatrixKind matrix_kind_from_string(const std::string& name) {
  for (MatrixKind kind : kAllMatrixKinds)
    if (to_string(kind) == name) return kind;
  throw std::invalid_argument("unknown matrix kind: " + name);
}

double default_bethe_r(const Graph& g) {
  if (g.m() < 1) throw std::invalid_argument("default_bethe_r: graph has no edges");
  auto d = degrees(g);
  double sum = 0.0, sum_sq = 0.0;
  for (int di : d) {
    sum += di;
    sum_sq += static_cast<double>(di) * di;
  }
  return std::sqrt(sum_sq / sum - 1.0);
}

double default_reg_tau(const Graph& g) {
  if (g.n < 1) throw std::invalid_argument("default_reg_tau: empty graph");
  return 2.0 * g.m() / g.n;
}

MatrixOptions resolve_defaults(const Graph& g, MatrixOptions opts) {
  switch (opts.kind) {
    case MatrixKind::BetheHessian:
      if (!opts.r) opts.r = default_bethe_r(g);
      opts.tau.reset();
      break;
    case MatrixKind::RegLaplacian:
    case MatrixKind::RegAdjacency:
      if (!opts.tau) opts.tau = default_reg_tau(g);
      opts.r.reset();
      break;
    default:
      opts.r.reset();
      opts.tau.reset();
      break;
  }
  return opts;
}

Eigen::MatrixXd build_matrix(const Graph& g, const MatrixOptions& opts) {
  const int n = g.n;
  if (n < 1) throw std::invalid_argument("build_matrix: empty graph");
  auto d = degrees(g);
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(n, n);

  switch (opts.kind) {
    case MatrixKind::Laplacian: {
      for (int i = 0; i < n; ++i) mat(i, i) = d[i];
      for (auto [u, v] : g.edges) {
        mat(u, v) = -1.0;
        mat(v, u) = -1.0;
      }
      break;
    }
    case MatrixKind::NormLaplacian: {
      for (int i = 0; i < n; ++i) {
        if (d[i] == 0)
          throw std::invalid_argument("norm-laplacian: vertex " + std::to_string(i) +
                                      " has degree 0");
        mat(i, i) = 1.0;
      }
      for (auto [u, v] : g.edges) {
        double w = -1.0 / std::sqrt(static_cast<double>(d[u]) * d[v]);
        mat(u, v) = w;
        mat(v, u) = w;
      }
      break;
    }
    case MatrixKind::Modularity: {
      if (g.m() < 1) throw std::invalid_argument("modularity: graph has no edges");
      const double two_m = 2.0 * g.m();
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          double w = -static_cast<double>(d[i]) * d[j] / two_m;
          mat(i, j) = w;
          mat(j, i) = w;
        }
      for (auto [u, v] : g.edges) {
        mat(u, v) += 1.0;
        mat(v, u) = mat(u, v);
      }
      break;
    }
    case MatrixKind::BetheHessian: {
      if (!opts.r) throw std::invalid_argument("bethe-hessian: hyperparameter r missing");
      const double r = *opts.r;
      if (r == 0.0) throw std::invalid_argument("bethe-hessian: r must be nonzero");
      for (int i = 0; i < n; ++i) mat(i, i) = d[i];
      for (auto [u, v] : g.edges) {
        mat(u, v) = -r;
        mat(v, u) = -r;
      }
      break;
    }
    case MatrixKind::RegLaplacian: {
      if (!opts.tau) throw std::invalid_argument("reg-laplacian: hyperparameter tau missing");
      const double tau = *opts.tau;
      std::vector<double> inv_sqrt(n);
      for (int i = 0; i < n; ++i) {
        double reg = d[i] + tau;
        if (reg <= 0.0)
          throw std::invalid_argument("reg-laplacian: degree + tau must be positive");
        inv_sqrt[i] = 1.0 / std::sqrt(reg);
      }
      const double shift = tau / n;  // added to every adjacency entry
      for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
          double w = -shift * inv_sqrt[i] * inv_sqrt[j];
          if (i == j) w += 1.0;
          mat(i, j) = w;
          mat(j, i) = w;
        }
      for (auto [u, v] : g.edges) {
        mat(u, v) -= inv_sqrt[u] * inv_sqrt[v];
        mat(v, u) = mat(u, v);
      }
      break;
    }
    case MatrixKind::RegAdjacency: {
      if (!opts.tau) throw std::invalid_argument("reg-adjacency: hyperparameter tau missing");
      const double tau = *opts.tau;
      std::vector<double> inv_sqrt(n);
      for (int i = 0; i < n; ++i) {
        double reg = d[i] + tau;
        if (reg <= 0.0)
          throw std::invalid_argument("reg-adjacency: degree + tau must be positive");
        inv_sqrt[i] = 1.0 / std::sqrt(reg);
      }
      for (auto [u, v] : g.edges) {
        double w = inv_sqrt[u] * inv_sqrt[v];
        mat(u, v) = w;
        mat(v, u) = w;
      }
      break;
    }
  }
  return mat;
}

}  // namespace seriate
