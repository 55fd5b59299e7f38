#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "modcyc/expansion.hpp"
#include "modcyc/graph.hpp"

namespace modcyc {

/// Adjacency matrix as an Eigen sparse matrix, scalar type selectable.
template <typename Scalar = double>
Eigen::SparseMatrix<Scalar> adjacency_matrix(const Graph& g) {
  std::vector<Eigen::Triplet<Scalar>> entries;
  entries.reserve(2 * g.size());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w : g.neighbors(v)) entries.emplace_back(v, w, Scalar(1));
  }
  Eigen::SparseMatrix<Scalar> a(g.order(), g.order());
  a.setFromTriplets(entries.begin(), entries.end());
  return a;
}

/// Common degree, or nullopt if g is not regular (or empty).
std::optional<std::size_t> regular_degree(const Graph& g);

struct SpectralOptions {
  double tolerance = 1e-10;
  std::size_t max_iterations = 400;
  std::uint64_t seed = 1;
};

struct SpectralBound {
  std::size_t degree = 0;
  /// Second largest absolute adjacency eigenvalue.
  double lambda = 0;
  /// Residual norm of the Ritz pair defining lambda.
  double tolerance = 0;
  /// (d - lambda) / (2d).
  double alpha = 0;
  /// (d - lambda - tolerance) / (2d), never above `alpha`.
  double alpha_conservative = 0;
  std::size_t iterations = 0;
};

/// Lanczos iteration with full reorthogonalisation on the adjacency operator
/// restricted to the complement of the all-ones vector (the top eigenvector of
/// a regular graph). Throws NotRegular or EigenNonConvergence.
SpectralBound spectral_lower_bound(const Graph& g, const SpectralOptions& options = {});

/// CertifiedExpander when alpha <= alpha_conservative, otherwise LowerBoundOnly.
ExpansionReport certify_spectral(const Graph& g, const Rational& alpha, const SpectralOptions& options = {});

}  // namespace modcyc
