#include "modcyc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "modcyc/errors.hpp"

namespace modcyc {

std::optional<std::size_t> regular_degree(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

namespace {

void project_out_constant(Eigen::VectorXd& v) { v.array() -= v.mean(); }

}  // namespace

SpectralBound spectral_lower_bound(const Graph& g, const SpectralOptions& options) {
  auto degree = regular_degree(g);
  if (!degree) throw NotRegular("spectral bound needs a regular graph");
  if (*degree == 0 || g.order() < 2) throw NotRegular("spectral bound needs degree >= 1 and n >= 2");
  const auto n = static_cast<Eigen::Index>(g.order());
  const double d = static_cast<double>(*degree);
  const Eigen::Index dim = n - 1;
  const Eigen::Index max_steps = std::min<Eigen::Index>(
      dim, static_cast<Eigen::Index>(std::max<std::size_t>(options.max_iterations, 1)));

  const Eigen::SparseMatrix<double> a = adjacency_matrix<double>(g);

  std::mt19937_64 rng(options.seed);
  Eigen::VectorXd start(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    start[i] = static_cast<double>(rng() >> 11) * 0x1.0p-53 - 0.5;
  }
  project_out_constant(start);
  if (start.norm() == 0.0) {
    start[0] = 1.0;
    project_out_constant(start);
  }
  start.normalize();

  Eigen::MatrixXd basis(n, max_steps + 1);
  basis.col(0) = start;
  std::vector<double> diag, offdiag;

  SpectralBound result;
  result.degree = *degree;
  for (Eigen::Index j = 0; j < max_steps; ++j) {
    Eigen::VectorXd w = a * basis.col(j);
    const double alpha_j = basis.col(j).dot(w);
    diag.push_back(alpha_j);
    project_out_constant(w);
    for (int pass = 0; pass < 2; ++pass) {
      auto q = basis.leftCols(j + 1);
      w -= q * (q.transpose() * w);
    }
    const double beta_j = w.norm();

    const auto m = static_cast<Eigen::Index>(diag.size());
    const bool exhausted = beta_j <= 1e-12 * d || m == dim;
    if (!exhausted && m % 10 != 0 && m != max_steps) {
      offdiag.push_back(beta_j);
      basis.col(j + 1) = w / beta_j;
      continue;
    }
    Eigen::VectorXd t_diag = Eigen::Map<Eigen::VectorXd>(diag.data(), m);
    Eigen::VectorXd t_off = Eigen::Map<Eigen::VectorXd>(offdiag.data(), m - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(t_diag, t_off, Eigen::ComputeEigenvectors);
    const Eigen::VectorXd& theta = tri.eigenvalues();
    const double r_min = std::abs(beta_j * tri.eigenvectors()(m - 1, 0));
    const double r_max = std::abs(beta_j * tri.eigenvectors()(m - 1, m - 1));

    const double tol = options.tolerance * std::max(1.0, d);
    if (exhausted || (r_min < tol && r_max < tol && m >= 2)) {
      const bool top_is_max = std::abs(theta[m - 1]) >= std::abs(theta[0]);
      result.lambda = top_is_max ? std::abs(theta[m - 1]) : std::abs(theta[0]);
      result.tolerance = exhausted ? 0.0 : (top_is_max ? r_max : r_min);
      result.iterations = static_cast<std::size_t>(m);
      result.alpha = (d - result.lambda) / (2.0 * d);
      result.alpha_conservative = (d - result.lambda - result.tolerance) / (2.0 * d);
      return result;
    }
    offdiag.push_back(beta_j);
    basis.col(j + 1) = w / beta_j;
  }
  throw EigenNonConvergence("Lanczos did not converge within " + std::to_string(max_steps) +
                                " iterations",
                            static_cast<std::size_t>(max_steps));
}

ExpansionReport certify_spectral(const Graph& g, const Rational& alpha, const SpectralOptions& options) {
  const SpectralBound bound = spectral_lower_bound(g, options);
  ExpansionReport report;
  report.alpha_target = alpha;
  report.method = CertificationMethod::kSpectral;
  report.spectral_bound = bound.alpha;
  report.spectral_tolerance = bound.tolerance;
  report.verdict = alpha.to_double() <= bound.alpha_conservative ? Verdict::kCertifiedExpander
                                                                 : Verdict::kLowerBoundOnly;
  return report;
}

}  // namespace modcyc
