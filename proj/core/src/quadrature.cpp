#include "relpol/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <utility>

#include "relpol/errors.hpp"
#include "relpol/specfun.hpp"

namespace relpol::quadrature {

namespace {

// {L_n^a(x), L_{n-1}^a(x)}
std::pair<long double, long double> laguerre_pair(int n, long double a, long double x) {
  long double prev = 0.0L;
  long double curr = 1.0L;
  for (int k = 0; k < n; ++k) {
    const long double next = ((2.0L * k + 1.0L + a - x) * curr - (k + a) * prev) / (k + 1.0L);
    prev = curr;
    curr = next;
  }
  return {curr, prev};
}

}  // namespace

GaussLaguerre::GaussLaguerre(std::size_t nodes, double alpha) : alpha_(alpha) {
  if (nodes == 0) throw DomainError("GaussLaguerre needs at least one node");
  if (!(alpha > -1.0)) throw DomainError("GaussLaguerre needs alpha > -1");

  const auto n = static_cast<Eigen::Index>(nodes);
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
  for (Eigen::Index k = 0; k < n; ++k) {
    diag(k) = 2.0 * static_cast<double>(k) + alpha + 1.0;
    if (k > 0) sub(k - 1) = std::sqrt(static_cast<double>(k) * (static_cast<double>(k) + alpha));
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    throw ConvergenceError("GaussLaguerre: Jacobi matrix eigen-decomposition failed");
  }

  const double mass = std::exp(specfun::log_gamma(alpha + 1.0));
  const int degree = static_cast<int>(n);
  const long double a = alpha;
  const long double log_scale = std::lgammal(degree + a + 1.0L) - std::lgammal(degree + 1.0L);
  nodes_.resize(nodes);
  weights_.resize(nodes);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double v0 = solver.eigenvectors()(0, i);
    double x = solver.eigenvalues()(i);
    double w = mass * v0 * v0;

    // Newton on L_n in extended precision, then
    // w = Gamma(n+a+1) x / (n! ((n+a) L_{n-1}(x))^2); the eigenvector weights
    // lose relative accuracy for large n
    long double t = x;
    long double lm = 0.0L;
    bool ok = true;
    for (int it = 0; it < 6; ++it) {
      const auto [ln, prev] = laguerre_pair(degree, a, t);
      lm = prev;
      const long double step = ln / ((degree * ln - (degree + a) * prev) / t);
      if (!std::isfinite(step)) {
        ok = false;
        break;
      }
      t -= step;
      if (std::fabs(step) <= 4.0L * std::numeric_limits<long double>::epsilon() * t) {
        lm = laguerre_pair(degree, a, t).second;
        break;
      }
    }
    const long double log_w = log_scale + std::log(t) - 2.0L * std::log((degree + a) * std::fabs(lm));
    if (ok && std::isfinite(log_w) && t > 0.0L && std::fabs(t - x) <= 1e-8L * x) {
      x = static_cast<double>(t);
      w = static_cast<double>(std::exp(log_w));
    }
    nodes_[static_cast<std::size_t>(i)] = x;
    weights_[static_cast<std::size_t>(i)] = w;
  }
}

}  // namespace relpol::quadrature
