#pragma once

#include <cstddef>
#include <functional>
#include <numbers>
#include <vector>

namespace relpol::quadrature {

/// Generalized Gauss-Laguerre rule for the weight x^alpha e^{-x} on
/// [0, inf): integrate(f) ~ int_0^inf x^alpha e^{-x} f(x) dx, exact for
/// polynomials of degree <= 2n-1. Nodes and weights come from the
/// eigen-decomposition of the Jacobi matrix (Golub-Welsch).
class GaussLaguerre {
 public:
  GaussLaguerre(std::size_t nodes, double alpha);

  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] double alpha() const { return alpha_; }
  [[nodiscard]] const std::vector<double>& nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<double>& weights() const { return weights_; }

  template <typename F>
  [[nodiscard]] double integrate(F&& f) const {
    double sum = 0.0;
    double comp = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      const double x = weights_[i] * f(nodes_[i]);
      const double s = sum + x;
      const double bp = s - sum;
      comp += (sum - (s - bp)) + (x - bp);
      sum = s;
    }
    return sum + comp;
  }

 private:
  double alpha_;
  std::vector<double> nodes_;
  std::vector<double> weights_;
};

/// Composite trapezoidal rule over one period [0, 2 pi); spectrally accurate
/// for smooth periodic integrands.
template <typename F>
auto periodic_trapezoid(F&& f, std::size_t points) {
  const double h = 2.0 * std::numbers::pi / static_cast<double>(points);
  decltype(f(0.0)) sum{};
  for (std::size_t i = 0; i < points; ++i) sum += f(h * static_cast<double>(i));
  return sum * h;
}

}  // namespace relpol::quadrature
