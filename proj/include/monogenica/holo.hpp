#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <variant>
#include <vector>

#include "monogenica/algebra.hpp"

namespace monogenica {

struct Polynomial {
  std::vector<Complex> coeffs;  // c_0 + c_1 w + ...
};
struct ExpFn {};
struct SinFn {};
struct CosFn {};
struct PowerSeries {
  Complex center;
  std::vector<Complex> coeffs;  // sum c_j (w - center)^j
  double radius;                // evaluation allowed inside 0.9 * radius
};

/// Holomorphic function of one complex variable, f(xi) = amplitude * g(scale * xi + shift),
/// with exact derivatives of every order.
class HoloFn {
 public:
  using Kind = std::variant<Polynomial, ExpFn, SinFn, CosFn, PowerSeries>;

  HoloFn() : kind_(Polynomial{}) {}
  explicit HoloFn(Kind kind, Complex amplitude = 1.0, Complex scale = 1.0, Complex shift = 0.0)
      : kind_(std::move(kind)), amplitude_(amplitude), scale_(scale), shift_(shift) {}

  static HoloFn zero() { return HoloFn(); }
  static HoloFn polynomial(std::vector<Complex> coeffs) { return HoloFn(Polynomial{std::move(coeffs)}); }
  static HoloFn exp() { return HoloFn(ExpFn{}); }
  static HoloFn sin() { return HoloFn(SinFn{}); }
  static HoloFn cos() { return HoloFn(CosFn{}); }
  static HoloFn series(Complex center, std::vector<Complex> coeffs, double radius) {
    return HoloFn(PowerSeries{center, std::move(coeffs), radius});
  }

  const Kind& kind() const { return kind_; }
  Complex amplitude() const { return amplitude_; }
  Complex scale() const { return scale_; }
  Complex shift() const { return shift_; }

  /// k-th derivative of the unscaled g at w.
  Complex base_derivative(int k, Complex w) const;

  /// k-th derivative of f at xi: amplitude * scale^k * g^{(k)}(scale * xi + shift).
  Complex derivative(int k, Complex xi) const;
  Complex operator()(Complex xi) const { return derivative(0, xi); }

  /// Sum of two polynomials, or of two copies of one function with the same argument map.
  friend HoloFn operator+(const HoloFn& lhs, const HoloFn& rhs);

 private:
  Kind kind_;
  Complex amplitude_ = 1.0;
  Complex scale_ = 1.0;
  Complex shift_ = 0.0;
};

inline constexpr int kNoOrderCap = std::numeric_limits<int>::max();

/// k-th derivative with an explicit order cap (HoloDomainError above it).
Complex holo_eval(const HoloFn& f, int k, Complex xi, int max_order = kNoOrderCap);

struct Contour {
  Complex center;
  double radius;
  int nodes;
};

/// Circle around xi_u: radius 1 when `others` is empty, otherwise half the
/// distance to the nearest other point, 256 nodes. Throws CoincidentSpectrum when
/// some other point lies within 1e-10.
Contour default_contour(Complex xi_u, const std::vector<Complex>& others);

/// (1 / 2 pi i) times the integral of g over the circle, trapezoid rule on
/// t_j = center + radius e^{2 pi i j / N}. `g` maps Complex to an Eigen vector.
template <typename Fn>
auto contour_integrate(Fn&& g, const Contour& c) -> std::decay_t<decltype(g(Complex{}))> {
  using Result = std::decay_t<decltype(g(Complex{}))>;
  const double step = 2.0 * std::numbers::pi / c.nodes;
  Result acc;
  for (int j = 0; j < c.nodes; ++j) {
    const Complex w = std::polar(1.0, step * j);
    const Complex t = c.center + c.radius * w;
    // dt / (2 pi i) = radius * w / N
    const Complex weight = c.radius * w / double(c.nodes);
    if (j == 0) {
      acc = weight * g(t);
    } else {
      acc += weight * g(t);
    }
  }
  return acc;
}

struct QuadratureOptions {
  int nodes = 256;
  double tol = 1e-10;
  int max_nodes = 4096;
};

struct QuadratureReport {
  int nodes_used = 0;
  bool converged = true;
  std::vector<std::string> warnings;
};

/// Doubles the node count from `opts.nodes` until two successive results agree
/// to opts.tol (relative to max(1, |result|)) or opts.max_nodes is reached.
/// With max_nodes <= nodes this is the plain fixed-node rule, unchecked.
template <typename Fn>
auto contour_integrate_adaptive(Fn&& g, Contour c, const QuadratureOptions& opts,
                                QuadratureReport* report = nullptr)
    -> std::decay_t<decltype(g(Complex{}))> {
  c.nodes = opts.nodes;
  auto prev = contour_integrate(g, c);
  if (opts.max_nodes <= opts.nodes) {
    if (report) report->nodes_used = std::max(report->nodes_used, c.nodes);
    return prev;
  }
  while (true) {
    if (c.nodes * 2 > opts.max_nodes) break;
    c.nodes *= 2;
    auto next = contour_integrate(g, c);
    const double diff = (next - prev).cwiseAbs().maxCoeff();
    const double size = std::max(1.0, double(next.cwiseAbs().maxCoeff()));
    prev = std::move(next);
    if (diff <= opts.tol * size) {
      if (report) report->nodes_used = std::max(report->nodes_used, c.nodes);
      return prev;
    }
  }
  if (report) {
    report->nodes_used = std::max(report->nodes_used, c.nodes);
    report->converged = false;
    report->warnings.push_back("quadrature did not reach tolerance at " + std::to_string(c.nodes) +
                               " nodes");
  }
  return prev;
}

}  // namespace monogenica
