#include "monogenica/holo.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace monogenica {

namespace {

// d^k/dw^k of sum_j c_j v^j, evaluated at v.
Complex differentiate_power_sum(const std::vector<Complex>& coeffs, int k, Complex v) {
  const int degree = int(coeffs.size()) - 1;
  if (k > degree) return 0.0;
  Complex acc = 0.0;
  for (int j = degree; j >= k; --j) {
    double falling = 1.0;  // j! / (j - k)!
    for (int i = 0; i < k; ++i) falling *= double(j - i);
    acc = acc * v + falling * coeffs[std::size_t(j)];
  }
  return acc;
}

Complex sin_cycle(int k, Complex w) {
  switch (k % 4) {
    case 0: return std::sin(w);
    case 1: return std::cos(w);
    case 2: return -std::sin(w);
    default: return -std::cos(w);
  }
}

}  // namespace

Complex HoloFn::base_derivative(int k, Complex w) const {
  if (k < 0) throw HoloDomainError("negative derivative order");
  struct Visitor {
    int k;
    Complex w;
    Complex operator()(const Polynomial& p) const { return differentiate_power_sum(p.coeffs, k, w); }
    Complex operator()(const ExpFn&) const { return std::exp(w); }
    Complex operator()(const SinFn&) const { return sin_cycle(k, w); }
    Complex operator()(const CosFn&) const { return sin_cycle(k + 1, w); }
    Complex operator()(const PowerSeries& s) const {
      if (std::abs(w - s.center) > 0.9 * s.radius) {
        throw HoloDomainError("power series evaluated outside 0.9 * radius of convergence");
      }
      return differentiate_power_sum(s.coeffs, k, w - s.center);
    }
  };
  return std::visit(Visitor{k, w}, kind_);
}

Complex HoloFn::derivative(int k, Complex xi) const {
  Complex factor = amplitude_;
  for (int i = 0; i < k; ++i) factor *= scale_;
  return factor * base_derivative(k, scale_ * xi + shift_);
}

HoloFn operator+(const HoloFn& lhs, const HoloFn& rhs) {
  const bool same_argument = lhs.scale_ == rhs.scale_ && lhs.shift_ == rhs.shift_;
  const auto* pl = std::get_if<Polynomial>(&lhs.kind_);
  const auto* pr = std::get_if<Polynomial>(&rhs.kind_);
  if (pl && pr && same_argument) {
    std::vector<Complex> coeffs(std::max(pl->coeffs.size(), pr->coeffs.size()), Complex(0.0));
    for (std::size_t j = 0; j < pl->coeffs.size(); ++j) coeffs[j] += lhs.amplitude_ * pl->coeffs[j];
    for (std::size_t j = 0; j < pr->coeffs.size(); ++j) coeffs[j] += rhs.amplitude_ * pr->coeffs[j];
    return HoloFn(Polynomial{std::move(coeffs)}, 1.0, lhs.scale_, lhs.shift_);
  }
  if (lhs.kind_.index() == rhs.kind_.index() && same_argument && !pl &&
      !std::holds_alternative<PowerSeries>(lhs.kind_)) {
    return HoloFn(lhs.kind_, lhs.amplitude_ + rhs.amplitude_, lhs.scale_, lhs.shift_);
  }
  throw std::invalid_argument("HoloFn sum needs two polynomials or two copies of one function");
}

Complex holo_eval(const HoloFn& f, int k, Complex xi, int max_order) {
  if (k < 0 || k > max_order) {
    throw HoloDomainError("derivative order " + std::to_string(k) + " exceeds cap " +
                          std::to_string(max_order));
  }
  return f.derivative(k, xi);
}

Contour default_contour(Complex xi_u, const std::vector<Complex>& others) {
  if (others.empty()) return {xi_u, 1.0, 256};
  double nearest = std::numeric_limits<double>::infinity();
  for (Complex o : others) {
    const double d = std::abs(o - xi_u);
    if (d <= 1e-10) {
      throw CoincidentSpectrum("spectral points closer than 1e-10 but not equal");
    }
    nearest = std::min(nearest, d);
  }
  return {xi_u, 0.5 * nearest, 256};
}

}  // namespace monogenica
