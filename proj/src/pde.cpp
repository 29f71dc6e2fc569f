#include "monogenica/pde.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>

namespace monogenica {

namespace {

double binomial(int n, int k) {
  double out = 1.0;
  for (int i = 1; i <= k; ++i) out = out * double(n - k + i) / double(i);
  return out;
}

// Central difference weights of O(h^2) for d^order/dx^order, keyed by offset in
// units of h, before division by h^order. Odd orders average the two
// half-shifted even stencils.
std::map<int, double> central_weights(int order) {
  std::map<int, double> w;
  if (order == 0) {
    w[0] = 1.0;
    return w;
  }
  for (int j = 0; j <= order; ++j) {
    const double c = ((j % 2) ? -1.0 : 1.0) * binomial(order, j);
    if (order % 2 == 0) {
      w[order / 2 - j] += c;
    } else {
      w[(order + 1) / 2 - j] += 0.5 * c;
      w[(order - 1) / 2 - j] += 0.5 * c;
    }
  }
  return w;
}

double leading_form(const PdeSpec& pde, int degree, double ca, double sb) {
  double out = 0.0;
  for (const PdeTerm& t : pde.terms) {
    if (t.beta + t.gamma == degree) out += t.c * std::pow(ca, t.beta) * std::pow(sb, t.gamma);
  }
  return out;
}

double magnitude_at(const PdeSpec& pde, double a, double b) {
  double out = 0.0;
  for (const PdeTerm& t : pde.terms) out += std::abs(t.c) * std::pow(std::abs(a), t.beta) * std::pow(std::abs(b), t.gamma);
  return out;
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

void validate_pde(const PdeSpec& pde) {
  if (pde.order < 1) throw InvalidSpec("pde order must be positive");
  if (pde.terms.empty()) throw InvalidSpec("pde needs at least one term");
  for (const PdeTerm& t : pde.terms) {
    if (t.alpha < 0 || t.beta < 0 || t.gamma < 0 || t.alpha + t.beta + t.gamma != pde.order) {
      throw InvalidSpec("pde term exponents must be nonnegative and sum to N = " + std::to_string(pde.order));
    }
  }
}

PdeSpec laplace_operator() { return {2, {{2, 0, 0, 1.0}, {0, 2, 0, 1.0}, {0, 0, 2, 1.0}}}; }

Element characteristic_residual(const AlgebraSpec& alg, const TriadSpec& triad, const PdeSpec& pde) {
  validate_pde(pde);
  const Element a = e2(alg, triad), b = e3(alg, triad);
  Element out = Element::Zero(alg.n());
  for (const PdeTerm& t : pde.terms) {
    out += t.c * multiply(alg, power(alg, a, t.beta), power(alg, b, t.gamma));
  }
  return out;
}

double p_poly(const PdeSpec& pde, double a, double b) {
  double out = 0.0;
  for (const PdeTerm& t : pde.terms) out += t.c * std::pow(a, t.beta) * std::pow(b, t.gamma);
  return out;
}

std::string ScanResult::to_string() const {
  if (!zero_found) return "NoZeroFound";
  char buf[96];
  std::snprintf(buf, sizeof buf, "ZeroAt(%.6g, %.6g)", a + 0.0, b + 0.0);
  return buf;
}

ScanResult p_nonvanishing_scan(const PdeSpec& pde, double bound, int grid) {
  validate_pde(pde);
  grid = std::max(grid, 2);
  auto near_zero = [&](double a, double b) {
    return std::abs(p_poly(pde, a, b)) <= 1e-9 * std::max(magnitude_at(pde, a, b), 1e-300);
  };
  const double p0 = p_poly(pde, 0.0, 0.0);
  if (near_zero(0.0, 0.0)) return {true, 0.0, 0.0};
  const int sign0 = sign_of(p0);

  // root of P on the segment s * (da, db), s in [lo, hi], with P(lo) of sign0
  auto bisect = [&](double da, double db, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
      const double mid = 0.5 * (lo + hi);
      if (sign_of(p_poly(pde, mid * da, mid * db)) == sign0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    const double s = 0.5 * (lo + hi);
    return ScanResult{true, s * da, s * db};
  };

  const int directions = std::max(64, 4 * grid);
  for (int j = 0; j < directions; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / directions;
    const double da = std::cos(theta), db = std::sin(theta);
    const double reach = bound / std::max(std::abs(da), std::abs(db));
    double prev = 0.0;
    for (int i = 1; i < grid; ++i) {
      const double s = reach * i / (grid - 1);
      const double a = s * da, b = s * db;
      if (near_zero(a, b)) return {true, a, b};
      if (sign_of(p_poly(pde, a, b)) != sign0) return bisect(da, db, prev, s);
      prev = s;
    }
  }

  for (int i = 0; i < grid; ++i) {
    const double a = -bound + 2.0 * bound * i / (grid - 1);
    for (int k = 0; k < grid; ++k) {
      const double b = -bound + 2.0 * bound * k / (grid - 1);
      if (near_zero(a, b)) return {true, a, b};
      if (sign_of(p_poly(pde, a, b)) != sign0) return bisect(a, b, 0.0, 1.0);
    }
  }

  // beyond the box: the leading form decides the sign far along each ray
  int degree = 0;
  double total = 0.0;
  for (const PdeTerm& t : pde.terms) {
    if (t.c != 0.0) degree = std::max(degree, t.beta + t.gamma);
    total += std::abs(t.c);
  }
  for (int j = 0; j < directions; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / directions;
    const double da = std::cos(theta), db = std::sin(theta);
    const double lead = leading_form(pde, degree, da, db);
    if (std::abs(lead) <= 1e-12 * total || sign_of(lead) == sign0) continue;
    double lo = 0.0, hi = bound;
    while (hi < 1e12 && sign_of(p_poly(pde, hi * da, hi * db)) == sign0) {
      lo = hi;
      hi *= 2.0;
    }
    if (sign_of(p_poly(pde, hi * da, hi * db)) != sign0) return bisect(da, db, lo, hi);
  }
  return {};
}

double default_fd_step(int order) { return order <= 3 ? 1e-3 : 1e-2; }

FdResult apply_operator_fd(const Field& phi, const PdeSpec& pde, const PointR3& p, const FdOptions& opts) {
  validate_pde(pde);
  if (opts.richardson) {
    const FdResult coarse = apply_operator_fd(phi, pde, p, {opts.h, false});
    const FdResult fine = apply_operator_fd(phi, pde, p, {0.5 * opts.h, false});
    return {(4.0 * fine.value - coarse.value) / 3.0, std::max(coarse.scale, fine.scale)};
  }
  const double h = opts.h;
  std::map<std::array<int, 3>, double> stencil;
  for (const PdeTerm& t : pde.terms) {
    const auto wx = central_weights(t.alpha), wy = central_weights(t.beta), wz = central_weights(t.gamma);
    for (const auto& [ox, cx] : wx) {
      for (const auto& [oy, cy] : wy) {
        for (const auto& [oz, cz] : wz) stencil[{ox, oy, oz}] += t.c * cx * cy * cz;
      }
    }
  }
  FdResult out;
  double peak = 0.0;
  for (const auto& [offset, w] : stencil) {
    if (w == 0.0) continue;
    const Element v = phi(p + PointR3{offset[0] * h, offset[1] * h, offset[2] * h});
    peak = std::max(peak, v.cwiseAbs().maxCoeff());
    if (out.value.size() == 0) out.value = Element::Zero(v.size());
    out.value += w * v;
  }
  out.value /= std::pow(h, pde.order);
  out.scale = 1.0 + peak;
  return out;
}

FdResult pde_residual(const MonogenicSpec& ms, const PdeSpec& pde, const PointR3& p, const FdOptions& opts) {
  return apply_operator_fd([&](const PointR3& q) { return eval_explicit(ms, q); }, pde, p, opts);
}

FdResult operator_identity_check(const MonogenicSpec& ms, const PdeSpec& pde, const PointR3& p,
                                 const FdOptions& opts, const QuadratureOptions& quad) {
  const Element symbol = characteristic_residual(ms.algebra, ms.triad, pde);
  const Element lhs = multiply(ms.algebra, gateaux_derivative(ms, p, pde.order, quad), symbol);
  const FdResult rhs = pde_residual(ms, pde, p, opts);
  return {lhs - rhs.value, rhs.scale + lhs.cwiseAbs().maxCoeff()};
}

}  // namespace monogenica
