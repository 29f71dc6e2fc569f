#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "monogenica/monogenic.hpp"
#include "monogenica/pde.hpp"

namespace fixtures {

using namespace monogenica;
using namespace std::complex_literals;

inline const double kSqrt2 = std::sqrt(2.0);
inline const double kSqrt3 = std::sqrt(3.0);

inline Element vec(std::initializer_list<Complex> xs) {
  Element out(Eigen::Index(xs.size()));
  Eigen::Index i = 0;
  for (Complex x : xs) out(i++) = x;
  return out;
}

// Semi-simple C + C.
inline AlgebraSpec ss2() { return AlgebraSpec(2, 2, {}, {}); }

// Dual numbers: I_1 = 1, I_2^2 = 0.
inline AlgebraSpec d2() { return AlgebraSpec(2, 1, {}, {{2, 1}}); }

// C[rho]/rho^4 with I_k = rho^{k-1}, written out by hand.
inline AlgebraSpec t4() {
  return AlgebraSpec(4, 1, {{2, 2, 3, 1.0}, {2, 3, 4, 1.0}}, {{2, 1}, {3, 1}, {4, 1}});
}

// Two idempotents, one radical direction each, all radical products zero.
inline AlgebraSpec p2() { return AlgebraSpec(4, 2, {}, {{3, 1}, {4, 2}}); }

inline AlgebraSpec c5() {
  const int blocks[] = {5};
  return make_truncated_sum(blocks);
}

// C[rho]/rho^2 (+) C[rho]/rho^3: the General case.
inline AlgebraSpec g5() {
  const int blocks[] = {2, 3};
  return make_truncated_sum(blocks);
}

struct Fixture {
  std::string name;
  AlgebraSpec algebra;
  TriadSpec triad;
};

inline std::vector<Fixture> all_fixtures() {
  return {
      {"SS2", ss2(), {vec({2.0i, 1.0i}), vec({kSqrt3, 0.0})}},
      {"D2", d2(), {vec({1.0i, 1.0}), vec({0.0, 1.0i})}},
      {"T4", t4(), {vec({1.0i, 1.0, 0.0, 0.0}), vec({1.0, 0.0, 1.0, 0.0})}},
      {"P2", p2(), {vec({1.0i, 2.0i, 1.0, 0.0}), vec({1.0, 0.0, 0.0, 1.0})}},
      {"C5", c5(), {vec({1.0i, 1.0, 0.5i, 0.0, 0.25}), vec({1.0, 0.5, 1.0, 1.0i, 0.0})}},
      {"G5", g5(), {vec({1.0i, 0.5 + 2.0i, 1.0, 1.0, 0.0}), vec({1.0, 0.5i, 0.5, 1.0, 1.0})}},
  };
}

// Harmonic triads: e_1^2 + e_2^2 + e_3^2 = 0.
inline TriadSpec harmonic_ss2() { return {vec({2.0i, 1.0i}), vec({kSqrt3, 0.0})}; }
inline TriadSpec harmonic_d2() { return {vec({1.0i * kSqrt2, 1.0}), vec({1.0, -1.0i * kSqrt2})}; }
inline TriadSpec harmonic_t4() {
  return {vec({1.0i * kSqrt2, 1.0, 0.0, 0.0}), vec({1.0, -1.0i * kSqrt2, 0.5, 1.0i / kSqrt2})};
}

// Order-3 operator d_x^3 + d_x d_y^2 + d_x d_z^2 and order-5 operator
// d_x^5 + d_x^3 d_y^2 + d_x d_y^2 d_z^2, with P = 1 + a^2 + b^2 and 1 + a^2 + a^2 b^2.
inline PdeSpec order3_pde() { return {3, {{3, 0, 0, 1.0}, {1, 2, 0, 1.0}, {1, 0, 2, 1.0}}}; }
inline PdeSpec order5_pde() { return {5, {{5, 0, 0, 1.0}, {3, 2, 0, 1.0}, {1, 2, 2, 1.0}}}; }
inline PdeSpec wave_pde() { return {2, {{2, 0, 0, 1.0}, {0, 2, 0, -1.0}}}; }

// Characteristic triads for the two operators above, in C + C:
// order 3 shares the Laplace condition; order 5 needs 1 + a^2 + a^2 b^2 = 0.
inline TriadSpec order3_triad() { return harmonic_ss2(); }
inline TriadSpec order5_triad() { return {vec({1.0i, 1.0i / kSqrt2}), vec({0.0, 1.0})}; }

inline HoloFn square() { return HoloFn::polynomial({0.0, 0.0, 1.0}); }

// Deterministic mix of function kinds, one per slot.
inline MonogenicSpec sample_spec(const Fixture& fx) {
  const int n = fx.algebra.n(), m = fx.algebra.m();
  std::vector<HoloFn> f, g;
  for (int u = 1; u <= m; ++u) {
    switch (u % 3) {
      case 1: f.push_back(HoloFn(ExpFn{}, 1.0, 0.5 + 0.25i, 0.1)); break;
      case 2: f.push_back(HoloFn(SinFn{}, 2.0, 1.0, -0.3i)); break;
      default: f.push_back(HoloFn::polynomial({1.0, -1.0i, 0.5, 0.25})); break;
    }
  }
  for (int s = m + 1; s <= n; ++s) {
    switch (s % 3) {
      case 0: g.push_back(HoloFn(CosFn{}, 0.5i, 0.75)); break;
      case 1: g.push_back(HoloFn::polynomial({0.3, 0.2, -0.1i, 0.05, 0.01})); break;
      default: g.push_back(HoloFn(ExpFn{}, -1.0, 0.3i)); break;
    }
  }
  return {fx.algebra, fx.triad, std::move(f), std::move(g)};
}

inline double min_xi_separation(const TriadSpec& triad, const PointR3& p, int m) {
  double best = std::numeric_limits<double>::infinity();
  for (int u = 1; u <= m; ++u) {
    for (int v = u + 1; v <= m; ++v) {
      const double d = std::abs(xi(triad, p, u) - xi(triad, p, v));
      if (d > 0.0) best = std::min(best, d);
    }
  }
  return best;
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine); }
  Complex complex_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }
  PointR3 point(double r) { return {uniform(-r, r), uniform(-r, r), uniform(-r, r)}; }

  // Points whose distinct xi values are at least `sep` apart.
  PointR3 separated_point(const TriadSpec& triad, int m, double r, double sep) {
    while (true) {
      const PointR3 p = point(r);
      if (min_xi_separation(triad, p, m) >= sep) return p;
    }
  }

  TriadSpec triad(const AlgebraSpec& alg) {
    while (true) {
      TriadSpec t{Element(alg.n()), Element(alg.n())};
      for (int k = 0; k < alg.n(); ++k) {
        t.a(k) = complex_box(1.0);
        t.b(k) = complex_box(1.0);
      }
      if (validate_triad(alg, t).ok()) return t;
    }
  }

  Complex off_spectrum(const Eigen::VectorXcd& xis, double sep) {
    while (true) {
      const Complex t = xis(Eigen::Index(engine() % std::uint64_t(xis.size()))) + complex_box(2.0);
      bool ok = true;
      for (Eigen::Index u = 0; u < xis.size(); ++u) ok = ok && std::abs(t - xis(u)) >= sep;
      if (ok) return t;
    }
  }
};

}  // namespace fixtures
