#pragma once

// Reference implementations that avoid the library's product tables, Q-tables
// and contour code. Slow and straightforward on purpose.

#include <span>
#include <vector>

#include "monogenica/monogenic.hpp"

namespace oracles {

using namespace monogenica;

// Product straight from the three multiplication rules of the Cartan basis.
inline Element rule_multiply(const AlgebraSpec& alg, const Element& a, const Element& b) {
  const int n = alg.n(), m = alg.m();
  Element out = Element::Zero(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const Complex w = a(i - 1) * b(j - 1);
      if (w == Complex(0.0)) continue;
      if (i <= m && j <= m) {
        if (i == j) out(i - 1) += w;
      } else if (i <= m) {
        if (alg.u_of(j) == i) out(j - 1) += w;
      } else if (j <= m) {
        if (alg.u_of(i) == j) out(i - 1) += w;
      } else {
        for (int k = std::max(i, j) + 1; k <= n; ++k) out(k - 1) += w * alg.upsilon(i, j, k);
      }
    }
  }
  return out;
}

// Product in a direct sum of C[rho]/rho^k blocks, laid out like make_truncated_sum.
inline Element block_poly_multiply(std::span<const int> blocks, const Element& a, const Element& b) {
  const int m = int(blocks.size());
  Element out = Element::Zero(a.size());
  int offset = m;
  for (int u = 0; u < m; ++u) {
    const int k = blocks[std::size_t(u)];
    auto coeff = [&](const Element& v, int deg) { return deg == 0 ? v(u) : v(offset + deg - 1); };
    for (int d = 0; d < k; ++d) {
      Complex acc = 0.0;
      for (int i = 0; i <= d; ++i) acc += coeff(a, i) * coeff(b, d - i);
      if (d == 0) {
        out(u) = acc;
      } else {
        out(offset + d - 1) = acc;
      }
    }
    offset += k - 1;
  }
  return out;
}

// N_u = I_u zeta - xi_u I_u, nilpotent.
inline Element nilpotent_part(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, int u) {
  const Element iu = basis(alg, u);
  return rule_multiply(alg, iu, embed(alg, triad, p)) - xi(triad, p, u) * iu;
}

// (t - zeta)^{-1} = sum_u sum_j N_u^j / (t - xi_u)^{j+1}, with N_u^0 = I_u.
inline Element geometric_resolvent(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, Complex t) {
  Element out = Element::Zero(alg.n());
  for (int u = 1; u <= alg.m(); ++u) {
    const Element nu = nilpotent_part(alg, triad, p, u);
    const Complex d = t - xi(triad, p, u);
    Element term = basis(alg, u);
    for (int j = 0; j <= alg.n(); ++j) {
      out += term / std::pow(d, j + 1);
      term = rule_multiply(alg, term, nu);
    }
  }
  return out;
}

// Holomorphic functional calculus through Taylor expansion around each xi_u:
// Phi^{(r)} = sum_u sum_j F_u^{(j+r)}(xi_u)/j! N_u^j + sum_s sum_j G_s^{(j+r)}(xi_{u_s})/j! I_s N_{u_s}^j.
inline Element taylor_monogenic(const MonogenicSpec& ms, const PointR3& p, int r = 0) {
  const AlgebraSpec& alg = ms.algebra;
  const int n = alg.n(), m = alg.m();
  std::vector<std::vector<Element>> powers(std::size_t(m + 1));
  for (int u = 1; u <= m; ++u) {
    const Element nu = nilpotent_part(alg, ms.triad, p, u);
    Element term = basis(alg, u);
    for (int j = 0; j <= n - m; ++j) {
      powers[std::size_t(u)].push_back(term);
      term = rule_multiply(alg, term, nu);
    }
  }
  Element out = Element::Zero(n);
  double fact = 1.0;
  for (int j = 0; j <= n - m; ++j) {
    if (j > 0) fact *= j;
    for (int u = 1; u <= m; ++u) {
      out += ms.F[std::size_t(u - 1)].derivative(j + r, xi(ms.triad, p, u)) / fact * powers[std::size_t(u)][std::size_t(j)];
    }
    for (int s = m + 1; s <= n; ++s) {
      const int us = alg.u_of(s);
      const Element is_nj = rule_multiply(alg, basis(alg, s), powers[std::size_t(us)][std::size_t(j)]);
      out += ms.g_at(s).derivative(j + r, xi(ms.triad, p, us)) / fact * is_nj;
    }
  }
  return out;
}

// exp(zeta) as a power series truncated at 40 terms.
inline Element exp_series(const AlgebraSpec& alg, const Element& zeta) {
  Element out = Element::Zero(alg.n());
  Element term = unit(alg);
  for (int k = 0; k < 40; ++k) {
    out += term;
    term = rule_multiply(alg, term, zeta) / double(k + 1);
  }
  return out;
}

inline double max_abs(const Element& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace oracles
