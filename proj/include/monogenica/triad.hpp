#pragma once

#include "monogenica/algebra.hpp"

namespace monogenica {

/// A point of R^3.
struct PointR3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  PointR3 operator+(const PointR3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  PointR3 operator*(double s) const { return {x * s, y * s, z * s}; }
};

/// Coefficients of e_2 and e_3 over {I_k}; e_1 is the unit.
struct TriadSpec {
  Element a;
  Element b;
};

Element e1(const AlgebraSpec& alg);
Element e2(const AlgebraSpec& alg, const TriadSpec& triad);
Element e3(const AlgebraSpec& alg, const TriadSpec& triad);

/// Rank of {e_1, e_2, e_3} over R (real 2n x 3 matrix) and the surjectivity
/// condition Im a_u != 0 or Im b_u != 0 for every idempotent u.
ValidationReport validate_triad(const AlgebraSpec& alg, const TriadSpec& triad);

/// zeta = x e_1 + y e_2 + z e_3.
Element embed(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p);

/// xi_u = f_u(zeta) = x + y a_u + z b_u.
Complex xi(const TriadSpec& triad, const PointR3& p, int u);

}  // namespace monogenica
