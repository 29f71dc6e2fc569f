#pragma once

#include <array>
#include <functional>
#include <vector>

#include "monogenica/algebra.hpp"
#include "monogenica/holo.hpp"
#include "monogenica/resolvent.hpp"
#include "monogenica/triad.hpp"

namespace monogenica {

/// Holomorphic data fixing one monogenic function: F[u-1] for each idempotent,
/// G[s-m-1] for each radical index s.
///
/// The domain hypothesis (convexity in the directions of the lines L_u) is not
/// checked anywhere. Evaluation is pointwise; callers keep their points inside
/// the region where each HoloFn is holomorphic.
struct MonogenicSpec {
  AlgebraSpec algebra;
  TriadSpec triad;
  std::vector<HoloFn> F;
  std::vector<HoloFn> G;

  const HoloFn& g_at(int s) const { return G[std::size_t(s - algebra.m() - 1)]; }
};

/// Algebra axioms, triad conditions and function counts.
ValidationReport validate_monogenic(const MonogenicSpec& ms);

/// Series form: every contour integral replaced by derivatives of F_u and G_s
/// weighted by the Q-table. `order` r > 0 gives the Gateaux derivative Phi^{(r)}
/// by shifting every derivative order by r.
Element eval_explicit(const MonogenicSpec& ms, const PointR3& p, int order = 0);

/// Contour-integral form, one circle per distinct xi value. Points where several
/// xi_u coincide exactly share a contour. Throws CoincidentSpectrum when two
/// distinct values are within 1e-10.
Element eval_integral(const MonogenicSpec& ms, const PointR3& p, const QuadratureOptions& opts = {},
                      QuadratureReport* report = nullptr);

/// Closed forms for semi-simple algebras and for single-u or pairwise-distinct-u radicals.
/// Throws NotSpecial for General algebras.
Element eval_special(const MonogenicSpec& ms, const PointR3& p, int order = 0);

/// Phi^{(r)} = sum_u I_u r!/(2 pi i) int F_u(t) R(t)^{r+1} dt + the same with
/// I_s, G_s, where R(t) = (t e_1 - zeta)^{-1}.
Element gateaux_derivative(const MonogenicSpec& ms, const PointR3& p, int r,
                           const QuadratureOptions& opts = {}, QuadratureReport* report = nullptr);

using Field = std::function<Element(const PointR3&)>;

struct CrResidual {
  Element dy;  // dPhi/dy - (dPhi/dx) e_2
  Element dz;  // dPhi/dz - (dPhi/dx) e_3
  double scale = 1.0;  // 1 + max |Phi| over the stencil

  double max_abs() const { return std::max(dy.cwiseAbs().maxCoeff(), dz.cwiseAbs().maxCoeff()); }
};

/// Central differences with step h.
CrResidual cr_residual(const AlgebraSpec& alg, const TriadSpec& triad, const Field& phi,
                       const PointR3& p, double h);
CrResidual cr_residual(const MonogenicSpec& ms, const PointR3& p, double h = 1e-5);

struct GateauxResidual {
  std::array<Element, 3> by_direction;  // h = e_1, e_2, e_3
  double scale = 1.0;                   // 1 + |Phi| + |Phi'|

  double max_abs() const;
};

/// (Phi(zeta + eps h) - Phi(zeta)) / eps - h Phi'(zeta) for the three triad
/// directions, with Phi from eval_explicit and Phi' from gateaux_derivative.
GateauxResidual gateaux_definition_residual(const MonogenicSpec& ms, const PointR3& p, double eps = 1e-6,
                                            const QuadratureOptions& opts = {});

/// U_k such that v = sum_k U_k I_k.
std::vector<Complex> extract_components(const Element& v);

}  // namespace monogenica
