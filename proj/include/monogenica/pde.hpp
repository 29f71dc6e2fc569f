#pragma once

#include <string>
#include <vector>

#include "monogenica/monogenic.hpp"

namespace monogenica {

/// One term C * d^N / (dx^alpha dy^beta dz^gamma).
struct PdeTerm {
  int alpha;
  int beta;
  int gamma;
  double c;
};

/// Homogeneous constant-coefficient operator L_N of total order N.
struct PdeSpec {
  int order;
  std::vector<PdeTerm> terms;
};

/// Throws InvalidSpec unless every term has nonnegative exponents summing to N
/// and there is at least one term.
void validate_pde(const PdeSpec& pde);

PdeSpec laplace_operator();

/// sum C e_2^beta e_3^gamma. Zero exactly when every component of a monogenic
/// function solves L_N U = 0.
Element characteristic_residual(const AlgebraSpec& alg, const TriadSpec& triad, const PdeSpec& pde);

/// P(a, b) = sum C a^beta b^gamma.
double p_poly(const PdeSpec& pde, double a, double b);

struct ScanResult {
  bool zero_found = false;
  double a = 0.0;
  double b = 0.0;

  std::string to_string() const;
};

/// Heuristic search for a real zero of P on [-bound, bound]^2: sign of P(0,0),
/// rays from the origin (first ray along +a), a near-zero test on a
/// grid x grid lattice, and a sign scan of the leading homogeneous part over
/// directions for zeros beyond the box. Not a proof of positivity.
ScanResult p_nonvanishing_scan(const PdeSpec& pde, double bound, int grid);

struct FdOptions {
  double h = 1e-3;
  bool richardson = false;  // combine steps h and h/2
};

/// Default step for an order-N stencil: 1e-3 up to N = 3, 1e-2 above.
double default_fd_step(int order);

struct FdResult {
  Element value;
  double scale = 1.0;  // 1 + max |Phi| over the stencil points
};

/// L_N applied to `phi` with tensor products of central difference stencils.
FdResult apply_operator_fd(const Field& phi, const PdeSpec& pde, const PointR3& p, const FdOptions& opts = {});

/// L_N applied to every component U_k of eval_explicit.
FdResult pde_residual(const MonogenicSpec& ms, const PdeSpec& pde, const PointR3& p, const FdOptions& opts = {});

/// Phi^{(N)} * characteristic_residual - L_N Phi (finite differences).
FdResult operator_identity_check(const MonogenicSpec& ms, const PdeSpec& pde, const PointR3& p,
                                 const FdOptions& opts = {}, const QuadratureOptions& quad = {});

}  // namespace monogenica
