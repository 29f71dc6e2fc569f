#pragma once

#include <Eigen/Dense>

#include <vector>

#include "monogenica/algebra.hpp"
#include "monogenica/triad.hpp"

namespace monogenica {

/// Dense complex table addressed with 1-based (row, col) indices.
class IndexTable {
 public:
  IndexTable() = default;
  IndexTable(int rows, int cols) : data_(Eigen::MatrixXcd::Zero(rows, cols)) {}

  Complex& operator()(int i, int j) { return data_(i - 1, j - 1); }
  const Complex& operator()(int i, int j) const { return data_(i - 1, j - 1); }
  int rows() const { return int(data_.rows()); }
  int cols() const { return int(data_.cols()); }

 private:
  Eigen::MatrixXcd data_;
};

/// T_s = y a_s + z b_s for s in [m+1, n]. Returned as an n-vector with zero
/// idempotent slots; entry s - 1 holds T_s.
Element t_coeffs(const AlgebraSpec& alg, const TriadSpec& triad, double y, double z);

/// B_{r,p} = sum_{s=m+1}^{p-1} T_s Upsilon_{r,p}^{s}, stored for r in [m+1, p-1],
/// p in [m+2, n]; every other slot of the n x n table is zero.
IndexTable b_coeffs(const AlgebraSpec& alg, const Element& t);

/// Q_{2,s} = T_s, Q_{k,s} = sum_{r=m+1}^{s-1} Q_{k-1,r} B_{r,s} for k in [3, s-m+1].
/// Table shape (n-m+1) x n; slots with k > s-m+1 stay zero.
IndexTable q_table(const AlgebraSpec& alg, const Element& t, const IndexTable& b);

/// Everything about (t e_1 - zeta)^{-1} that depends on the point but not on t.
struct ResolventExpansion {
  Eigen::VectorXcd xi;  // xi_u at coefficient u - 1
  Element t_vals;
  IndexTable b_vals;
  IndexTable q_vals;
};

ResolventExpansion expand_resolvent(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p);

/// Throws OnSpectrum when |t - xi_u| <= 1e-12 max(1, |t|) for some u.
void require_off_spectrum(const Eigen::VectorXcd& xi, Complex t);

/// Coefficients A_r from the forward recurrence in r.
Element resolvent_recurrence(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, Complex t);

/// Partial-fraction assembly sum_u I_u/(t-xi_u) + sum_s sum_k Q_{k,s}/(t-xi_{u_s})^k I_s.
Element resolvent_closed(const AlgebraSpec& alg, const ResolventExpansion& ex, Complex t);
Element resolvent_closed(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, Complex t);

struct Lemma2Violation {
  int r;
  int p;
  Complex value;
};

/// Pairs with |B_{r,p}| > 1e-14 but u_r != u_p.
std::vector<Lemma2Violation> lemma2_audit(const AlgebraSpec& alg, const IndexTable& b);

/// Real line through the origin of points whose zeta is not invertible via f_u:
///   x + y Re a_u + z Re b_u = 0,   y Im a_u + z Im b_u = 0.
struct LineL {
  int u;
  Eigen::Vector3d normal_re;  // (1, Re a_u, Re b_u)
  Eigen::Vector3d normal_im;  // (0, Im a_u, Im b_u)

  /// Unit direction spanning the line (kernel of the two constraints).
  Eigen::Vector3d direction() const;
  bool contains(const PointR3& p, double tol = 1e-12) const;
};

std::vector<LineL> noninvertible_lines(const AlgebraSpec& alg, const TriadSpec& triad);

}  // namespace monogenica
