#pragma once

#include <Eigen/Dense>

#include <complex>
#include <map>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "monogenica/errors.hpp"
#include "monogenica/report.hpp"

namespace monogenica {

using Complex = std::complex<double>;

template <typename Scalar>
using ElementOf = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Coordinates over the basis {I_k}. Basis index k lives at coefficient k - 1.
using Element = ElementOf<Complex>;

// Entry of the nilpotent multiplication law: I_r I_s contains value * I_k,
// i.e. the structure constant written Upsilon_{r,k}^{s}. Indices are 1-based.
struct StructureConstant {
  int r;
  int s;
  int k;
  Complex value;
};

// One contribution of a basis product I_i I_j: value * I_{index}.
struct ProductTerm {
  int index;  // 1-based
  Complex value;
};

enum class SpecialCase { SemiSimple, Prop1, Prop2, General };

std::string_view special_case_name(SpecialCase c);

/// Multiplication law of a commutative associative algebra with unit in
/// Cartan form: idempotents I_1..I_m, radical basis I_{m+1}..I_n.
///
/// Construction only checks n and m. Every other defect (asymmetric or
/// out-of-range structure constants, broken associativity, missing unit
/// action) is kept and surfaced by validate_algebra().
class AlgebraSpec {
 public:
  AlgebraSpec(int n, int m, const std::vector<StructureConstant>& upsilon,
              std::map<int, int> u_map);

  int n() const { return n_; }
  int m() const { return m_; }
  bool is_idempotent(int k) const { return k >= 1 && k <= m_; }

  /// Upsilon_{r,k}^{s}; zero when absent. Symmetric in (r, s).
  Complex upsilon(int r, int s, int k) const;

  /// Canonical entries, r <= s.
  const std::vector<StructureConstant>& upsilon_entries() const { return upsilon_; }

  /// Idempotent index acting as identity on I_s, or 0 if the table gives none.
  int u_of(int s) const;
  const std::map<int, int>& u_map() const { return u_map_; }

  /// Expansion of I_i I_j (1-based, order-independent).
  const std::vector<ProductTerm>& basis_product(int i, int j) const;

  double max_abs_upsilon() const;

  /// Defects detected while canonicalizing the structure constants.
  const std::vector<Violation>& load_issues() const { return load_issues_; }

 private:
  int n_;
  int m_;
  std::vector<StructureConstant> upsilon_;
  std::map<int, int> u_map_;
  std::vector<Violation> load_issues_;
  std::vector<std::vector<ProductTerm>> products_;  // n*n, row-major, 0-based
};

/// Direct sum of truncated polynomial algebras C[rho]/rho^{k_i}, one idempotent per
/// block. Basis order: the m idempotents, then rho_1, rho_1^2, ..., rho_2, ...
AlgebraSpec make_truncated_sum(std::span<const int> block_sizes);

/// Basis vector I_k.
Element basis(const AlgebraSpec& alg, int k);

Element unit(const AlgebraSpec& alg);

/// Bilinear commutative product. Pairs (i, j) and (j, i) are accumulated as one
/// term a_i b_j + a_j b_i, so swapping the operands reproduces the result bit for bit.
template <typename DerivedA, typename DerivedB>
ElementOf<typename DerivedA::Scalar> multiply(const AlgebraSpec& alg,
                                              const Eigen::MatrixBase<DerivedA>& a,
                                              const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  static_assert(std::is_same_v<Scalar, typename DerivedB::Scalar>,
                "multiply: operands must share a scalar type");
  const Eigen::Index n = alg.n();
  if (a.size() != n || b.size() != n) {
    throw DimensionMismatch("multiply: operand length does not match algebra dimension " +
                            std::to_string(n));
  }
  ElementOf<Scalar> out = ElementOf<Scalar>::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const Scalar w = (i == j) ? Scalar(a(i) * b(i)) : Scalar(a(i) * b(j) + a(j) * b(i));
      if (w == Scalar(0)) continue;
      for (const ProductTerm& term : alg.basis_product(int(i) + 1, int(j) + 1)) {
        out(term.index - 1) += Scalar(term.value) * w;
      }
    }
  }
  return out;
}

/// a^k by repeated multiplication; a^0 is the unit.
Element power(const AlgebraSpec& alg, const Element& a, int k);

/// f_u(a): the u-th coordinate. Linear and multiplicative.
Complex functional_f(const AlgebraSpec& alg, int u, const Element& a);

/// Zeroes the idempotent coordinates.
Element radical_project(const AlgebraSpec& alg, const Element& a);

/// Matrix of x -> a x in the basis {I_k}.
Eigen::MatrixXcd multiplication_matrix(const AlgebraSpec& alg, const Element& a);

/// Solves a x = 1 as a dense linear system. Throws SingularElement when some
/// |f_u(a)| <= 1e-14 * max(1, |a|_inf).
Element invert(const AlgebraSpec& alg, const Element& a);

/// Checks symmetry, triangularity, (A1), (A2) and the unit action of rule 3.
ValidationReport validate_algebra(const AlgebraSpec& alg);

/// Most specific tag with priority SemiSimple > Prop2 > Prop1 > General.
/// Expects a valid algebra; throws std::logic_error if the u_s are pairwise
/// distinct but the nilpotent products do not vanish.
SpecialCase classify_special_case(const AlgebraSpec& alg);

}  // namespace monogenica
