#include "monogenica/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace monogenica {

namespace {

std::string format_complex(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << z.real() << "," << z.imag() << ")";
  return os.str();
}

}  // namespace

std::string_view special_case_name(SpecialCase c) {
  switch (c) {
    case SpecialCase::SemiSimple: return "SemiSimple";
    case SpecialCase::Prop1: return "Prop1";
    case SpecialCase::Prop2: return "Prop2";
    case SpecialCase::General: return "General";
  }
  return "General";
}

AlgebraSpec::AlgebraSpec(int n, int m, const std::vector<StructureConstant>& upsilon,
                         std::map<int, int> u_map)
    : n_(n), m_(m), u_map_(std::move(u_map)) {
  if (n < 1 || m < 1 || m > n) {
    throw InvalidSpec("algebra dimensions must satisfy 1 <= m <= n (got n=" + std::to_string(n) +
                      ", m=" + std::to_string(m) + ")");
  }

  for (const StructureConstant& raw : upsilon) {
    const bool r_ok = raw.r > m_ && raw.r <= n_;
    const bool s_ok = raw.s > m_ && raw.s <= n_;
    const bool k_ok = raw.k >= 1 && raw.k <= n_;
    if (!r_ok || !s_ok || !k_ok) {
      load_issues_.push_back({Check::IndexRange, {raw.r, raw.s, raw.k},
                              "structure constant indices outside the nilpotent range"});
      continue;
    }
    StructureConstant c{std::min(raw.r, raw.s), std::max(raw.r, raw.s), raw.k, raw.value};
    if (c.k <= c.s) {
      load_issues_.push_back({Check::Triangularity, {raw.r, raw.s, raw.k},
                              "output index must exceed max(r, s)"});
    }
    auto same_slot = [&](const StructureConstant& e) {
      return e.r == c.r && e.s == c.s && e.k == c.k;
    };
    auto it = std::find_if(upsilon_.begin(), upsilon_.end(), same_slot);
    if (it == upsilon_.end()) {
      upsilon_.push_back(c);
    } else if (it->value != c.value) {
      load_issues_.push_back({Check::Symmetry, {raw.r, raw.s, raw.k},
                              "conflicting values " + format_complex(it->value) + " and " +
                                  format_complex(c.value)});
    }
  }

  products_.assign(std::size_t(n_) * std::size_t(n_), {});
  auto slot = [&](int i, int j) -> std::vector<ProductTerm>& {
    return products_[std::size_t(i - 1) * std::size_t(n_) + std::size_t(j - 1)];
  };
  for (int u = 1; u <= m_; ++u) slot(u, u).push_back({u, Complex(1.0)});
  for (int s = m_ + 1; s <= n_; ++s) {
    const int u = u_of(s);
    if (u >= 1 && u <= m_) {
      slot(u, s).push_back({s, Complex(1.0)});
      slot(s, u).push_back({s, Complex(1.0)});
    }
  }
  for (const StructureConstant& c : upsilon_) {
    if (c.value == Complex(0.0)) continue;
    slot(c.r, c.s).push_back({c.k, c.value});
    if (c.r != c.s) slot(c.s, c.r).push_back({c.k, c.value});
  }
  for (auto& terms : products_) {
    std::sort(terms.begin(), terms.end(),
              [](const ProductTerm& a, const ProductTerm& b) { return a.index < b.index; });
  }
}

Complex AlgebraSpec::upsilon(int r, int s, int k) const {
  const int lo = std::min(r, s), hi = std::max(r, s);
  for (const auto& c : upsilon_) {
    if (c.r == lo && c.s == hi && c.k == k) return c.value;
  }
  return Complex(0.0);
}

int AlgebraSpec::u_of(int s) const {
  auto it = u_map_.find(s);
  return it == u_map_.end() ? 0 : it->second;
}

const std::vector<ProductTerm>& AlgebraSpec::basis_product(int i, int j) const {
  return products_[std::size_t(i - 1) * std::size_t(n_) + std::size_t(j - 1)];
}

double AlgebraSpec::max_abs_upsilon() const {
  double out = 0.0;
  for (const auto& c : upsilon_) out = std::max(out, std::abs(c.value));
  return out;
}

AlgebraSpec make_truncated_sum(std::span<const int> block_sizes) {
  if (block_sizes.empty()) throw InvalidSpec("make_truncated_sum: need at least one block");
  const int m = int(block_sizes.size());
  int n = 0;
  for (int k : block_sizes) {
    if (k < 1) throw InvalidSpec("make_truncated_sum: block sizes must be positive");
    n += k;
  }
  std::vector<StructureConstant> upsilon;
  std::map<int, int> u_map;
  int start = m + 1;  // basis index of rho_b^1
  for (int b = 0; b < m; ++b) {
    const int k = block_sizes[std::size_t(b)];
    for (int i = 1; i < k; ++i) {
      u_map[start + i - 1] = b + 1;
      for (int j = i; i + j < k; ++j) {
        upsilon.push_back({start + i - 1, start + j - 1, start + i + j - 1, Complex(1.0)});
      }
    }
    start += k - 1;
  }
  return AlgebraSpec(n, m, upsilon, std::move(u_map));
}

Element basis(const AlgebraSpec& alg, int k) {
  if (k < 1 || k > alg.n()) throw std::out_of_range("basis index out of range");
  Element e = Element::Zero(alg.n());
  e(k - 1) = 1.0;
  return e;
}

Element unit(const AlgebraSpec& alg) {
  Element e = Element::Zero(alg.n());
  e.head(alg.m()).setOnes();
  return e;
}

Element power(const AlgebraSpec& alg, const Element& a, int k) {
  if (k < 0) throw std::invalid_argument("power: exponent must be nonnegative");
  Element out = unit(alg);
  for (int i = 0; i < k; ++i) out = multiply(alg, out, a);
  return out;
}

Complex functional_f(const AlgebraSpec& alg, int u, const Element& a) {
  if (u < 1 || u > alg.m()) {
    throw std::out_of_range("functional_f: idempotent index " + std::to_string(u) +
                            " outside [1, " + std::to_string(alg.m()) + "]");
  }
  if (a.size() != alg.n()) throw DimensionMismatch("functional_f: element length mismatch");
  return a(u - 1);
}

Element radical_project(const AlgebraSpec& alg, const Element& a) {
  if (a.size() != alg.n()) throw DimensionMismatch("radical_project: element length mismatch");
  Element out = a;
  out.head(alg.m()).setZero();
  return out;
}

Eigen::MatrixXcd multiplication_matrix(const AlgebraSpec& alg, const Element& a) {
  Eigen::MatrixXcd mat(alg.n(), alg.n());
  for (int j = 1; j <= alg.n(); ++j) mat.col(j - 1) = multiply(alg, a, basis(alg, j));
  return mat;
}

Element invert(const AlgebraSpec& alg, const Element& a) {
  if (a.size() != alg.n()) throw DimensionMismatch("invert: element length mismatch");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  for (int u = 1; u <= alg.m(); ++u) {
    if (std::abs(a(u - 1)) <= 1e-14 * scale) {
      throw SingularElement("invert: f_" + std::to_string(u) + "(a) = 0");
    }
  }
  const Eigen::MatrixXcd mat = multiplication_matrix(alg, a);
  const Element rhs = unit(alg);
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(mat);
  Element x = lu.solve(rhs);
  x += lu.solve(Element(rhs - mat * x));  // one refinement step
  return x;
}

ValidationReport validate_algebra(const AlgebraSpec& alg) {
  ValidationReport report;
  report.violations = alg.load_issues();
  const int n = alg.n(), m = alg.m();

  for (const auto& [s, u] : alg.u_map()) {
    if (s <= m || s > n) {
      report.violations.push_back({Check::IndexRange, {s}, "u_map key outside [m+1, n]"});
    } else if (u < 1 || u > m) {
      report.violations.push_back(
          {Check::UnitAction, {s, u}, "u_s must lie in [1, " + std::to_string(m) + "]"});
    }
  }
  for (int s = m + 1; s <= n; ++s) {
    if (alg.u_map().find(s) == alg.u_map().end()) {
      report.violations.push_back({Check::UnitAction, {s}, "no idempotent acts as identity on I_s"});
    }
  }

  const double scale = std::max(1.0, alg.max_abs_upsilon());
  const double tol = 1e-12 * scale * scale;
  auto mismatch = [&](const Element& lhs, const Element& rhs) {
    return (lhs - rhs).cwiseAbs().maxCoeff() > tol;
  };

  for (int r = m + 1; r <= n; ++r) {
    const Element ir = basis(alg, r);
    for (int s = m + 1; s <= n; ++s) {
      const Element rs = multiply(alg, ir, basis(alg, s));
      for (int p = m + 1; p <= n; ++p) {
        const Element ip = basis(alg, p);
        const Element lhs = multiply(alg, rs, ip);
        const Element rhs = multiply(alg, ir, multiply(alg, basis(alg, s), ip));
        if (mismatch(lhs, rhs)) {
          report.violations.push_back({Check::Associativity1, {r, s, p}, "(I_r I_s) I_p != I_r (I_s I_p)"});
        }
      }
    }
  }
  for (int u = 1; u <= m; ++u) {
    const Element iu = basis(alg, u);
    for (int s = m + 1; s <= n; ++s) {
      const Element us = multiply(alg, iu, basis(alg, s));
      for (int p = m + 1; p <= n; ++p) {
        const Element ip = basis(alg, p);
        const Element lhs = multiply(alg, us, ip);
        const Element rhs = multiply(alg, iu, multiply(alg, basis(alg, s), ip));
        if (mismatch(lhs, rhs)) {
          report.violations.push_back({Check::Associativity2, {u, s, p}, "(I_u I_s) I_p != I_u (I_s I_p)"});
        }
      }
    }
  }
  return report;
}

SpecialCase classify_special_case(const AlgebraSpec& alg) {
  if (alg.n() == alg.m()) return SpecialCase::SemiSimple;
  std::vector<int> us;
  for (int s = alg.m() + 1; s <= alg.n(); ++s) us.push_back(alg.u_of(s));
  const std::set<int> distinct(us.begin(), us.end());
  if (distinct.size() == us.size()) {
    for (const auto& c : alg.upsilon_entries()) {
      if (c.value != Complex(0.0)) {
        throw std::logic_error("classify_special_case: pairwise distinct u_s with nonzero nilpotent products");
      }
    }
    return SpecialCase::Prop2;
  }
  if (distinct.size() == 1) return SpecialCase::Prop1;
  return SpecialCase::General;
}

}  // namespace monogenica
