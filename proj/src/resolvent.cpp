#include "monogenica/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace monogenica {

Element t_coeffs(const AlgebraSpec& alg, const TriadSpec& triad, double y, double z) {
  if (triad.a.size() != alg.n() || triad.b.size() != alg.n()) {
    throw DimensionMismatch("t_coeffs: triad length mismatch");
  }
  Element t = Element::Zero(alg.n());
  for (int s = alg.m() + 1; s <= alg.n(); ++s) t(s - 1) = y * triad.a(s - 1) + z * triad.b(s - 1);
  return t;
}

IndexTable b_coeffs(const AlgebraSpec& alg, const Element& t) {
  const int n = alg.n(), m = alg.m();
  IndexTable b(n, n);
  for (int p = m + 2; p <= n; ++p) {
    for (int r = m + 1; r <= p - 1; ++r) {
      Complex sum = 0.0;
      for (int s = m + 1; s <= p - 1; ++s) sum += t(s - 1) * alg.upsilon(r, s, p);
      b(r, p) = sum;
    }
  }
  return b;
}

IndexTable q_table(const AlgebraSpec& alg, const Element& t, const IndexTable& b) {
  const int n = alg.n(), m = alg.m();
  IndexTable q(std::max(2, n - m + 1), n);
  for (int s = m + 1; s <= n; ++s) {
    q(2, s) = t(s - 1);
    for (int k = 3; k <= s - m + 1; ++k) {
      Complex sum = 0.0;
      // Q_{k-1,r} vanishes for k-1 > r-m+1, i.e. r < k+m-2
      for (int r = std::max(m + 1, k + m - 2); r <= s - 1; ++r) sum += q(k - 1, r) * b(r, s);
      q(k, s) = sum;
    }
  }
  return q;
}

ResolventExpansion expand_resolvent(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p) {
  ResolventExpansion ex;
  ex.xi.resize(alg.m());
  for (int u = 1; u <= alg.m(); ++u) ex.xi(u - 1) = xi(triad, p, u);
  ex.t_vals = t_coeffs(alg, triad, p.y, p.z);
  ex.b_vals = b_coeffs(alg, ex.t_vals);
  ex.q_vals = q_table(alg, ex.t_vals, ex.b_vals);
  return ex;
}

void require_off_spectrum(const Eigen::VectorXcd& xi, Complex t) {
  const double tol = 1e-12 * std::max(1.0, std::abs(t));
  for (Eigen::Index u = 0; u < xi.size(); ++u) {
    if (std::abs(t - xi(u)) <= tol) {
      throw OnSpectrum("t coincides with xi_" + std::to_string(u + 1));
    }
  }
}

Element resolvent_recurrence(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, Complex t) {
  const int n = alg.n(), m = alg.m();
  Eigen::VectorXcd xs(m);
  for (int u = 1; u <= m; ++u) xs(u - 1) = xi(triad, p, u);
  require_off_spectrum(xs, t);

  const Element tv = t_coeffs(alg, triad, p.y, p.z);
  const IndexTable b = b_coeffs(alg, tv);
  Element a = Element::Zero(n);
  for (int u = 1; u <= m; ++u) a(u - 1) = 1.0 / (t - xs(u - 1));
  for (int q = m + 1; q <= n; ++q) {
    const Complex d = t - xs(alg.u_of(q) - 1);
    Complex tail = 0.0;
    for (int r = m + 1; r <= q - 1; ++r) tail += a(r - 1) * b(r, q);
    a(q - 1) = tv(q - 1) / (d * d) + tail / d;
  }
  return a;
}

Element resolvent_closed(const AlgebraSpec& alg, const ResolventExpansion& ex, Complex t) {
  require_off_spectrum(ex.xi, t);
  const int n = alg.n(), m = alg.m();
  Element out = Element::Zero(n);
  for (int u = 1; u <= m; ++u) out(u - 1) = 1.0 / (t - ex.xi(u - 1));
  for (int s = m + 1; s <= n; ++s) {
    const Complex inv = 1.0 / (t - ex.xi(alg.u_of(s) - 1));
    Complex pw = inv;
    Complex sum = 0.0;
    for (int k = 2; k <= s - m + 1; ++k) {
      pw *= inv;
      sum += ex.q_vals(k, s) * pw;
    }
    out(s - 1) = sum;
  }
  return out;
}

Element resolvent_closed(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p, Complex t) {
  return resolvent_closed(alg, expand_resolvent(alg, triad, p), t);
}

std::vector<Lemma2Violation> lemma2_audit(const AlgebraSpec& alg, const IndexTable& b) {
  std::vector<Lemma2Violation> out;
  for (int p = alg.m() + 2; p <= alg.n(); ++p) {
    for (int r = alg.m() + 1; r <= p - 1; ++r) {
      if (std::abs(b(r, p)) > 1e-14 && alg.u_of(r) != alg.u_of(p)) out.push_back({r, p, b(r, p)});
    }
  }
  return out;
}

Eigen::Vector3d LineL::direction() const {
  const Eigen::Vector3d d = normal_re.cross(normal_im);
  // degenerate when a_u and b_u are both real: the set is a plane, not a line
  if (d.norm() == 0.0) return Eigen::Vector3d::Zero();
  return d.normalized();
}

bool LineL::contains(const PointR3& p, double tol) const {
  const Eigen::Vector3d v(p.x, p.y, p.z);
  const double scale = std::max(1.0, v.cwiseAbs().maxCoeff());
  // |xi_u| is the modulus of (normal_re . v) + i (normal_im . v)
  return std::hypot(normal_re.dot(v), normal_im.dot(v)) <= tol * scale;
}

std::vector<LineL> noninvertible_lines(const AlgebraSpec& alg, const TriadSpec& triad) {
  std::vector<LineL> lines;
  for (int u = 1; u <= alg.m(); ++u) {
    const Complex au = triad.a(u - 1), bu = triad.b(u - 1);
    lines.push_back({u, Eigen::Vector3d(1.0, au.real(), bu.real()),
                     Eigen::Vector3d(0.0, au.imag(), bu.imag())});
  }
  return lines;
}

}  // namespace monogenica
