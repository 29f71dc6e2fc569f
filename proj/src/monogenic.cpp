#include "monogenica/monogenic.hpp"

#include <algorithm>
#include <string>

namespace monogenica {

namespace {

void require_shapes(const MonogenicSpec& ms) {
  const int n = ms.algebra.n(), m = ms.algebra.m();
  if (int(ms.F.size()) != m || int(ms.G.size()) != n - m) {
    throw DimensionMismatch("monogenic spec needs " + std::to_string(m) + " F and " +
                            std::to_string(n - m) + " G functions");
  }
  if (ms.triad.a.size() != n || ms.triad.b.size() != n) {
    throw DimensionMismatch("triad length does not match algebra dimension");
  }
}

// Idempotents sharing one exact xi value.
struct SpectralCluster {
  Complex center;
  std::vector<int> members;  // idempotent indices u
};

std::vector<SpectralCluster> cluster_spectrum(const Eigen::VectorXcd& xi) {
  std::vector<SpectralCluster> clusters;
  for (Eigen::Index u = 0; u < xi.size(); ++u) {
    auto it = std::find_if(clusters.begin(), clusters.end(),
                           [&](const SpectralCluster& c) { return c.center == xi(u); });
    if (it == clusters.end()) {
      clusters.push_back({xi(u), {int(u) + 1}});
    } else {
      it->members.push_back(int(u) + 1);
    }
  }
  return clusters;
}

// Sum over clusters of (scale/2 pi i) int W(t) R(t)^{power} dt, where W(t) carries
// F_u(t) in slot u and G_s(t) in slot s for every index attached to the cluster.
Element integrate_clusters(const MonogenicSpec& ms, const PointR3& p, int power, double scale,
                           const QuadratureOptions& opts, QuadratureReport* report) {
  require_shapes(ms);
  const AlgebraSpec& alg = ms.algebra;
  const int n = alg.n(), m = alg.m();
  const ResolventExpansion ex = expand_resolvent(alg, ms.triad, p);
  const std::vector<SpectralCluster> clusters = cluster_spectrum(ex.xi);

  Element total = Element::Zero(n);
  for (const SpectralCluster& cluster : clusters) {
    std::vector<Complex> others;
    for (const SpectralCluster& c : clusters) {
      if (&c != &cluster) others.push_back(c.center);
    }
    const Contour contour = default_contour(cluster.center, others);

    std::vector<int> radical;
    for (int s = m + 1; s <= n; ++s) {
      if (std::find(cluster.members.begin(), cluster.members.end(), alg.u_of(s)) != cluster.members.end()) {
        radical.push_back(s);
      }
    }

    auto integrand = [&](Complex t) -> Element {
      Element weight = Element::Zero(n);
      for (int u : cluster.members) weight(u - 1) = ms.F[std::size_t(u - 1)](t);
      for (int s : radical) weight(s - 1) = ms.g_at(s)(t);
      const Element r = resolvent_closed(alg, ex, t);
      Element rp = r;
      for (int i = 1; i < power; ++i) rp = multiply(alg, rp, r);
      return scale * multiply(alg, weight, rp);
    };
    total += contour_integrate_adaptive(integrand, contour, opts, report);
  }
  return total;
}

}  // namespace

ValidationReport validate_monogenic(const MonogenicSpec& ms) {
  ValidationReport report = validate_algebra(ms.algebra);
  report.append(validate_triad(ms.algebra, ms.triad));
  const int n = ms.algebra.n(), m = ms.algebra.m();
  if (int(ms.F.size()) != m) {
    report.violations.push_back({Check::FunctionCount, {int(ms.F.size()), m}, "F needs one function per idempotent"});
  }
  if (int(ms.G.size()) != n - m) {
    report.violations.push_back(
        {Check::FunctionCount, {int(ms.G.size()), n - m}, "G needs one function per radical index"});
  }
  return report;
}

Element eval_explicit(const MonogenicSpec& ms, const PointR3& p, int order) {
  require_shapes(ms);
  const AlgebraSpec& alg = ms.algebra;
  const int n = alg.n(), m = alg.m();
  const int cap = n - m + order;
  const ResolventExpansion ex = expand_resolvent(alg, ms.triad, p);
  const IndexTable& q = ex.q_vals;

  Element out = Element::Zero(n);
  for (int u = 1; u <= m; ++u) out(u - 1) += holo_eval(ms.F[std::size_t(u - 1)], order, ex.xi(u - 1), cap);

  // sum_k Q_{k,s}/(k-1)! f^{(k-1+order)}(x)
  auto q_weighted = [&](const HoloFn& f, int s, Complex x) {
    Complex acc = 0.0;
    double factorial = 1.0;
    for (int k = 2; k <= s - m + 1; ++k) {
      factorial *= double(k - 1);
      acc += q(k, s) / factorial * holo_eval(f, k - 1 + order, x, cap);
    }
    return acc;
  };

  for (int s = m + 1; s <= n; ++s) {
    const int us = alg.u_of(s);
    out(s - 1) += q_weighted(ms.F[std::size_t(us - 1)], s, ex.xi(us - 1));
  }
  for (int qi = m + 1; qi <= n; ++qi) {
    const HoloFn& g = ms.g_at(qi);
    const Complex x = ex.xi(alg.u_of(qi) - 1);
    out(qi - 1) += holo_eval(g, order, x, cap);
    for (int s = m + 1; s <= n; ++s) {
      const auto& terms = alg.basis_product(qi, s);
      if (terms.empty()) continue;
      const Complex c = q_weighted(g, s, x);
      for (const ProductTerm& term : terms) out(term.index - 1) += term.value * c;
    }
  }
  return out;
}

Element eval_integral(const MonogenicSpec& ms, const PointR3& p, const QuadratureOptions& opts,
                      QuadratureReport* report) {
  return integrate_clusters(ms, p, 1, 1.0, opts, report);
}

Element eval_special(const MonogenicSpec& ms, const PointR3& p, int order) {
  require_shapes(ms);
  const AlgebraSpec& alg = ms.algebra;
  const int n = alg.n(), m = alg.m();
  const SpecialCase kind = classify_special_case(alg);
  if (kind == SpecialCase::General) throw NotSpecial("algebra has no special-case representation");

  Element out = Element::Zero(n);
  Eigen::VectorXcd xs(m);
  for (int u = 1; u <= m; ++u) xs(u - 1) = xi(ms.triad, p, u);
  for (int u = 1; u <= m; ++u) out(u - 1) = ms.F[std::size_t(u - 1)].derivative(order, xs(u - 1));
  if (kind == SpecialCase::SemiSimple) return out;

  if (kind == SpecialCase::Prop2) {
    const Element tv = t_coeffs(alg, ms.triad, p.y, p.z);
    for (int s = m + 1; s <= n; ++s) {
      const int us = alg.u_of(s);
      out(s - 1) = ms.g_at(s).derivative(order, xs(us - 1)) +
                   tv(s - 1) * ms.F[std::size_t(us - 1)].derivative(order + 1, xs(us - 1));
    }
    return out;
  }

  // Prop1: every radical index hangs off the same idempotent eta
  const int eta = alg.u_of(m + 1);
  const Complex x_eta = xs(eta - 1);
  const HoloFn& f_eta = ms.F[std::size_t(eta - 1)];
  const Element tv = t_coeffs(alg, ms.triad, p.y, p.z);
  const IndexTable q = q_table(alg, tv, b_coeffs(alg, tv));
  for (int s = m + 1; s <= n; ++s) {
    double factorial = 1.0;
    Complex acc = 0.0;
    for (int k = 2; k <= s - m + 1; ++k) {
      factorial *= double(k - 1);
      acc += q(k, s) / factorial * f_eta.derivative(k - 1 + order, x_eta);
    }
    out(s - 1) += acc + ms.g_at(s).derivative(order, x_eta);
  }
  for (int qi = m + 1; qi <= n; ++qi) {
    const HoloFn& g = ms.g_at(qi);
    for (int s = m + 1; s <= n; ++s) {
      const auto& terms = alg.basis_product(s, qi);
      if (terms.empty()) continue;
      double factorial = 1.0;
      Complex c = 0.0;
      for (int k = 2; k <= s - m + 1; ++k) {
        factorial *= double(k - 1);
        c += q(k, s) / factorial * g.derivative(k - 1 + order, x_eta);
      }
      for (const ProductTerm& term : terms) out(term.index - 1) += term.value * c;
    }
  }
  return out;
}

Element gateaux_derivative(const MonogenicSpec& ms, const PointR3& p, int r, const QuadratureOptions& opts,
                           QuadratureReport* report) {
  if (r < 1) throw std::invalid_argument("gateaux_derivative: order must be >= 1");
  double factorial = 1.0;
  for (int i = 2; i <= r; ++i) factorial *= double(i);
  return integrate_clusters(ms, p, r + 1, factorial, opts, report);
}

CrResidual cr_residual(const AlgebraSpec& alg, const TriadSpec& triad, const Field& phi, const PointR3& p,
                       double h) {
  const Element fxp = phi(p + PointR3{h, 0, 0}), fxm = phi(p + PointR3{-h, 0, 0});
  const Element fyp = phi(p + PointR3{0, h, 0}), fym = phi(p + PointR3{0, -h, 0});
  const Element fzp = phi(p + PointR3{0, 0, h}), fzm = phi(p + PointR3{0, 0, -h});
  const Element dx = (fxp - fxm) / (2.0 * h);
  const Element dy = (fyp - fym) / (2.0 * h);
  const Element dz = (fzp - fzm) / (2.0 * h);

  CrResidual out;
  out.dy = dy - multiply(alg, dx, triad.a);
  out.dz = dz - multiply(alg, dx, triad.b);
  double peak = 0.0;
  for (const Element* v : {&fxp, &fxm, &fyp, &fym, &fzp, &fzm}) peak = std::max(peak, v->cwiseAbs().maxCoeff());
  out.scale = 1.0 + peak;
  return out;
}

CrResidual cr_residual(const MonogenicSpec& ms, const PointR3& p, double h) {
  return cr_residual(ms.algebra, ms.triad, [&](const PointR3& q) { return eval_explicit(ms, q); }, p, h);
}

double GateauxResidual::max_abs() const {
  double out = 0.0;
  for (const Element& e : by_direction) out = std::max(out, e.cwiseAbs().maxCoeff());
  return out;
}

GateauxResidual gateaux_definition_residual(const MonogenicSpec& ms, const PointR3& p, double eps,
                                            const QuadratureOptions& opts) {
  const AlgebraSpec& alg = ms.algebra;
  const Element phi = eval_explicit(ms, p);
  const Element dphi = gateaux_derivative(ms, p, 1, opts);
  const Element directions[3] = {e1(alg), e2(alg, ms.triad), e3(alg, ms.triad)};
  const PointR3 steps[3] = {{eps, 0, 0}, {0, eps, 0}, {0, 0, eps}};

  GateauxResidual out;
  for (int d = 0; d < 3; ++d) {
    const Element quotient = (eval_explicit(ms, p + steps[d]) - phi) / eps;
    out.by_direction[std::size_t(d)] = quotient - multiply(alg, directions[d], dphi);
  }
  out.scale = 1.0 + phi.cwiseAbs().maxCoeff() + dphi.cwiseAbs().maxCoeff();
  return out;
}

std::vector<Complex> extract_components(const Element& v) { return {v.data(), v.data() + v.size()}; }

}  // namespace monogenica
