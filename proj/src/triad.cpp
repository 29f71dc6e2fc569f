#include "monogenica/triad.hpp"

#include <Eigen/QR>

namespace monogenica {

namespace {

void check_lengths(const AlgebraSpec& alg, const TriadSpec& triad) {
  if (triad.a.size() != alg.n() || triad.b.size() != alg.n()) {
    throw DimensionMismatch("triad coefficient vectors must have length n = " + std::to_string(alg.n()));
  }
}

}  // namespace

Element e1(const AlgebraSpec& alg) { return unit(alg); }

Element e2(const AlgebraSpec& alg, const TriadSpec& triad) {
  check_lengths(alg, triad);
  return triad.a;
}

Element e3(const AlgebraSpec& alg, const TriadSpec& triad) {
  check_lengths(alg, triad);
  return triad.b;
}

ValidationReport validate_triad(const AlgebraSpec& alg, const TriadSpec& triad) {
  ValidationReport report;
  if (triad.a.size() != alg.n() || triad.b.size() != alg.n()) {
    report.violations.push_back({Check::TriadDimension, {int(triad.a.size()), int(triad.b.size())},
                                 "expected length " + std::to_string(alg.n())});
    return report;
  }
  const Eigen::Index n = alg.n();
  Eigen::MatrixXd real(2 * n, 3);
  const Element vecs[3] = {unit(alg), triad.a, triad.b};
  for (int c = 0; c < 3; ++c) {
    real.col(c).head(n) = vecs[c].real();
    real.col(c).tail(n) = vecs[c].imag();
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(real);
  qr.setThreshold(1e-12);
  if (qr.rank() < 3) {
    report.violations.push_back({Check::TriadRank, {int(qr.rank())},
                                 "e1, e2, e3 are linearly dependent over R"});
  }
  for (int u = 1; u <= alg.m(); ++u) {
    if (std::abs(triad.a(u - 1).imag()) <= 1e-12 && std::abs(triad.b(u - 1).imag()) <= 1e-12) {
      report.violations.push_back({Check::Surjectivity, {u}, "a_u and b_u are both real"});
    }
  }
  return report;
}

Element embed(const AlgebraSpec& alg, const TriadSpec& triad, const PointR3& p) {
  check_lengths(alg, triad);
  Element zeta(alg.n());
  for (int u = 1; u <= alg.m(); ++u) zeta(u - 1) = xi(triad, p, u);
  for (int s = alg.m() + 1; s <= alg.n(); ++s) zeta(s - 1) = p.y * triad.a(s - 1) + p.z * triad.b(s - 1);
  return zeta;
}

Complex xi(const TriadSpec& triad, const PointR3& p, int u) {
  return p.x + p.y * triad.a(u - 1) + p.z * triad.b(u - 1);
}

}  // namespace monogenica
