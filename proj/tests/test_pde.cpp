#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace monogenica;
using namespace fixtures;

namespace {

Complex symbol_at(const PdeSpec& pde, Complex a, Complex b) {
  Complex out = 0.0;
  for (const PdeTerm& t : pde.terms) out += t.c * std::pow(a, t.beta) * std::pow(b, t.gamma);
  return out;
}

// Non-characteristic control: the harmonic triad with real parts nudged.
TriadSpec perturbed_ss2() {
  TriadSpec t = harmonic_ss2();
  t.a(0) += 0.3;
  t.b(1) += 0.4;
  return t;
}

}  // namespace

TEST(Pde, Validation) {
  EXPECT_NO_THROW(validate_pde(laplace_operator()));
  EXPECT_THROW(validate_pde({2, {}}), InvalidSpec);
  EXPECT_THROW(validate_pde({2, {{1, 0, 0, 1.0}}}), InvalidSpec);
  EXPECT_THROW(validate_pde({0, {{0, 0, 0, 1.0}}}), InvalidSpec);
  EXPECT_THROW(validate_pde({2, {{3, -1, 0, 1.0}}}), InvalidSpec);
}

TEST(Pde, HarmonicTriadsSatisfyLaplace) {
  EXPECT_LE(oracles::max_abs(characteristic_residual(ss2(), harmonic_ss2(), laplace_operator())), 1e-12);
  EXPECT_LE(oracles::max_abs(characteristic_residual(d2(), harmonic_d2(), laplace_operator())), 1e-12);
  EXPECT_LE(oracles::max_abs(characteristic_residual(t4(), harmonic_t4(), laplace_operator())), 1e-12);
  EXPECT_LE(oracles::max_abs(characteristic_residual(ss2(), order5_triad(), order5_pde())), 1e-12);
  // 1 + a^2 + b^2 >= 1 for a real triad
  const TriadSpec real{vec({1.0, 2.0}), vec({0.5, -1.0})};
  EXPECT_GE(oracles::max_abs(characteristic_residual(ss2(), real, laplace_operator())), 1.0);
}

TEST(Pde, ResidualShadowIsScalarSymbol) {
  Rng rng(41);
  const PdeSpec pdes[] = {laplace_operator(), order3_pde(), order5_pde(), wave_pde()};
  for (const auto& fx : all_fixtures()) {
    const TriadSpec triad = rng.triad(fx.algebra);
    for (const PdeSpec& pde : pdes) {
      const Element res = characteristic_residual(fx.algebra, triad, pde);
      for (int u = 1; u <= fx.algebra.m(); ++u) {
        const Complex expect = symbol_at(pde, triad.a(u - 1), triad.b(u - 1));
        EXPECT_LE(std::abs(functional_f(fx.algebra, u, res) - expect), 1e-12 * (1 + std::abs(expect))) << fx.name;
      }
    }
  }
}

TEST(Pde, SymbolPolynomial) {
  EXPECT_EQ(p_poly(laplace_operator(), 0.0, 0.0), 1.0);
  EXPECT_EQ(p_poly(laplace_operator(), 2.0, -3.0), 14.0);
  EXPECT_EQ(p_poly(order3_pde(), 2.0, -3.0), 14.0);
  EXPECT_EQ(p_poly(order5_pde(), 2.0, -3.0), 1.0 + 4.0 + 36.0);
  EXPECT_EQ(p_poly(wave_pde(), 1.0, 7.0), 0.0);
}

TEST(Pde, NonvanishingScan) {
  EXPECT_FALSE(p_nonvanishing_scan(laplace_operator(), 10.0, 101).zero_found);
  EXPECT_EQ(p_nonvanishing_scan(laplace_operator(), 10.0, 101).to_string(), "NoZeroFound");
  EXPECT_EQ(p_nonvanishing_scan(order3_pde(), 10.0, 101).to_string(), "NoZeroFound");
  EXPECT_EQ(p_nonvanishing_scan(order5_pde(), 10.0, 101).to_string(), "NoZeroFound");

  const ScanResult wave = p_nonvanishing_scan(wave_pde(), 10.0, 101);
  ASSERT_TRUE(wave.zero_found);
  EXPECT_NEAR(std::abs(wave.a), 1.0, 1e-12);
  EXPECT_EQ(wave.to_string(), "ZeroAt(1, 0)");

  // no d_x^N term: P(0, 0) = 0
  const PdeSpec no_pure_x{2, {{0, 2, 0, 1.0}, {0, 0, 2, 1.0}}};
  EXPECT_EQ(p_nonvanishing_scan(no_pure_x, 10.0, 101).to_string(), "ZeroAt(0, 0)");

  // P = 1 + a^2 - b^2 / 400 changes sign only beyond the box
  const PdeSpec far{2, {{2, 0, 0, 1.0}, {0, 2, 0, 1.0}, {0, 0, 2, -1.0 / 400.0}}};
  const ScanResult r = p_nonvanishing_scan(far, 10.0, 101);
  ASSERT_TRUE(r.zero_found);
  EXPECT_NEAR(p_poly(far, r.a, r.b), 0.0, 1e-9);
}

TEST(Pde, StencilsExactOnPolynomials) {
  // d_x^3 d_y (x^3 y) = 6, d_x d_y d_z^2 (x y z^2) = 2
  const Field f = [](const PointR3& p) { return vec({p.x * p.x * p.x * p.y, p.x * p.y * p.z * p.z}); };
  const FdResult a = apply_operator_fd(f, {4, {{3, 1, 0, 1.0}}}, {0.3, -0.2, 0.7}, {1e-2});
  EXPECT_NEAR(a.value(0).real(), 6.0, 1e-6);
  const FdResult b = apply_operator_fd(f, {4, {{1, 1, 2, 1.0}}}, {0.3, -0.2, 0.7}, {1e-2});
  EXPECT_NEAR(b.value(1).real(), 2.0, 1e-6);
  EXPECT_NEAR(a.value(1).real(), 0.0, 1e-6);
  EXPECT_EQ(default_fd_step(2), 1e-3);
  EXPECT_EQ(default_fd_step(5), 1e-2);
}

TEST(Pde, RichardsonImprovesExp) {
  const Field f = [](const PointR3& p) { return vec({std::exp(p.x)}); };
  const PdeSpec dxx{2, {{2, 0, 0, 1.0}}};
  const PointR3 p{0.5, 0.0, 0.0};
  const double plain = std::abs(apply_operator_fd(f, dxx, p, {1e-2, false}).value(0) - std::exp(0.5));
  const double rich = std::abs(apply_operator_fd(f, dxx, p, {1e-2, true}).value(0) - std::exp(0.5));
  EXPECT_LT(rich, plain / 100);
}

TEST(Pde, HarmonicComponents) {
  Rng rng(42);
  const MonogenicSpec squares{ss2(), harmonic_ss2(), {square(), square()}, {}};
  const MonogenicSpec exps{ss2(), harmonic_ss2(), {HoloFn::exp(), HoloFn::exp()}, {}};
  const MonogenicSpec t4_exp{t4(), harmonic_t4(), {HoloFn::exp()}, {HoloFn::sin(), HoloFn::zero(), HoloFn::exp()}};
  for (int trial = 0; trial < 20; ++trial) {
    const PointR3 p = rng.point(1.0);
    const FdResult e = pde_residual(exps, laplace_operator(), p);
    EXPECT_LE(oracles::max_abs(e.value), 1e-4 * e.scale);
    const FdResult t = pde_residual(t4_exp, laplace_operator(), p);
    EXPECT_LE(oracles::max_abs(t.value), 1e-4 * t.scale);
  }
  const FdResult s = pde_residual(squares, laplace_operator(), {0.1, 0.2, -0.1});
  EXPECT_LE(oracles::max_abs(s.value), 1e-9);

  const MonogenicSpec control{ss2(), perturbed_ss2(), {HoloFn::exp(), HoloFn::exp()}, {}};
  EXPECT_GE(oracles::max_abs(pde_residual(control, laplace_operator(), {0.1, 0.2, -0.1}).value), 1e-2);
}

TEST(Pde, OperatorIdentity) {
  const PointR3 p{0.2, -0.3, 0.1};
  const MonogenicSpec poly{ss2(), perturbed_ss2(), {square(), HoloFn::polynomial({1.0, -2.0, 3.0})}, {}};
  EXPECT_LE(oracles::max_abs(operator_identity_check(poly, laplace_operator(), p).value), 1e-8);

  const MonogenicSpec exps{d2(), {vec({1.0i, 1.0}), vec({1.0 + 1.0i, 0.0})}, {HoloFn::exp()}, {HoloFn::cos()}};
  const FdResult d = operator_identity_check(exps, laplace_operator(), p);
  EXPECT_LE(oracles::max_abs(d.value), 1e-3 * d.scale);

  // both sides vanish for a characteristic triad
  const MonogenicSpec harmonic{ss2(), harmonic_ss2(), {HoloFn::exp(), HoloFn::exp()}, {}};
  const FdResult h = operator_identity_check(harmonic, laplace_operator(), p);
  EXPECT_LE(oracles::max_abs(h.value), 1e-4 * h.scale);
}

TEST(Pde, HigherOrderExamples) {
  const MonogenicSpec o3{ss2(), order3_triad(), {HoloFn::exp(), HoloFn::sin()}, {}};
  const FdResult r3 = pde_residual(o3, order3_pde(), {0.1, 0.3, -0.2});
  EXPECT_LE(oracles::max_abs(r3.value), 1e-4 * r3.scale);
  const MonogenicSpec o5{ss2(), order5_triad(), {HoloFn::exp(), HoloFn::cos()}, {}};
  const FdResult r5 = pde_residual(o5, order5_pde(), {0.1, 0.3, -0.2}, {default_fd_step(5)});
  EXPECT_LE(oracles::max_abs(r5.value), 1e-3 * r5.scale);
}

TEST(Pde, PositiveSymbolForcesSurjectivity) {
  struct Case {
    PdeSpec pde;
    AlgebraSpec alg;
    TriadSpec triad;
  };
  const Case cases[] = {{laplace_operator(), ss2(), harmonic_ss2()},
                        {laplace_operator(), d2(), harmonic_d2()},
                        {laplace_operator(), t4(), harmonic_t4()},
                        {order3_pde(), ss2(), order3_triad()},
                        {order5_pde(), ss2(), order5_triad()}};
  for (const Case& c : cases) {
    ASSERT_EQ(p_nonvanishing_scan(c.pde, 10.0, 101).to_string(), "NoZeroFound");
    ASSERT_LE(oracles::max_abs(characteristic_residual(c.alg, c.triad, c.pde)), 1e-10);
    for (int u = 1; u <= c.alg.m(); ++u) {
      EXPECT_TRUE(c.triad.a(u - 1).imag() != 0.0 || c.triad.b(u - 1).imag() != 0.0);
    }
  }
}
