#include <doctest.h>

#include <array>
#include <cmath>
#include <functional>

#include "sscurv/builtin.hpp"
#include "sscurv/connection.hpp"
#include "sscurv/curvature.hpp"
#include "sscurv/error.hpp"
#include "support.hpp"

using namespace sscurv;

namespace {

Tensor e(int i) { return basis_vector(3, i); }

CurvatureBundle lc_curvature(const GeometrySpec& s) {
  return curvature(levi_civita(s.frame, s.metric), s.frame, s.metric);
}

// R(e_i,e_j) = [A_i, A_j] - C^m_ij A_m with (A_i)^l_k = Gamma^l_{ik}.
Tensor commutator_riemann(const Connection& conn, const FrameAlgebra& frame) {
  const int n = conn.dim();
  Tensor r(1, 3, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int l = 0; l < n; ++l) {
        for (int k = 0; k < n; ++k) {
          Rat v;
          for (int m = 0; m < n; ++m) {
            v += conn.gamma(l, i, m) * conn.gamma(m, j, k) - conn.gamma(l, j, m) * conn.gamma(m, i, k);
            v -= frame.c(m, i, j) * conn.gamma(l, m, k);
          }
          r(l, k, i, j) = v;
        }
      }
    }
  }
  return r;
}

// Scalar curvature of a diagonal coordinate metric by finite differences.
using Metric = std::function<std::array<double, 3>(const std::array<double, 3>&)>;

double coordinate_scalar(const Metric& diag, std::array<double, 3> x) {
  constexpr double h = 1e-3;
  auto christoffel = [&](const std::array<double, 3>& p) {
    std::array<std::array<double, 3>, 3> dg{};  // dg[c][d] = d_c g_dd
    for (int c = 0; c < 3; ++c) {
      auto a = p, b = p;
      a[c] += h;
      b[c] -= h;
      const auto ga = diag(a), gb = diag(b);
      for (int d = 0; d < 3; ++d) dg[c][d] = (ga[d] - gb[d]) / (2 * h);
    }
    const auto g = diag(p);
    std::array<std::array<std::array<double, 3>, 3>, 3> gam{};
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        for (int c = 0; c < 3; ++c) {
          double s = 0;
          if (a == c) s += dg[b][a];
          if (a == b) s += dg[c][a];
          if (b == c) s -= dg[a][b];
          gam[a][b][c] = 0.5 * s / g[a];
        }
      }
    }
    return gam;
  };
  const auto gam = christoffel(x);
  std::array<decltype(christoffel(x)), 3> dgam;
  for (int c = 0; c < 3; ++c) {
    auto a = x, b = x;
    a[c] += h;
    b[c] -= h;
    const auto ga = christoffel(a), gb = christoffel(b);
    for (int p = 0; p < 3; ++p)
      for (int q = 0; q < 3; ++q)
        for (int s = 0; s < 3; ++s) dgam[c][p][q][s] = (ga[p][q][s] - gb[p][q][s]) / (2 * h);
  }
  const auto g = diag(x);
  double r = 0;
  for (int b = 0; b < 3; ++b) {
    double ric = 0;  // Ric_bb = R^a_{bab}
    for (int a = 0; a < 3; ++a) {
      double v = dgam[a][a][b][b] - dgam[b][a][a][b];
      for (int m = 0; m < 3; ++m) v += gam[a][a][m] * gam[m][b][b] - gam[a][b][m] * gam[m][a][b];
      ric += v;
    }
    r += ric / g[b];
  }
  return r;
}

}  // namespace

TEST_CASE("example1 curvature components") {
  const auto c = lc_curvature(builtin("example1"));
  const auto& R = c.riemann;
  auto rv = [&](int u, int v, int y) { return riemann_apply(R, e(u), e(v), e(y)); };
  CHECK(rv(0, 1, 2).is_zero());
  CHECK(rv(1, 2, 2) == -e(1));
  CHECK(rv(0, 2, 2) == -e(0));
  CHECK(rv(0, 1, 1) == -e(0));
  CHECK(rv(1, 2, 1) == e(2));
  CHECK(rv(0, 2, 1).is_zero());
  CHECK(rv(0, 1, 0) == e(1));
  CHECK(rv(1, 2, 0).is_zero());
  CHECK(rv(0, 2, 0) == e(2));
  CHECK(c.ricci == Tensor::from_components(0, 2, 3, {-2, 0, 0, 0, -2, 0, 0, 0, -2}));
  CHECK(c.scalar == Rat(-6));
  CHECK(constant_sectional(c, builtin("example1").metric) == Rat(-1));
}

TEST_CASE("coordinate finite differences agree with the frame computation") {
  // example1: k1 = e^w du, k2 = e^w dv, k3 = dw  =>  g = e^{-2w}(du^2 + dv^2) + dw^2.
  const double r1 = coordinate_scalar(
      [](const std::array<double, 3>& x) {
        const double f = std::exp(-2 * x[2]);
        return std::array<double, 3>{f, f, 1.0};
      },
      {0.3, -0.2, 0.5});
  CHECK(r1 == doctest::Approx(lc_curvature(builtin("example1")).scalar.to_double()).epsilon(1e-4));
  // h2xr: e1 = y dx, e2 = y dy  =>  g = (dx^2 + dy^2) / y^2 + dz^2.
  const double r2 = coordinate_scalar(
      [](const std::array<double, 3>& x) {
        const double f = 1.0 / (x[1] * x[1]);
        return std::array<double, 3>{f, f, 1.0};
      },
      {0.1, 1.7, 0.0});
  CHECK(r2 == doctest::Approx(lc_curvature(builtin("h2xr")).scalar.to_double()).epsilon(1e-4));
}

TEST_CASE("builtin scalars") {
  CHECK(lc_curvature(builtin("h2xr")).scalar == Rat(-2));
  CHECK(lc_curvature(builtin("flat")).riemann.is_zero());
}

TEST_CASE("h2xr semi-symmetric Ricci and scalar") {
  const auto s = builtin("h2xr");
  const auto lc = levi_civita(s.frame, s.metric);
  const auto hat = curvature(ssnmc(lc, s.distinguished), s.frame, s.metric);
  CHECK(hat.ricci == Tensor::from_components(0, 2, 3, {-1, 0, 0, 0, -1, 0, 0, 0, 2}));
  CHECK(hat.scalar == Rat(0));
  // Q_hat e1 = -e1
  CHECK(hat.ricci_op(0, 0) == Rat(-1));
  CHECK(hat.ricci_op(1, 0) == Rat(0));
  CHECK(hat.ricci_op(2, 0) == Rat(0));
}

TEST_CASE("Riemann matches the operator-commutator oracle") {
  for (const auto& s : testing::valid_geometries(303, 60)) {
    CAPTURE(s.name);
    const auto lc = levi_civita(s.frame, s.metric);
    const auto hat = ssnmc(lc, s.distinguished);
    CHECK(curvature(lc, s.frame, s.metric).riemann == commutator_riemann(lc, s.frame));
    CHECK(curvature(hat, s.frame, s.metric).riemann == commutator_riemann(hat, s.frame));
  }
}

TEST_CASE("curvature symmetries on fuzzed geometries") {
  for (const auto& s : testing::valid_geometries(404, 80)) {
    CAPTURE(s.name);
    const auto lc = levi_civita(s.frame, s.metric);
    const auto c = curvature(lc, s.frame, s.metric);
    const auto ch = curvature(ssnmc(lc, s.distinguished), s.frame, s.metric);
    for (int u = 0; u < 3; ++u) {
      for (int v = 0; v < 3; ++v) {
        for (int y = 0; y < 3; ++y) {
          const auto bianchi = riemann_apply(c.riemann, e(u), e(v), e(y)) + riemann_apply(c.riemann, e(v), e(y), e(u)) +
                               riemann_apply(c.riemann, e(y), e(u), e(v));
          CHECK(bianchi.is_zero());
          CHECK(riemann_apply(c.riemann, e(u), e(v), e(y)) == -riemann_apply(c.riemann, e(v), e(u), e(y)));
          CHECK(riemann_apply(ch.riemann, e(u), e(v), e(y)) == -riemann_apply(ch.riemann, e(v), e(u), e(y)));
        }
      }
    }
    CHECK(c.ricci == swap_lower(c.ricci, 0, 1));
    Rat trace;
    for (int a = 0; a < 3; ++a) trace += c.ricci_op(a, a);
    CHECK(trace == c.scalar);
  }
}

TEST_CASE("sectional curvature") {
  const auto s = builtin("example1");
  const auto c = lc_curvature(s);
  const auto u = e(0) + e(2) * Rat(2);
  const auto v = e(1) - e(0);
  CHECK(sectional(c, s.metric, u, v) == Rat(-1));
  CHECK_THROWS_AS(sectional(c, s.metric, u, u * Rat(3)), DegeneratePlaneError);
  CHECK_FALSE(constant_sectional(lc_curvature(builtin("h2xr")), s.metric).has_value());
}

TEST_CASE("conformal curvature of a three-dimensional Levi-Civita connection vanishes") {
  for (const auto& s : testing::valid_geometries(505, 40)) {
    CHECK(conformal(lc_curvature(s), s.metric).is_zero());
  }
}

TEST_CASE("projective and conformal need three dimensions") {
  GeometrySpec s;
  s.frame = FrameAlgebra::abelian(2);
  s.metric = MetricFrame::identity(2);
  s.distinguished = DistinguishedField::from(basis_vector(2, 0), s.metric);
  const auto c = curvature(levi_civita(s.frame, s.metric), s.frame, s.metric);
  CHECK_THROWS_AS(projective(c), UnsupportedDimensionError);
  CHECK_THROWS_AS(conformal(c, s.metric), UnsupportedDimensionError);
}
