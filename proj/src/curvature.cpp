#include "sscurv/curvature.hpp"

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

void require_dim3(int dim, const char* what) {
  if (dim != 3) {
    throw UnsupportedDimensionError(std::string(what) + " is defined for dimension 3 only (got " +
                                    std::to_string(dim) + ")");
  }
}

Rat delta(int a, int b) { return a == b ? Rat(1) : Rat(0); }

}  // namespace

CurvatureBundle curvature(const Connection& conn, const FrameAlgebra& frame, const MetricFrame& metric) {
  const int n = conn.dim();
  if (frame.dim != n || metric.dim() != n) throw ValenceError("curvature: dimension mismatch");
  const Tensor& G = conn.gamma;
  Tensor R(1, 3, n);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          Rat s;
          for (int m = 0; m < n; ++m) {
            s += G(m, j, k) * G(l, i, m) - G(m, i, k) * G(l, j, m) - frame.c(m, i, j) * G(l, m, k);
          }
          R(l, k, i, j) = s;
        }
      }
    }
  }

  // Trace over the value slot and U leaves (Y, V); reorder to S(V, Y).
  Tensor ricci = swap_lower(contract(R, 0, 1), 0, 1);
  const Rat scalar = contract(contract(outer(metric.g_inv, ricci), 0, 0), 0, 0).value();
  Tensor ricci_op = raise_index(ricci, metric.g_inv, 1, 0);
  return CurvatureBundle{std::move(R), std::move(ricci), scalar, std::move(ricci_op), conn.kind};
}

Tensor riemann_apply(const Tensor& riemann, const Tensor& u, const Tensor& v, const Tensor& y) {
  const int n = riemann.dim();
  Tensor out(1, 0, n);
  for (int l = 0; l < n; ++l) {
    Rat s;
    for (int k = 0; k < n; ++k) {
      if (y(k).is_zero()) continue;
      for (int i = 0; i < n; ++i) {
        if (u(i).is_zero()) continue;
        for (int j = 0; j < n; ++j) s += riemann(l, k, i, j) * u(i) * v(j) * y(k);
      }
    }
    out(l) = s;
  }
  return out;
}

Rat sectional(const CurvatureBundle& bundle, const MetricFrame& metric, const Tensor& u, const Tensor& v) {
  const Rat denom = metric.inner(u, u) * metric.inner(v, v) - metric.inner(u, v) * metric.inner(u, v);
  if (denom.is_zero()) throw DegeneratePlaneError("sectional: u and v do not span a plane");
  return metric.inner(riemann_apply(bundle.riemann, u, v, v), u) / denom;
}

Tensor metric_wedge(const MetricFrame& metric) {
  const int n = metric.dim();
  Tensor w(1, 3, n);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w(l, k, i, j) = metric.g(j, k) * delta(l, i) - metric.g(i, k) * delta(l, j);
      }
    }
  }
  return w;
}

std::optional<Rat> constant_sectional(const CurvatureBundle& bundle, const MetricFrame& metric) {
  const Tensor w = metric_wedge(metric);
  std::optional<Rat> kappa;
  for (std::size_t a = 0; a < w.size(); ++a) {
    if (!w.components()[a].is_zero()) {
      kappa = bundle.riemann.components()[a] / w.components()[a];
      break;
    }
  }
  if (!kappa) return std::nullopt;
  if (bundle.riemann != w * *kappa) return std::nullopt;
  return kappa;
}

Tensor projective(const CurvatureBundle& bundle) {
  const int n = bundle.riemann.dim();
  require_dim3(n, "projective curvature");
  const Tensor& S = bundle.ricci;
  Tensor P = bundle.riemann;
  const Rat half(1, 2);
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) P(l, k, i, j) -= half * (S(j, k) * delta(l, i) - S(i, k) * delta(l, j));
      }
    }
  }
  return P;
}

Tensor conformal(const CurvatureBundle& bundle, const MetricFrame& metric) {
  const int n = bundle.riemann.dim();
  require_dim3(n, "conformal curvature");
  const Tensor& S = bundle.ricci;
  const Tensor& Q = bundle.ricci_op;
  const Tensor& g = metric.g;
  const Rat half_r = bundle.scalar * Rat(1, 2);
  Tensor C = bundle.riemann;
  for (int l = 0; l < n; ++l) {
    for (int k = 0; k < n; ++k) {
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          C(l, k, i, j) -= S(j, k) * delta(l, i) - S(i, k) * delta(l, j) + g(j, k) * Q(l, i) - g(i, k) * Q(l, j);
          C(l, k, i, j) += half_r * (g(j, k) * delta(l, i) - g(i, k) * delta(l, j));
        }
      }
    }
  }
  return C;
}

}  // namespace sscurv
