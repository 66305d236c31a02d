#pragma once

#include <optional>

#include "sscurv/connection.hpp"
#include "sscurv/geometry.hpp"
#include "sscurv/tensor.hpp"

namespace sscurv {

/// Curvature of a connection together with its traces.
///
/// riemann(l, k, i, j) is the e_l component of R(e_i, e_j) e_k.
/// ricci(j, k) = S(e_j, e_k) = trace of U -> R(U, e_j) e_k.
/// ricci_op(a, j) = Q^a_j with g(Q U, V) = S(U, V).
struct CurvatureBundle {
  Tensor riemann;
  Tensor ricci;
  Rat scalar;
  Tensor ricci_op;
  ConnectionKind source = ConnectionKind::Custom;
};

/// R(e_i,e_j)e_k for constant connection coefficients:
///   R^l_{kij} = G^m_{jk} G^l_{im} - G^m_{ik} G^l_{jm} - C^m_{ij} G^l_{mk}.
CurvatureBundle curvature(const Connection& conn, const FrameAlgebra& frame, const MetricFrame& metric);

/// R(u, v) y for arbitrary constant-component vectors.
Tensor riemann_apply(const Tensor& riemann, const Tensor& u, const Tensor& v, const Tensor& y);

/// Sectional curvature g(R(u,v)v,u) / (g(u,u)g(v,v) - g(u,v)^2).
/// Throws DegeneratePlaneError when u and v are linearly dependent.
Rat sectional(const CurvatureBundle& bundle, const MetricFrame& metric, const Tensor& u, const Tensor& v);

/// The single kappa with R^l_{kij} = kappa (g_jk delta^l_i - g_ik delta^l_j), if any.
std::optional<Rat> constant_sectional(const CurvatureBundle& bundle, const MetricFrame& metric);

/// P(U,V)Y = R(U,V)Y - 1/2 [S(V,Y)U - S(U,Y)V]. Three dimensions only.
Tensor projective(const CurvatureBundle& bundle);

/// C(U,V)Y = R(U,V)Y - [S(V,Y)U - S(U,Y)V + g(V,Y)QU - g(U,Y)QV]
///           + r/2 [g(V,Y)U - g(U,Y)V]. Three dimensions only.
Tensor conformal(const CurvatureBundle& bundle, const MetricFrame& metric);

/// The (1,3) tensor g(V,Y)U - g(U,Y)V in the riemann layout.
Tensor metric_wedge(const MetricFrame& metric);

}  // namespace sscurv
