#pragma once

#include <string_view>

#include "sscurv/geometry.hpp"
#include "sscurv/tensor.hpp"

namespace sscurv {

enum class ConnectionKind { LeviCivita, Ssnmc, Custom };

std::string_view to_string(ConnectionKind kind);

/// Affine connection on a frame: nabla_{e_i} e_j = Gamma^k_{ij} e_k.
/// `gamma` is a (1,2) tensor with layout gamma(k, i, j); the first lower index
/// is the differentiation direction.
struct Connection {
  Tensor gamma;
  ConnectionKind kind = ConnectionKind::Custom;

  static Connection custom(Tensor gamma);
  [[nodiscard]] int dim() const { return gamma.dim(); }
};

/// Levi-Civita connection from the Koszul formula. With constant metric
/// components only the three bracket terms survive:
///   2 g(nabla_i e_j, e_k) = -g(e_i,[e_j,e_k]) - g(e_j,[e_i,e_k]) + g(e_k,[e_i,e_j]).
/// The result is checked to be torsion-free and metric.
Connection levi_civita(const FrameAlgebra& frame, const MetricFrame& metric);

/// Semi-symmetric non-metric connection hat Gamma^k_{ij} = Gamma^k_{ij} + psi_j delta^k_i.
Connection ssnmc(const Connection& lc, const DistinguishedField& dist);

/// T^k_{ij} = Gamma^k_{ij} - Gamma^k_{ji} - C^k_{ij}, layout T(k, i, j).
Tensor torsion(const Connection& conn, const FrameAlgebra& frame);

/// True iff T^k_{ij} = psi_j delta^k_i - psi_i delta^k_j for every component.
bool is_semi_symmetric(const Tensor& torsion, const DistinguishedField& dist);

/// The semi-symmetric torsion psi(V)U - psi(U)V as a (1,2) tensor.
Tensor semi_symmetric_torsion(const DistinguishedField& dist);

/// (nabla_{e_i} g)(e_j, e_k), layout Q(i, j, k).
Tensor non_metricity(const Connection& conn, const MetricFrame& metric);

/// True iff nabla_{e_i} xi = 0 for every i.
bool is_parallel(const Connection& lc, const DistinguishedField& dist);

/// alpha*(e_i, e_j) = (nabla_{e_i} psi)(e_j) - psi_i psi_j.
Tensor alpha_star(const Connection& lc, const DistinguishedField& dist);

/// (nabla_{e_i} w)(e_j) for a constant-component one-form w, layout (i, j).
Tensor covariant_derivative_form(const Connection& conn, const Tensor& form);

/// nabla_{e_i} v for a constant-component vector v, layout (k; i).
Tensor covariant_derivative_vector(const Connection& conn, const Tensor& vector);

/// (nabla_{e_i} A)(e_j) for a constant-component (1,1) tensor A, layout (l; i, j).
Tensor covariant_derivative_operator(const Connection& conn, const Tensor& op);

/// nabla_u v for constant-component vectors u, v.
Tensor apply(const Connection& conn, const Tensor& u, const Tensor& v);

}  // namespace sscurv
