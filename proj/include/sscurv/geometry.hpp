#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sscurv/rat.hpp"
#include "sscurv/tensor.hpp"

namespace sscurv {

/// One structure-constant entry [e_i, e_j] = ... + value * e_k (0-based).
struct BracketEntry {
  int i = 0;
  int j = 0;
  int k = 0;
  Rat value;
};

/// Frame Lie algebra: [e_i, e_j] = C^k_{ij} e_k, stored as a (1,2) tensor
/// with layout C(k, i, j).
struct FrameAlgebra {
  int dim = 0;
  Tensor structure;

  static FrameAlgebra abelian(int dim);

  /// Builds C from entries, filling C^k_{ji} = -C^k_{ij} for any entry whose
  /// mirror is absent. Conflicting or diagonal entries are InputErrors.
  /// Each completed mirror is described in `notes` when given.
  static FrameAlgebra from_brackets(int dim, const std::vector<BracketEntry>& entries,
                                    std::vector<std::string>* notes = nullptr);

  [[nodiscard]] const Rat& c(int k, int i, int j) const { return structure(k, i, j); }
};

/// Constant frame metric with its exact inverse.
struct MetricFrame {
  Tensor g;      // (0,2)
  Tensor g_inv;  // (2,0)

  /// Throws DegenerateMetricError when g is singular.
  static MetricFrame from(Tensor g);
  static MetricFrame identity(int dim);

  [[nodiscard]] int dim() const { return g.dim(); }
  [[nodiscard]] Rat inner(const Tensor& u, const Tensor& v) const;
};

/// The field xi and its metric dual psi_i = g_ij xi^j.
struct DistinguishedField {
  Tensor xi;   // (1,0)
  Tensor psi;  // (0,1)
  bool unit = false;
  bool degenerate = false;  // xi == 0

  static DistinguishedField from(Tensor xi, const MetricFrame& metric);
};

/// A scalar field through its first and second frame derivatives at a point:
/// d_i = e_i f and dd_ij = e_i(e_j f).
struct ScalarJet {
  Tensor d;   // (0,1)
  Tensor dd;  // (0,2)

  static ScalarJet zero(int dim);
  [[nodiscard]] bool is_zero() const { return d.is_zero() && dd.is_zero(); }
};

struct GeometrySpec {
  std::string name;
  std::string label = "e";  // basis vector prefix used in reports
  FrameAlgebra frame;
  MetricFrame metric;
  DistinguishedField distinguished;

  [[nodiscard]] int dim() const { return frame.dim; }
};

struct ValidationCheck {
  std::string name;
  bool passed = true;
  bool required = true;  // informational checks never fail validation
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const;
  [[nodiscard]] const ValidationCheck* find(const std::string& name) const;
  /// First failing required check, if any.
  [[nodiscard]] const ValidationCheck* first_failure() const;
};

/// Index triple (i,j,k) and component l of the first Jacobi violation.
struct JacobiViolation {
  int i, j, k, l;
  Rat value;
};

std::optional<JacobiViolation> find_jacobi_violation(const FrameAlgebra& frame);

ValidationReport validate(const GeometrySpec& spec);

/// Empty when the jet satisfies dd_ij - dd_ji = C^k_{ij} d_k; otherwise one
/// message per violating (i,j).
std::vector<std::string> jet_violations(const ScalarJet& jet, const FrameAlgebra& frame);

/// Throws InputError listing every violation.
void require_valid_jet(const ScalarJet& jet, const FrameAlgebra& frame);

/// (Df)^k = g^{kj} d_j.
Tensor gradient(const ScalarJet& jet, const MetricFrame& metric);

/// xi f = d_k xi^k.
Rat directional(const ScalarJet& jet, const Tensor& vector);

/// Unit basis vector e_i as a (1,0) tensor.
Tensor basis_vector(int dim, int i);

}  // namespace sscurv
