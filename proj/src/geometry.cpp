#include "sscurv/geometry.hpp"

#include <algorithm>
#include <sstream>

#include "sscurv/error.hpp"

namespace sscurv {

namespace {

std::string one_based(int i) { return std::to_string(i + 1); }

std::string triple(int i, int j, int k) {
  return "(" + one_based(i) + "," + one_based(j) + "," + one_based(k) + ")";
}

ValidationCheck make_check(std::string name, bool required = true) {
  ValidationCheck c;
  c.name = std::move(name);
  c.required = required;
  return c;
}

}  // namespace

FrameAlgebra FrameAlgebra::abelian(int dim) { return FrameAlgebra{dim, Tensor(1, 2, dim)}; }

FrameAlgebra FrameAlgebra::from_brackets(int dim, const std::vector<BracketEntry>& entries,
                                         std::vector<std::string>* notes) {
  FrameAlgebra out = abelian(dim);
  Tensor seen(1, 2, dim);  // 1 where explicitly given
  for (const auto& e : entries) {
    for (int idx : {e.i, e.j, e.k}) {
      if (idx < 0 || idx >= dim) {
        throw InputError("structure constant index " + one_based(idx) + " out of range 1.." + std::to_string(dim));
      }
    }
    if (e.i == e.j) {
      if (!e.value.is_zero()) {
        throw InputError("structure constant C^" + one_based(e.k) + "_{" + one_based(e.i) + one_based(e.j) +
                         "} on the diagonal must be 0");
      }
      continue;
    }
    if (!seen(e.k, e.i, e.j).is_zero() && out.structure(e.k, e.i, e.j) != e.value) {
      throw InputError("structure constant C^" + one_based(e.k) + "_{" + one_based(e.i) + one_based(e.j) +
                       "} given twice with different values");
    }
    if (!seen(e.k, e.j, e.i).is_zero() && out.structure(e.k, e.j, e.i) != -e.value) {
      throw InputError("structure constants C^" + one_based(e.k) + "_{" + one_based(e.i) + one_based(e.j) +
                       "} and C^" + one_based(e.k) + "_{" + one_based(e.j) + one_based(e.i) +
                       "} are not antisymmetric");
    }
    out.structure(e.k, e.i, e.j) = e.value;
    seen(e.k, e.i, e.j) = Rat(1);
  }
  for (int k = 0; k < dim; ++k) {
    for (int i = 0; i < dim; ++i) {
      for (int j = 0; j < dim; ++j) {
        if (i == j || seen(k, i, j).is_zero() || !seen(k, j, i).is_zero()) continue;
        out.structure(k, j, i) = -out.structure(k, i, j);
        seen(k, j, i) = Rat(1);
        if (notes != nullptr && !out.structure(k, i, j).is_zero()) {
          notes->push_back("completed C^" + one_based(k) + "_{" + one_based(j) + one_based(i) +
                           "} = " + out.structure(k, j, i).str() + " by antisymmetry");
        }
      }
    }
  }
  return out;
}

MetricFrame MetricFrame::from(Tensor g) {
  if (g.upper() != 0 || g.lower() != 2) throw ValenceError("metric must be a (0,2) tensor, got " + shape_string(g));
  Tensor inv = invert(g);
  return MetricFrame{std::move(g), std::move(inv)};
}

MetricFrame MetricFrame::identity(int dim) {
  Tensor g(0, 2, dim);
  for (int i = 0; i < dim; ++i) g(i, i) = Rat(1);
  return from(std::move(g));
}

Rat MetricFrame::inner(const Tensor& u, const Tensor& v) const {
  Rat s;
  for (int i = 0; i < dim(); ++i) {
    for (int j = 0; j < dim(); ++j) s += g(i, j) * u(i) * v(j);
  }
  return s;
}

DistinguishedField DistinguishedField::from(Tensor xi, const MetricFrame& metric) {
  if (xi.upper() != 1 || xi.lower() != 0 || xi.dim() != metric.dim()) {
    throw ValenceError("xi must be a (1,0) tensor matching the metric dimension");
  }
  Tensor psi = lower_index(xi, metric.g, 0, 0);
  const bool unit = metric.inner(xi, xi) == Rat(1);
  const bool degenerate = xi.is_zero();
  return DistinguishedField{std::move(xi), std::move(psi), unit, degenerate};
}

ScalarJet ScalarJet::zero(int dim) { return ScalarJet{Tensor(0, 1, dim), Tensor(0, 2, dim)}; }

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const ValidationCheck* ValidationReport::find(const std::string& name) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

const ValidationCheck* ValidationReport::first_failure() const {
  auto it = std::find_if(checks.begin(), checks.end(), [](const auto& c) { return c.required && !c.passed; });
  return it == checks.end() ? nullptr : &*it;
}

std::optional<JacobiViolation> find_jacobi_violation(const FrameAlgebra& frame) {
  const int n = frame.dim;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          Rat sum;
          for (int m = 0; m < n; ++m) {
            sum += frame.c(m, i, j) * frame.c(l, m, k) + frame.c(m, j, k) * frame.c(l, m, i) +
                   frame.c(m, k, i) * frame.c(l, m, j);
          }
          if (!sum.is_zero()) return JacobiViolation{i, j, k, l, sum};
        }
      }
    }
  }
  return std::nullopt;
}

ValidationReport validate(const GeometrySpec& spec) {
  ValidationReport rep;
  const int n = spec.frame.dim;

  {
    ValidationCheck c = make_check("dimensions");
    const bool ok = n > 0 && spec.frame.structure.dim() == n && spec.frame.structure.upper() == 1 &&
                    spec.frame.structure.lower() == 2 && spec.metric.dim() == n &&
                    spec.distinguished.xi.dim() == n && spec.distinguished.psi.dim() == n;
    c.passed = ok;
    if (!ok) c.detail = "frame, metric and xi dimensions disagree";
    rep.checks.push_back(c);
    if (!ok) return rep;
  }

  {
    ValidationCheck c = make_check("antisymmetry");
    for (int k = 0; k < n && c.passed; ++k) {
      for (int i = 0; i < n && c.passed; ++i) {
        for (int j = 0; j < n && c.passed; ++j) {
          if (spec.frame.c(k, i, j) != -spec.frame.c(k, j, i)) {
            c.passed = false;
            c.detail = "C^" + one_based(k) + "_{" + one_based(i) + one_based(j) + "} != -C^" + one_based(k) + "_{" +
                       one_based(j) + one_based(i) + "}";
          }
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    ValidationCheck c = make_check("jacobi");
    if (auto v = find_jacobi_violation(spec.frame)) {
      c.passed = false;
      c.detail = "Jacobi identity fails for (i,j,k) = " + triple(v->i, v->j, v->k) + ": component e_" +
                 one_based(v->l) + " of the cyclic sum is " + v->value.str();
    }
    rep.checks.push_back(c);
  }

  const Tensor& g = spec.metric.g;
  {
    ValidationCheck c = make_check("metric-symmetric");
    for (int i = 0; i < n && c.passed; ++i) {
      for (int j = i + 1; j < n && c.passed; ++j) {
        if (g(i, j) != g(j, i)) {
          c.passed = false;
          c.detail = "g_" + one_based(i) + one_based(j) + " != g_" + one_based(j) + one_based(i);
        }
      }
    }
    rep.checks.push_back(c);
  }

  {
    ValidationCheck c = make_check("metric-positive-definite");
    for (int k = 1; k <= n && c.passed; ++k) {
      Rat minor = leading_minor(g, k);
      if (minor.sign() <= 0) {
        c.passed = false;
        c.detail = "leading principal minor of order " + std::to_string(k) + " is " + minor.str();
      }
    }
    rep.checks.push_back(c);
  }

  {
    ValidationCheck c = make_check("metric-inverse");
    Tensor prod = contract(outer(spec.metric.g_inv, g), 1, 0);  // g^{ab} g_{bc}
    c.passed = prod == Tensor::identity(n);
    if (!c.passed) c.detail = "cached inverse metric does not invert g";
    rep.checks.push_back(c);
  }

  const auto& dist = spec.distinguished;
  {
    ValidationCheck c = make_check("psi-xi-compatible");
    c.passed = dist.psi == lower_index(dist.xi, g, 0, 0);
    if (!c.passed) c.detail = "psi_i != g_ij xi^j";
    rep.checks.push_back(c);
  }

  {
    ValidationCheck c = make_check("xi-unit", false);
    const Rat norm = spec.metric.inner(dist.xi, dist.xi);
    c.passed = norm == Rat(1);
    if (!c.passed) c.detail = "g(xi,xi) = " + norm.str() + "; probes that need a unit xi will be skipped";
    rep.checks.push_back(c);
  }

  if (dist.degenerate) {
    rep.notes.push_back("xi = 0: the connection with psi = 0 coincides with Levi-Civita");
  }
  return rep;
}

std::vector<std::string> jet_violations(const ScalarJet& jet, const FrameAlgebra& frame) {
  std::vector<std::string> out;
  const int n = frame.dim;
  if (jet.d.upper() != 0 || jet.d.lower() != 1 || jet.d.dim() != n || jet.dd.upper() != 0 ||
      jet.dd.lower() != 2 || jet.dd.dim() != n) {
    out.emplace_back("jet shape does not match the frame (need d: n-vector, dd: n x n)");
    return out;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Rat expected;
      for (int k = 0; k < n; ++k) expected += frame.c(k, i, j) * jet.d(k);
      const Rat actual = jet.dd(i, j) - jet.dd(j, i);
      if (actual != expected) {
        std::ostringstream os;
        os << "jet inconsistent at (i,j) = (" << i + 1 << "," << j + 1 << "): dd_ij - dd_ji = " << actual
           << " but C^k_ij d_k = " << expected;
        out.push_back(os.str());
      }
    }
  }
  return out;
}

void require_valid_jet(const ScalarJet& jet, const FrameAlgebra& frame) {
  auto v = jet_violations(jet, frame);
  if (v.empty()) return;
  std::string msg = "invalid scalar jet";
  for (const auto& s : v) msg += "; " + s;
  throw InputError(msg);
}

Tensor gradient(const ScalarJet& jet, const MetricFrame& metric) { return raise_index(jet.d, metric.g_inv, 0, 0); }

Rat directional(const ScalarJet& jet, const Tensor& vector) {
  Rat s;
  for (int k = 0; k < vector.dim(); ++k) s += jet.d(k) * vector(k);
  return s;
}

Tensor basis_vector(int dim, int i) {
  Tensor v(1, 0, dim);
  v(i) = Rat(1);
  return v;
}

}  // namespace sscurv
