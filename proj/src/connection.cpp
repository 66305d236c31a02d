#include "sscurv/connection.hpp"

#include "sscurv/error.hpp"

namespace sscurv {

std::string_view to_string(ConnectionKind kind) {
  switch (kind) {
    case ConnectionKind::LeviCivita:
      return "levi-civita";
    case ConnectionKind::Ssnmc:
      return "ssnmc";
    case ConnectionKind::Custom:
      return "custom";
  }
  return "custom";
}

Connection Connection::custom(Tensor gamma) {
  if (gamma.upper() != 1 || gamma.lower() != 2) {
    throw ValenceError("connection coefficients must be a (1,2) tensor, got " + shape_string(gamma));
  }
  return Connection{std::move(gamma), ConnectionKind::Custom};
}

Connection levi_civita(const FrameAlgebra& frame, const MetricFrame& metric) {
  const int n = frame.dim;
  if (metric.dim() != n) throw ValenceError("levi_civita: metric and frame dimensions differ");
  const Tensor& g = metric.g;

  Tensor lowered(0, 3, n);  // g(nabla_i e_j, e_k)
  const Rat half(1, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rat s;
        for (int m = 0; m < n; ++m) {
          s += -frame.c(m, j, k) * g(i, m) - frame.c(m, i, k) * g(j, m) + frame.c(m, i, j) * g(k, m);
        }
        lowered(i, j, k) = s * half;
      }
    }
  }

  Tensor gamma(1, 2, n);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rat s;
        for (int k = 0; k < n; ++k) s += metric.g_inv(l, k) * lowered(i, j, k);
        gamma(l, i, j) = s;
      }
    }
  }

  Connection lc{std::move(gamma), ConnectionKind::LeviCivita};
  if (!torsion(lc, frame).is_zero()) throw Error("levi_civita: result has torsion");
  if (!non_metricity(lc, metric).is_zero()) throw Error("levi_civita: result is not metric");
  return lc;
}

Connection ssnmc(const Connection& lc, const DistinguishedField& dist) {
  if (lc.kind != ConnectionKind::LeviCivita) throw Error("ssnmc: base connection must be Levi-Civita");
  const int n = lc.dim();
  Tensor gamma = lc.gamma;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) gamma(i, i, j) += dist.psi(j);
  }
  return Connection{std::move(gamma), ConnectionKind::Ssnmc};
}

Tensor torsion(const Connection& conn, const FrameAlgebra& frame) {
  const int n = conn.dim();
  Tensor t(1, 2, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) t(k, i, j) = conn.gamma(k, i, j) - conn.gamma(k, j, i) - frame.c(k, i, j);
    }
  }
  return t;
}

Tensor semi_symmetric_torsion(const DistinguishedField& dist) {
  const int n = dist.psi.dim();
  Tensor t(1, 2, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rat v;
        if (k == i) v += dist.psi(j);
        if (k == j) v -= dist.psi(i);
        t(k, i, j) = v;
      }
    }
  }
  return t;
}

bool is_semi_symmetric(const Tensor& torsion, const DistinguishedField& dist) {
  return torsion == semi_symmetric_torsion(dist);
}

Tensor non_metricity(const Connection& conn, const MetricFrame& metric) {
  const int n = conn.dim();
  const Tensor& g = metric.g;
  Tensor q(0, 3, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Rat s;
        for (int m = 0; m < n; ++m) s -= conn.gamma(m, i, j) * g(m, k) + conn.gamma(m, i, k) * g(j, m);
        q(i, j, k) = s;
      }
    }
  }
  return q;
}

bool is_parallel(const Connection& lc, const DistinguishedField& dist) {
  if (lc.kind != ConnectionKind::LeviCivita) throw Error("is_parallel: connection must be Levi-Civita");
  return covariant_derivative_vector(lc, dist.xi).is_zero();
}

Tensor alpha_star(const Connection& lc, const DistinguishedField& dist) {
  if (lc.kind != ConnectionKind::LeviCivita) throw Error("alpha_star: connection must be Levi-Civita");
  return covariant_derivative_form(lc, dist.psi) - outer(dist.psi, dist.psi);
}

Tensor covariant_derivative_form(const Connection& conn, const Tensor& form) {
  const int n = conn.dim();
  Tensor out(0, 2, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Rat s;
      for (int k = 0; k < n; ++k) s -= conn.gamma(k, i, j) * form(k);
      out(i, j) = s;
    }
  }
  return out;
}

Tensor covariant_derivative_vector(const Connection& conn, const Tensor& vector) {
  const int n = conn.dim();
  Tensor out(1, 1, n);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      Rat s;
      for (int j = 0; j < n; ++j) s += conn.gamma(k, i, j) * vector(j);
      out(k, i) = s;
    }
  }
  return out;
}

Tensor covariant_derivative_operator(const Connection& conn, const Tensor& op) {
  const int n = conn.dim();
  Tensor out(1, 2, n);
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rat s;
        for (int m = 0; m < n; ++m) s += conn.gamma(l, i, m) * op(m, j) - op(l, m) * conn.gamma(m, i, j);
        out(l, i, j) = s;
      }
    }
  }
  return out;
}

Tensor apply(const Connection& conn, const Tensor& u, const Tensor& v) {
  const int n = conn.dim();
  Tensor out(1, 0, n);
  for (int k = 0; k < n; ++k) {
    Rat s;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) s += u(i) * conn.gamma(k, i, j) * v(j);
    }
    out(k) = s;
  }
  return out;
}

}  // namespace sscurv
