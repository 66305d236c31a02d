#include "sscurv/tensor.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace sscurv {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Row-major iteration over rank-many indices each in [0, dim).
bool next_index(std::vector<int>& idx, int dim) {
  for (int s = static_cast<int>(idx.size()) - 1; s >= 0; --s) {
    if (++idx[s] < dim) return true;
    idx[s] = 0;
  }
  return false;
}

void require_two_slot_square(const Tensor& m, const char* op) {
  if (m.rank() != 2 || m.upper() == 1) {
    throw ValenceError(std::string(op) + ": expected a (0,2) or (2,0) tensor, got " + shape_string(m));
  }
}

}  // namespace

Tensor::Tensor(int upper, int lower, int dim) : upper_(upper), lower_(lower), dim_(dim) {
  if (upper < 0 || lower < 0) throw ValenceError("negative valence");
  if (dim <= 0) throw ValenceError("tensor dimension must be positive");
  // All scalars share one shape regardless of the frame they came from.
  if (upper + lower == 0) dim_ = 1;
  data_.assign(ipow(dim, upper + lower), Rat(0));
}

Tensor Tensor::scalar(const Rat& value) {
  Tensor t(0, 0, 1);
  t.data_[0] = value;
  return t;
}

Tensor Tensor::identity(int dim) {
  Tensor t(1, 1, dim);
  for (int i = 0; i < dim; ++i) t(i, i) = Rat(1);
  return t;
}

Tensor Tensor::from_components(int upper, int lower, int dim, std::vector<Rat> components) {
  Tensor t(upper, lower, dim);
  if (components.size() != t.data_.size()) {
    throw ValenceError("component count " + std::to_string(components.size()) + " does not match " +
                       shape_string(t) + " (expected " + std::to_string(t.data_.size()) + ")");
  }
  t.data_ = std::move(components);
  return t;
}

const Rat& Tensor::value() const {
  if (rank() != 0) throw ValenceError("value() on non-scalar tensor " + shape_string(*this));
  return data_[0];
}

bool Tensor::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& r) { return r.is_zero(); });
}

void Tensor::for_each_index(const std::function<void(std::span<const int>)>& fn) const {
  std::vector<int> idx(static_cast<std::size_t>(rank()), 0);
  do {
    fn(idx);
  } while (next_index(idx, dim_));
}

std::size_t Tensor::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank()) {
    throw ValenceError("index of length " + std::to_string(index.size()) + " on " + shape_string(*this));
  }
  std::size_t off = 0;
  for (int i : index) {
    if (i < 0 || i >= dim_) {
      throw ValenceError("index " + std::to_string(i) + " out of range for dim " + std::to_string(dim_));
    }
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i);
  }
  return off;
}

void Tensor::require_same_shape(const Tensor& o, const char* op) const {
  if (!same_shape(o)) {
    throw ValenceError(std::string(op) + ": shape mismatch " + shape_string(*this) + " vs " + shape_string(o));
  }
}

Tensor& Tensor::operator+=(const Tensor& o) {
  require_same_shape(o, "add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  require_same_shape(o, "subtract");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(const Rat& s) {
  for (auto& c : data_) c *= s;
  return *this;
}

Tensor outer(const Tensor& a, const Tensor& b) {
  if (a.rank() > 0 && b.rank() > 0 && a.dim() != b.dim()) throw ValenceError("outer: dimension mismatch");
  const int dim = a.rank() > 0 ? a.dim() : b.dim();
  Tensor out(a.upper() + b.upper(), a.lower() + b.lower(), dim);
  std::vector<int> ia(static_cast<std::size_t>(a.rank()));
  std::vector<int> ib(static_cast<std::size_t>(b.rank()));
  out.for_each_index([&](std::span<const int> idx) {
    // out = [a_up, b_up, a_lo, b_lo]
    int p = 0;
    for (int s = 0; s < a.upper(); ++s) ia[s] = idx[p++];
    for (int s = 0; s < b.upper(); ++s) ib[s] = idx[p++];
    for (int s = 0; s < a.lower(); ++s) ia[a.upper() + s] = idx[p++];
    for (int s = 0; s < b.lower(); ++s) ib[b.upper() + s] = idx[p++];
    out.at(idx) = a.at(ia) * b.at(ib);
  });
  return out;
}

Tensor contract(const Tensor& t, int upper_slot, int lower_slot) {
  if (upper_slot < 0 || upper_slot >= t.upper()) {
    throw ValenceError("contract: slot " + std::to_string(upper_slot) + " is not a contravariant slot of " +
                       shape_string(t));
  }
  if (lower_slot < 0 || lower_slot >= t.lower()) {
    throw ValenceError("contract: slot " + std::to_string(lower_slot) + " is not a covariant slot of " +
                       shape_string(t));
  }
  const int up_pos = upper_slot;
  const int lo_pos = t.upper() + lower_slot;
  Tensor out(t.upper() - 1, t.lower() - 1, t.dim());
  std::vector<int> full(static_cast<std::size_t>(t.rank()));
  out.for_each_index([&](std::span<const int> idx) {
    int p = 0;
    for (int s = 0; s < t.rank(); ++s) {
      if (s != up_pos && s != lo_pos) full[s] = idx[p++];
    }
    Rat sum;
    for (int m = 0; m < t.dim(); ++m) {
      full[up_pos] = m;
      full[lo_pos] = m;
      sum += t.at(full);
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor raise_index(const Tensor& t, const Tensor& g_inv, int lower_slot, int dest) {
  if (g_inv.upper() != 2 || g_inv.lower() != 0 || g_inv.dim() != t.dim()) {
    throw ValenceError("raise_index: expected (2,0) inverse metric of matching dim");
  }
  if (lower_slot < 0 || lower_slot >= t.lower()) throw ValenceError("raise_index: bad covariant slot");
  if (dest < 0 || dest > t.upper()) throw ValenceError("raise_index: bad destination slot");
  Tensor out(t.upper() + 1, t.lower() - 1, t.dim());
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  const int src_pos = t.upper() + lower_slot;
  out.for_each_index([&](std::span<const int> idx) {
    // Map output index back onto source layout, leaving the raised slot free.
    int p = 0;
    for (int s = 0; s < out.upper(); ++s) {
      if (s == dest) continue;
      src[p++] = idx[s];
    }
    for (int s = 0; s < t.lower(); ++s) {
      if (s == lower_slot) {
        ++p;
        continue;
      }
      src[p++] = idx[out.upper() + (s < lower_slot ? s : s - 1)];
    }
    Rat sum;
    for (int m = 0; m < t.dim(); ++m) {
      src[src_pos] = m;
      sum += g_inv(idx[dest], m) * t.at(src);
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor lower_index(const Tensor& t, const Tensor& g, int upper_slot, int dest) {
  if (g.upper() != 0 || g.lower() != 2 || g.dim() != t.dim()) {
    throw ValenceError("lower_index: expected (0,2) metric of matching dim");
  }
  if (upper_slot < 0 || upper_slot >= t.upper()) throw ValenceError("lower_index: bad contravariant slot");
  if (dest < 0 || dest > t.lower()) throw ValenceError("lower_index: bad destination slot");
  Tensor out(t.upper() - 1, t.lower() + 1, t.dim());
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  out.for_each_index([&](std::span<const int> idx) {
    int p = 0;
    for (int s = 0; s < t.upper(); ++s) {
      if (s == upper_slot) {
        ++p;
        continue;
      }
      src[p++] = idx[s < upper_slot ? s : s - 1];
    }
    for (int s = 0; s < out.lower(); ++s) {
      if (s == dest) continue;
      src[p++] = idx[out.upper() + s];
    }
    const int free = idx[out.upper() + dest];
    Rat sum;
    for (int m = 0; m < t.dim(); ++m) {
      src[upper_slot] = m;
      sum += g(free, m) * t.at(src);
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor swap_lower(const Tensor& t, int a, int b) {
  if (a < 0 || b < 0 || a >= t.lower() || b >= t.lower()) throw ValenceError("swap_lower: bad slot");
  Tensor out(t.upper(), t.lower(), t.dim());
  std::vector<int> src(static_cast<std::size_t>(t.rank()));
  out.for_each_index([&](std::span<const int> idx) {
    std::copy(idx.begin(), idx.end(), src.begin());
    std::swap(src[t.upper() + a], src[t.upper() + b]);
    out.at(idx) = t.at(src);
  });
  return out;
}

Tensor symmetrize(const Tensor& t) {
  if (t.upper() != 0 || t.lower() != 2) throw ValenceError("symmetrize: expected (0,2), got " + shape_string(t));
  return (t + swap_lower(t, 0, 1)) * Rat(1, 2);
}

Rat max_abs_deviation(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) throw ValenceError("max_abs_deviation: shape mismatch " + shape_string(a) + " vs " + shape_string(b));
  Rat best;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Rat d = (a.components()[i] - b.components()[i]).abs();
    if (d > best) best = d;
  }
  return best;
}

Tensor invert(const Tensor& m) {
  require_two_slot_square(m, "invert");
  const int n = m.dim();
  // Gauss-Jordan on [m | I].
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DegenerateMetricError("matrix is singular");
    std::swap(a[col], a[pivot]);
    const Rat inv = Rat(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rat f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  Tensor out(m.lower(), m.upper(), n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) out(i, j) = a[i][n + j];
  }
  return out;
}

Rat leading_minor(const Tensor& m, int k) {
  if (m.rank() != 2) throw ValenceError("leading_minor: expected a two-slot tensor");
  if (k < 0 || k > m.dim()) throw ValenceError("leading_minor: bad order");
  std::vector<std::vector<Rat>> a(k, std::vector<Rat>(k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) a[i][j] = m(i, j);
  }
  Rat det(1);
  for (int col = 0; col < k; ++col) {
    int pivot = col;
    while (pivot < k && a[pivot][col].is_zero()) ++pivot;
    if (pivot == k) return Rat(0);
    if (pivot != col) {
      std::swap(a[col], a[pivot]);
      det = -det;
    }
    det *= a[col][col];
    for (int r = col + 1; r < k; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rat f = a[r][col] / a[col][col];
      for (int c = col; c < k; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::string shape_string(const Tensor& t) {
  return "(" + std::to_string(t.upper()) + "," + std::to_string(t.lower()) + ")[dim " + std::to_string(t.dim()) + "]";
}

}  // namespace sscurv
