#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sscurv/error.hpp"
#include "sscurv/rat.hpp"

namespace sscurv {

/// Dense tensor of valence (upper, lower) over a frame of dimension dim.
///
/// Slots are laid out contravariant first, then covariant, row-major.
/// A (0,0) tensor is a scalar with a single component. Indices are 0-based.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int upper, int lower, int dim);

  static Tensor scalar(const Rat& value);
  /// The (1,1) Kronecker delta.
  static Tensor identity(int dim);
  /// Builds a tensor from a flat row-major component list.
  static Tensor from_components(int upper, int lower, int dim, std::vector<Rat> components);

  [[nodiscard]] int upper() const { return upper_; }
  [[nodiscard]] int lower() const { return lower_; }
  [[nodiscard]] int rank() const { return upper_ + lower_; }
  [[nodiscard]] int dim() const { return dim_; }
  [[nodiscard]] std::size_t size() const { return data_.size(); }
  [[nodiscard]] std::span<const Rat> components() const { return data_; }

  [[nodiscard]] const Rat& at(std::span<const int> index) const { return data_[offset(index)]; }
  Rat& at(std::span<const int> index) { return data_[offset(index)]; }

  template <class... I>
  [[nodiscard]] const Rat& operator()(I... i) const {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return at(idx);
  }
  template <class... I>
  Rat& operator()(I... i) {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(i)...};
    return at(idx);
  }

  /// Value of a scalar tensor.
  [[nodiscard]] const Rat& value() const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool same_shape(const Tensor& o) const {
    return upper_ == o.upper_ && lower_ == o.lower_ && dim_ == o.dim_;
  }

  /// Calls fn(index) for every multi-index in row-major order.
  void for_each_index(const std::function<void(std::span<const int>)>& fn) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rat& s);

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Rat& s) { return a *= s; }
  friend Tensor operator*(const Rat& s, Tensor a) { return a *= s; }
  friend Tensor operator-(Tensor a) { return a *= Rat(-1); }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  [[nodiscard]] std::size_t offset(std::span<const int> index) const;
  void require_same_shape(const Tensor& o, const char* op) const;

  int upper_ = 0;
  int lower_ = 0;
  int dim_ = 0;
  std::vector<Rat> data_{Rat(0)};
};

/// Tensor product; result slots are a's uppers, b's uppers, a's lowers, b's lowers.
Tensor outer(const Tensor& a, const Tensor& b);

/// Trace over the given contravariant and covariant slots (0-based within
/// their kind). Result has valence (p-1, q-1) with remaining slots in order.
Tensor contract(const Tensor& t, int upper_slot, int lower_slot);

/// Raises covariant slot `lower_slot` with g_inv, inserting the new upper slot
/// at position `dest` among the uppers.
Tensor raise_index(const Tensor& t, const Tensor& g_inv, int lower_slot, int dest);

/// Lowers contravariant slot `upper_slot` with g, inserting the new lower slot
/// at position `dest` among the lowers.
Tensor lower_index(const Tensor& t, const Tensor& g, int upper_slot, int dest);

/// Swaps two covariant slots.
Tensor swap_lower(const Tensor& t, int a, int b);

/// Symmetric part of a (0,2) tensor.
Tensor symmetrize(const Tensor& t);

/// max over components of |a - b|; shapes must agree.
Rat max_abs_deviation(const Tensor& a, const Tensor& b);

/// Exact inverse of a square (0,2) or (2,0) component matrix, returned with
/// swapped valence. Throws DegenerateMetricError if singular.
Tensor invert(const Tensor& m);

/// Determinant of the leading k x k block of a two-slot tensor.
Rat leading_minor(const Tensor& m, int k);

std::string shape_string(const Tensor& t);

}  // namespace sscurv
