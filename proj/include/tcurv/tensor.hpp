#pragma once

#include "tcurv/rational.hpp"

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace tcurv {

/// Variance of a tensor slot.
enum class Slot { Up, Down };

/// Dense multi-index array of exact rationals with a declared valence.
///
/// Conventions used throughout the engine (all indices 0-based in code,
/// 1-based in reports):
///   - entries are stored row-major in slot order;
///   - the Riemann tensor is stored as R(l,i,j,k) with valence
///     (Up,Down,Down,Down), meaning R(e_i,e_j)e_k = sum_l R^l_ijk e_l;
///   - connection coefficients as Gamma(k,i,j), nabla_{e_i} e_j = sum_k Gamma^k_ij e_k;
///   - structure constants as c(k,i,j), [e_i,e_j] = sum_k c^k_ij e_k.
class Tensor {
public:
  /// Rank-0 placeholder holding a single zero.
  Tensor() : Tensor(1, {}) {}
  Tensor(int dim, std::vector<Slot> valence);

  /// Kronecker delta as a (Up,Down) tensor.
  static Tensor identity(int dim);

  int dim() const { return dim_; }
  int rank() const { return static_cast<int>(valence_.size()); }
  const std::vector<Slot>& valence() const { return valence_; }
  std::size_t size() const { return entries_.size(); }

  const Rational& at(std::span<const int> idx) const { return entries_[flatten(idx)]; }
  Rational& at(std::span<const int> idx) { return entries_[flatten(idx)]; }

  template <typename... I>
  const Rational& operator()(I... idx) const {
    const int a[] = {static_cast<int>(idx)...};
    return at(std::span<const int>(a, sizeof...(I)));
  }
  template <typename... I>
  Rational& operator()(I... idx) {
    const int a[] = {static_cast<int>(idx)...};
    return at(std::span<const int>(a, sizeof...(I)));
  }

  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  bool is_zero() const;

  /// First index tuple (in storage order) at which the two tensors differ.
  friend std::optional<std::vector<int>> first_mismatch(const Tensor& a, const Tensor& b);

  /// Index of the entry of maximal |value|, storage order breaking ties.
  /// Empty only for rank-0; returns the tuple and the value.
  std::pair<std::vector<int>, Rational> max_abs_entry() const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(const Rational& s);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(const Rational& s, Tensor t) { return t *= s; }
  friend Tensor operator-(const Tensor& t);

  friend bool operator==(const Tensor& a, const Tensor& b) {
    return a.dim_ == b.dim_ && a.valence_ == b.valence_ && a.entries_ == b.entries_;
  }

  std::size_t flatten(std::span<const int> idx) const;
  std::vector<int> unflatten(std::size_t pos) const;

private:
  int dim_;
  std::vector<Slot> valence_;
  std::vector<Rational> entries_;
};

/// Sums the two named slots over the shared index and removes them.
/// up_slot must be Up and down_slot Down; remaining slot order is preserved.
Tensor contract(const Tensor& t, int up_slot, int down_slot);

/// Outer product; result valence is the concatenation of the operands'.
Tensor tensor_product(const Tensor& a, const Tensor& b);

/// Slot reordering: result slot p is input slot perm[p].
Tensor permute(const Tensor& t, std::span<const int> perm);

/// Metric contraction flipping one slot in place. lower needs g (Down,Down),
/// raise needs the inverse metric (Up,Up); they are mutually inverse.
Tensor lower_slot(const Tensor& t, int up_slot, const Tensor& g);
Tensor raise_slot(const Tensor& t, int down_slot, const Tensor& g_inv);

/// Visits every multi-index of the given rank in storage order.
template <typename F>
void for_each_index(int dim, int rank, F&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(rank), 0);
  if (rank == 0) {
    fn(std::span<const int>(idx));
    return;
  }
  while (true) {
    fn(std::span<const int>(idx));
    int pos = rank - 1;
    while (pos >= 0 && ++idx[pos] == dim) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
}

}  // namespace tcurv
