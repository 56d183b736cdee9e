#include "tcurv/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace tcurv {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

}  // namespace

Tensor::Tensor(int dim, std::vector<Slot> valence)
    : dim_(dim), valence_(std::move(valence)) {
  if (dim < 1) throw std::invalid_argument("Tensor: dimension must be positive");
  entries_.assign(pow_size(dim_, rank()), Rational(0));
}

Tensor Tensor::identity(int dim) {
  Tensor t(dim, {Slot::Up, Slot::Down});
  for (int i = 0; i < dim; ++i) t(i, i) = Rational(1);
  return t;
}

std::size_t Tensor::flatten(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != rank())
    throw std::invalid_argument("Tensor: index arity mismatch");
  std::size_t pos = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) throw std::out_of_range("Tensor: index out of range");
    pos = pos * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return pos;
}

std::vector<int> Tensor::unflatten(std::size_t pos) const {
  std::vector<int> idx(static_cast<std::size_t>(rank()), 0);
  for (int s = rank() - 1; s >= 0; --s) {
    idx[static_cast<std::size_t>(s)] = static_cast<int>(pos % static_cast<std::size_t>(dim_));
    pos /= static_cast<std::size_t>(dim_);
  }
  return idx;
}

bool Tensor::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

std::optional<std::vector<int>> first_mismatch(const Tensor& a, const Tensor& b) {
  if (a.dim_ != b.dim_ || a.valence_ != b.valence_)
    throw std::invalid_argument("first_mismatch: shape mismatch");
  for (std::size_t p = 0; p < a.entries_.size(); ++p)
    if (a.entries_[p] != b.entries_[p]) return a.unflatten(p);
  return std::nullopt;
}

std::pair<std::vector<int>, Rational> Tensor::max_abs_entry() const {
  std::size_t best = 0;
  Rational best_abs = entries_.empty() ? Rational(0) : entries_[0].abs();
  for (std::size_t p = 1; p < entries_.size(); ++p) {
    Rational a = entries_[p].abs();
    if (a > best_abs) {
      best_abs = a;
      best = p;
    }
  }
  return {unflatten(best), entries_[best]};
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (dim_ != o.dim_ || valence_ != o.valence_)
    throw std::invalid_argument("Tensor: shape mismatch in addition");
  for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] += o.entries_[p];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (dim_ != o.dim_ || valence_ != o.valence_)
    throw std::invalid_argument("Tensor: shape mismatch in subtraction");
  for (std::size_t p = 0; p < entries_.size(); ++p) entries_[p] -= o.entries_[p];
  return *this;
}

Tensor& Tensor::operator*=(const Rational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

Tensor operator-(const Tensor& t) {
  Tensor r = t;
  return r *= Rational(-1);
}

Tensor contract(const Tensor& t, int up_slot, int down_slot) {
  const int r = t.rank();
  if (up_slot < 0 || up_slot >= r || down_slot < 0 || down_slot >= r || up_slot == down_slot)
    throw std::invalid_argument("contract: slot out of range");
  if (t.valence()[static_cast<std::size_t>(up_slot)] != Slot::Up)
    throw std::invalid_argument("contract: first slot must be contravariant");
  if (t.valence()[static_cast<std::size_t>(down_slot)] != Slot::Down)
    throw std::invalid_argument("contract: second slot must be covariant");

  std::vector<int> keep;
  std::vector<Slot> out_valence;
  for (int s = 0; s < r; ++s) {
    if (s == up_slot || s == down_slot) continue;
    keep.push_back(s);
    out_valence.push_back(t.valence()[static_cast<std::size_t>(s)]);
  }
  Tensor out(t.dim(), out_valence);
  std::vector<int> full(static_cast<std::size_t>(r), 0);
  for_each_index(t.dim(), out.rank(), [&](std::span<const int> idx) {
    for (std::size_t p = 0; p < keep.size(); ++p)
      full[static_cast<std::size_t>(keep[p])] = idx[p];
    Rational sum(0);
    for (int s = 0; s < t.dim(); ++s) {
      full[static_cast<std::size_t>(up_slot)] = s;
      full[static_cast<std::size_t>(down_slot)] = s;
      sum += t.at(full);
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor_product: dimension mismatch");
  std::vector<Slot> valence = a.valence();
  valence.insert(valence.end(), b.valence().begin(), b.valence().end());
  Tensor out(a.dim(), valence);
  const std::size_t nb = b.entries().size();
  for (std::size_t pa = 0; pa < a.entries().size(); ++pa)
    for (std::size_t pb = 0; pb < nb; ++pb) {
      Rational v = a.entries()[pa];
      v *= b.entries()[pb];
      out.entries()[pa * nb + pb] = v;
    }
  return out;
}

Tensor permute(const Tensor& t, std::span<const int> perm) {
  const int r = t.rank();
  if (static_cast<int>(perm.size()) != r)
    throw std::invalid_argument("permute: arity mismatch");
  std::vector<bool> seen(static_cast<std::size_t>(r), false);
  std::vector<Slot> valence(static_cast<std::size_t>(r), Slot::Up);
  for (int p = 0; p < r; ++p) {
    int src = perm[static_cast<std::size_t>(p)];
    if (src < 0 || src >= r || seen[static_cast<std::size_t>(src)])
      throw std::invalid_argument("permute: not a permutation");
    seen[static_cast<std::size_t>(src)] = true;
    valence[static_cast<std::size_t>(p)] = t.valence()[static_cast<std::size_t>(src)];
  }
  Tensor out(t.dim(), valence);
  std::vector<int> src_idx(static_cast<std::size_t>(r), 0);
  for_each_index(t.dim(), r, [&](std::span<const int> idx) {
    for (int p = 0; p < r; ++p)
      src_idx[static_cast<std::size_t>(perm[static_cast<std::size_t>(p)])] = idx[static_cast<std::size_t>(p)];
    out.at(idx) = t.at(src_idx);
  });
  return out;
}

namespace {

Tensor metric_flip(const Tensor& t, int slot, const Tensor& metric, Slot expect_slot,
                   Slot metric_slot, const char* what) {
  const int r = t.rank();
  if (slot < 0 || slot >= r) throw std::invalid_argument(std::string(what) + ": slot out of range");
  if (t.valence()[static_cast<std::size_t>(slot)] != expect_slot)
    throw std::invalid_argument(std::string(what) + ": slot has wrong variance");
  if (metric.rank() != 2 || metric.valence()[0] != metric_slot || metric.valence()[1] != metric_slot)
    throw std::invalid_argument(std::string(what) + ": metric has wrong valence");
  if (metric.dim() != t.dim())
    throw std::invalid_argument(std::string(what) + ": metric dimension mismatch");

  // Contract against the metric, then move the new slot back in place.
  Tensor prod = tensor_product(t, metric);
  Tensor contracted = expect_slot == Slot::Up ? contract(prod, slot, r)
                                              : contract(prod, r, slot);
  std::vector<int> perm(static_cast<std::size_t>(r), 0);
  for (int p = 0; p < r; ++p) {
    if (p < slot)
      perm[static_cast<std::size_t>(p)] = p;
    else if (p == slot)
      perm[static_cast<std::size_t>(p)] = r - 1;
    else
      perm[static_cast<std::size_t>(p)] = p - 1;
  }
  return permute(contracted, perm);
}

}  // namespace

Tensor lower_slot(const Tensor& t, int up_slot, const Tensor& g) {
  return metric_flip(t, up_slot, g, Slot::Up, Slot::Down, "lower_slot");
}

Tensor raise_slot(const Tensor& t, int down_slot, const Tensor& g_inv) {
  return metric_flip(t, down_slot, g_inv, Slot::Down, Slot::Up, "raise_slot");
}

}  // namespace tcurv
