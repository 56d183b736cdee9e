#pragma once

#include "tcurv/check.hpp"
#include "tcurv/errors.hpp"
#include "tcurv/tensor.hpp"

#include <stdexcept>

namespace tcurv {

/// A homogeneous frame: m vector fields with constant Lie brackets
/// [e_i,e_j] = sum_k c^k_ij e_k and a constant metric g(e_i,e_j) = g_ij.
/// Every tensor derived from such a frame has constant components, which is
/// what makes exact verification possible.
struct FrameSpec {
  int dim = 0;
  Tensor c;  // (Up,Down,Down), c(k,i,j)
  Tensor g;  // (Down,Down)

  /// Zero brackets and zero metric; fill in before use.
  static FrameSpec make(int dim) {
    return FrameSpec{dim, Tensor(dim, {Slot::Up, Slot::Down, Slot::Down}),
                     Tensor(dim, {Slot::Down, Slot::Down})};
  }

  /// Sets [e_i,e_j] component along e_k (and the antisymmetric partner).
  void set_bracket(int i, int j, int k, const Rational& coeff) {
    c(k, i, j) = coeff;
    c(k, j, i) = -coeff;
  }

  friend bool operator==(const FrameSpec&, const FrameSpec&) = default;
};

/// Thrown when a derivation refuses an invalid frame; carries the failing report.
class invalid_frame_error : public std::runtime_error {
public:
  explicit invalid_frame_error(CheckReport report)
      : std::runtime_error("frame validation failed"), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

private:
  CheckReport report_;
};

/// Structural validation: metric-symmetric, metric-nondegenerate,
/// bracket-antisymmetric, jacobi. Failures are report entries, not errors.
CheckReport validate_frame(const FrameSpec& spec);

Rational metric_determinant(const Tensor& g);

/// Exact inverse metric; throws invalid_metric_error when det(g) = 0.
Tensor metric_inverse(const Tensor& g);

}  // namespace tcurv
