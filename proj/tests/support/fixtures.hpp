#pragma once

#include "tcurv/frame.hpp"
#include "tcurv/paracontact.hpp"

#include <random>

namespace fixtures {

using tcurv::FrameSpec;
using tcurv::ParacontactSpec;
using tcurv::Rational;
using tcurv::Slot;
using tcurv::Tensor;

/// The 3-d solvable frame of the bundled example: [e1,e3] = e1, [e2,e3] = e2,
/// g = diag(1,1,eps).
inline FrameSpec e3_frame(const Rational& eps) {
  FrameSpec f = FrameSpec::make(3);
  f.g(0, 0) = Rational(1);
  f.g(1, 1) = Rational(1);
  f.g(2, 2) = eps;
  f.set_bracket(0, 2, 0, Rational(1));
  f.set_bracket(1, 2, 1, Rational(1));
  return f;
}

/// phi = diag(eps,eps,0), xi = e3, eta = (0,0,1).
inline ParacontactSpec e3_pc(const Rational& eps) {
  ParacontactSpec pc = ParacontactSpec::make(3, eps);
  pc.phi(0, 0) = eps;
  pc.phi(1, 1) = eps;
  pc.xi(2) = Rational(1);
  pc.eta(2) = Rational(1);
  return pc;
}

inline FrameSpec heisenberg_frame() {
  FrameSpec f = FrameSpec::make(3);
  for (int i = 0; i < 3; ++i) f.g(i, i) = Rational(1);
  f.set_bracket(0, 1, 2, Rational(1));
  return f;
}

inline FrameSpec abelian_frame(int dim = 3) {
  FrameSpec f = FrameSpec::make(dim);
  for (int i = 0; i < dim; ++i) f.g(i, i) = Rational(1);
  return f;
}

/// The e3 structure pushed through the basis change f3 = e1 + e3 (others
/// fixed). Same structure constants, non-diagonal metric, xi no longer a
/// basis vector: a valid structure on a non-adapted frame.
inline std::pair<FrameSpec, ParacontactSpec> e3_nonadapted(const Rational& eps) {
  FrameSpec f = FrameSpec::make(3);
  f.g(0, 0) = Rational(1);
  f.g(0, 2) = Rational(1);
  f.g(2, 0) = Rational(1);
  f.g(1, 1) = Rational(1);
  f.g(2, 2) = Rational(1) + eps;
  f.set_bracket(0, 2, 0, Rational(1));
  f.set_bracket(1, 2, 1, Rational(1));

  ParacontactSpec pc = ParacontactSpec::make(3, eps);
  // phi f1 = eps f1, phi f2 = eps f2, phi f3 = eps f1
  pc.phi(0, 0) = eps;
  pc.phi(1, 1) = eps;
  pc.phi(0, 2) = eps;
  pc.xi(0) = Rational(-1);
  pc.xi(2) = Rational(1);
  pc.eta(2) = Rational(1);
  return {f, pc};
}

/// A second homogeneous structure: [e1,e3] = e1, [e2,e3] = -e2 with
/// phi = diag(eps,-eps,0). Satisfies every structure axiom and the defining
/// equation, but has r = -2 eps: not Einstein, not of constant curvature,
/// S = -2 eta (x) eta. Exercises the eta/xi blocks of the 3-d closed forms
/// (which vanish identically at r = -6 eps) and separates local from global
/// symmetry.
inline std::pair<FrameSpec, ParacontactSpec> e3_mixed(const Rational& eps) {
  FrameSpec f = FrameSpec::make(3);
  f.g(0, 0) = Rational(1);
  f.g(1, 1) = Rational(1);
  f.g(2, 2) = eps;
  f.set_bracket(0, 2, 0, Rational(1));
  f.set_bracket(1, 2, 1, Rational(-1));
  ParacontactSpec pc = ParacontactSpec::make(3, eps);
  pc.phi(0, 0) = eps;
  pc.phi(1, 1) = -eps;
  pc.xi(2) = Rational(1);
  pc.eta(2) = Rational(1);
  return {f, pc};
}

/// Deterministic rational/tensor generator for property tests.
struct Rng {
  std::mt19937_64 gen;

  explicit Rng(std::uint64_t seed) : gen(seed) {}

  Rational rational(int num_range = 9, int den_range = 9) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return Rational(num(gen), den(gen));
  }

  Tensor tensor(int dim, std::vector<Slot> valence) {
    Tensor t(dim, std::move(valence));
    for (auto& e : t.entries()) e = rational();
    return t;
  }

  std::array<Rational, 8> params() {
    std::array<Rational, 8> a;
    for (auto& v : a) v = rational();
    return a;
  }

  /// Random almost-abelian frame: brackets [e_i, e_m] = sum_j A_ji e_j for
  /// i < m, everything else zero. Jacobi holds for any A; the metric is a
  /// random symmetric nondegenerate matrix.
  FrameSpec almost_abelian_frame(int dim = 3) {
    FrameSpec f = FrameSpec::make(dim);
    for (int i = 0; i < dim - 1; ++i)
      for (int j = 0; j < dim - 1; ++j) f.set_bracket(i, dim - 1, j, rational(3, 3));
    while (true) {
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
          Rational v = rational(3, 2);
          f.g(i, j) = v;
          f.g(j, i) = v;
        }
      if (!tcurv::metric_determinant(f.g).is_zero()) break;
    }
    return f;
  }
};

}  // namespace fixtures
