#pragma once

#include "tcurv/check.hpp"
#include "tcurv/connection.hpp"
#include "tcurv/frame.hpp"

#include <optional>

namespace tcurv {

/// Sign conventions (the one place they are fixed):
///   R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
///   R(l,i,j,k): R(e_i,e_j)e_k = sum_l R^l_ijk e_l
///   riemann_low(i,j,k,w) = g(R(e_i,e_j)e_k, e_w)
///   Ricci: S_jk = sum_i R^i_ijk (frame-general trace, no orthonormality assumed)
///   scalar: r = sum_jk g^jk S_jk
///   Q^i_j = sum_k g^ik S_kj, so that g(QX,Y) = S(X,Y)
struct GeometryCache {
  FrameSpec frame;
  Tensor g_inv;
  Connection conn;
  Tensor riemann;      // (Up,Down,Down,Down)
  Tensor riemann_low;  // (Down,Down,Down,Down)
  Tensor ricci;        // (Down,Down)
  Tensor ricci_op;     // (Up,Down)
  Rational scalar;

  /// Derives everything from the frame; throws invalid_frame_error when the
  /// frame fails structural validation.
  static GeometryCache derive(const FrameSpec& spec);
};

/// R^l_ijk = sum_p (Gamma^p_jk Gamma^l_ip - Gamma^p_ik Gamma^l_jp) - sum_p c^p_ij Gamma^l_pk.
/// (Derivative terms vanish: Gamma is frame-constant.)
Tensor riemann_tensor(const FrameSpec& spec, const Connection& conn);

Tensor ricci_tensor(const Tensor& riemann);
Rational scalar_curvature(const Tensor& ricci, const Tensor& g_inv);
Tensor ricci_operator(const Tensor& ricci, const Tensor& g_inv);

/// Frame-constant covariant derivative: output gains one leading Down slot
/// (the direction). For each Up slot a term +Gamma^l_wp t(..p..), for each
/// Down slot a term -Gamma^p_wi t(..p..); no directional-derivative term.
Tensor covariant_derivative(const Tensor& t, const Connection& conn);

/// Tests R(X,Y,Z,W) = c (g(Y,Z)g(X,W) - g(X,Z)g(Y,W)) for a single rational c.
std::optional<Rational> constant_curvature_test(const Tensor& riemann_low, const Tensor& g);

/// Tests S = lambda g.
std::optional<Rational> einstein_test(const Tensor& ricci, const Tensor& g);

/// Levi-Civita curvature symmetries: antisymmetry in (i,j), antisymmetry in
/// the last two lowered slots, pair symmetry, first Bianchi, Ricci symmetry.
CheckReport curvature_symmetry_suite(const GeometryCache& geom, const FrameSpec& spec);

}  // namespace tcurv
