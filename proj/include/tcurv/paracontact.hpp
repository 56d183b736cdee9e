#pragma once

#include "tcurv/geometry.hpp"

#include <vector>

namespace tcurv {

/// The (phi, xi, eta, eps) structure under test. Validity of the axioms is
/// not presupposed; it is what validate_paracontact decides.
struct ParacontactSpec {
  Tensor phi;  // (Up,Down)
  Tensor xi;   // (Up)
  Tensor eta;  // (Down)
  Rational eps;  // +1 or -1

  static ParacontactSpec make(int dim, Rational eps);

  friend bool operator==(const ParacontactSpec&, const ParacontactSpec&) = default;
};

/// Structure axioms, one check per axiom:
///   phi^2 = I - eta (x) xi; eta(xi) = 1; phi xi = 0; eta o phi = 0;
///   g(phi X, phi Y) = g(X,Y) - eps eta(X) eta(Y); g(X, phi Y) = g(phi X, Y);
///   g(X, xi) = eps eta(X); g(xi, xi) = eps.
CheckReport validate_paracontact(const FrameSpec& spec, const ParacontactSpec& pc);

/// The defining equation (nabla_X phi)Y = -g(phi X, phi Y) xi - eps eta(Y) phi^2 X
/// over all frame pairs, plus the consequence nabla xi = eps phi.
CheckReport validate_eps_ps(const FrameSpec& spec, const ParacontactSpec& pc,
                            const GeometryCache& geom);

/// The ten curvature/Ricci identities that hold on these structures,
/// each evaluated entrywise over all frame index tuples.
CheckReport identity_suite(const FrameSpec& spec, const ParacontactSpec& pc,
                           const GeometryCache& geom);

/// 3-dimensional formula suite: curvature decomposition, Q and S closed
/// forms, the curvature closed form, and the constant-curvature lemma
/// (biconditional with r = -6 eps). Throws std::invalid_argument unless dim = 3.
CheckReport dim3_formula_suite(const FrameSpec& spec, const ParacontactSpec& pc,
                               const GeometryCache& geom);

/// Applies phi^2 to the single Up slot of t. Throws std::invalid_argument
/// if t does not have exactly one Up slot.
Tensor phi_square_apply(const Tensor& t, const ParacontactSpec& pc);

/// 0-based frame indices orthogonal to xi (eta(e_i) = 0, e_i != xi).
/// Requires an adapted frame: xi must be a basis vector and eta must vanish
/// on every other basis vector; otherwise throws adapted_frame_error.
std::vector<int> horizontal_indices(const FrameSpec& spec, const ParacontactSpec& pc);

}  // namespace tcurv
