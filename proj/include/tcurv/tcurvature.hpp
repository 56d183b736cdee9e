#pragma once

#include "tcurv/geometry.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace tcurv {

/// Coefficient vector of the 8-parameter generalized curvature family
///   T(X,Y)Z = a0 R(X,Y)Z + a1 S(Y,Z)X + a2 S(X,Z)Y + a3 S(X,Y)Z
///           + a4 g(Y,Z)QX + a5 g(X,Z)QY + a6 g(X,Y)QZ
///           + a7 r (g(Y,Z)X - g(X,Z)Y).
/// When built from a named preset, the name, the dimension it was built for
/// and (for the two-parameter families) the free parameters are recorded so
/// the coefficients can be regenerated and the dimension re-checked at use.
struct TParams {
  std::array<Rational, 8> a{};
  std::optional<std::string> preset_name;
  std::optional<int> preset_dim;
  std::optional<std::array<Rational, 2>> preset_free;
};

/// The 20 preset names in canonical (report) order.
const std::vector<std::string>& preset_names();

/// True for the two presets that take free parameters (a0, a1):
/// quasiconformal and pseudoprojective.
bool preset_has_free_params(const std::string& name);

/// Coefficients of a named preset at dimension m (m >= 3). Unknown names and
/// dimensions that zero a denominator throw std::invalid_argument.
TParams preset(const std::string& name, int m);

/// Family presets with explicit free parameters (a0, a1).
TParams preset(const std::string& name, int m, const Rational& a0, const Rational& a1);

/// Default free parameters used when a family preset is built by name only.
std::array<Rational, 2> preset_default_free(const std::string& name, int m);

/// Assembles the family member from derived geometry. Valence
/// (Up,Down,Down,Down) with T(e_i,e_j)e_k = sum_l T^l_ijk e_l. Re-checks the
/// params' bound dimension against the geometry.
Tensor t_tensor(const TParams& params, const GeometryCache& geom);

/// The 3-dimensional closed form in terms of g, eta, r, eps only (xi is
/// recovered as eps * g^{-1} eta). Valid on validated 3-d structures, where
/// it agrees with t_tensor exactly. Throws std::invalid_argument unless dim = 3.
Tensor t_tensor_3d_closed_form(const TParams& params, const Rational& r, const Rational& eps,
                               const Tensor& g, const Tensor& eta);

/// Covariant derivative of a family tensor; extra leading Down slot is the
/// differentiation direction.
Tensor nabla_t(const Tensor& t, const Connection& conn);

}  // namespace tcurv
