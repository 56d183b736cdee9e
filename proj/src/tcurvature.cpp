#include "tcurv/tcurvature.hpp"

#include "tcurv/errors.hpp"

#include <stdexcept>

namespace tcurv {

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {
      "riemann",    "quasiconformal", "conformal", "conharmonic", "concircular",
      "pseudoprojective", "projective", "m-projective", "w0",     "w0star",
      "w1",         "w1star",         "w2",        "w3",          "w4",
      "w5",         "w6",             "w7",        "w8",          "w9"};
  return names;
}

bool preset_has_free_params(const std::string& name) {
  return name == "quasiconformal" || name == "pseudoprojective";
}

std::array<Rational, 2> preset_default_free(const std::string& name, int m) {
  if (name == "quasiconformal") {
    // Generic representative; the point (1, -1/(m-2)) reproduces the
    // conformal tensor and is reachable via explicit parameters.
    (void)m;
    return {Rational(1), Rational(1)};
  }
  if (name == "pseudoprojective") {
    // Reproduces the projective tensor.
    return {Rational(1), Rational(-1, 1) / Rational(m - 1)};
  }
  throw std::invalid_argument("preset '" + name + "' has no free parameters");
}

namespace {

TParams finish(TParams p, std::string name, int m,
               std::optional<std::array<Rational, 2>> free_params) {
  p.preset_name = std::move(name);
  p.preset_dim = m;
  p.preset_free = free_params;
  return p;
}

}  // namespace

TParams preset(const std::string& name, int m, const Rational& a0, const Rational& a1) {
  if (m < 3) throw std::invalid_argument("preset: dimension must be at least 3");
  if (name == "quasiconformal") {
    TParams p;
    p.a[0] = a0;
    p.a[1] = a1;
    p.a[2] = -a1;
    p.a[4] = a1;
    p.a[5] = -a1;
    p.a[7] = -(Rational(1) / Rational(m)) * (a0 / Rational(m - 1) + Rational(2) * a1);
    return finish(std::move(p), name, m, std::array<Rational, 2>{a0, a1});
  }
  if (name == "pseudoprojective") {
    TParams p;
    p.a[0] = a0;
    p.a[1] = a1;
    p.a[2] = -a1;
    p.a[7] = -(Rational(1) / Rational(m)) * (a0 / Rational(m - 1) + a1);
    return finish(std::move(p), name, m, std::array<Rational, 2>{a0, a1});
  }
  throw std::invalid_argument("preset '" + name + "' does not take free parameters");
}

TParams preset(const std::string& name, int m) {
  if (m < 3) throw std::invalid_argument("preset: dimension must be at least 3");
  if (preset_has_free_params(name)) {
    auto d = preset_default_free(name, m);
    return preset(name, m, d[0], d[1]);
  }

  const Rational one(1);
  const Rational inv_m1 = one / Rational(m - 1);         // 1/(m-1)
  const Rational inv_m2 = one / Rational(m - 2);         // 1/(m-2), m >= 3
  TParams p;
  p.a[0] = one;

  if (name == "riemann") {
    // a0 = 1, rest 0
  } else if (name == "conformal") {
    p.a[1] = -inv_m2;
    p.a[2] = inv_m2;
    p.a[4] = -inv_m2;
    p.a[5] = inv_m2;
    p.a[7] = inv_m1 * inv_m2;
  } else if (name == "conharmonic") {
    p.a[1] = -inv_m2;
    p.a[2] = inv_m2;
    p.a[4] = -inv_m2;
    p.a[5] = inv_m2;
  } else if (name == "concircular") {
    p.a[7] = -(one / Rational(m)) * inv_m1;
  } else if (name == "projective") {
    p.a[1] = -inv_m1;
    p.a[2] = inv_m1;
  } else if (name == "m-projective") {
    const Rational h = inv_m1 / Rational(2);
    p.a[1] = -h;
    p.a[2] = h;
    p.a[4] = -h;
    p.a[5] = h;
  } else if (name == "w0") {
    p.a[1] = -inv_m1;
    p.a[5] = inv_m1;
  } else if (name == "w0star") {
    p.a[1] = inv_m1;
    p.a[5] = -inv_m1;
  } else if (name == "w1") {
    p.a[1] = inv_m1;
    p.a[2] = -inv_m1;
  } else if (name == "w1star") {
    p.a[1] = -inv_m1;
    p.a[2] = inv_m1;
  } else if (name == "w2") {
    p.a[4] = -inv_m1;
    p.a[5] = inv_m1;
  } else if (name == "w3") {
    p.a[2] = -inv_m1;
    p.a[4] = inv_m1;
  } else if (name == "w4") {
    p.a[5] = inv_m1;
    p.a[6] = -inv_m1;
  } else if (name == "w5") {
    p.a[2] = -inv_m1;
    p.a[5] = inv_m1;
  } else if (name == "w6") {
    p.a[1] = -inv_m1;
    p.a[6] = inv_m1;
  } else if (name == "w7") {
    p.a[1] = -inv_m1;
    p.a[4] = inv_m1;
  } else if (name == "w8") {
    p.a[1] = -inv_m1;
    p.a[3] = inv_m1;
  } else if (name == "w9") {
    p.a[3] = inv_m1;
    p.a[4] = -inv_m1;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  return finish(std::move(p), name, m, std::nullopt);
}

Tensor t_tensor(const TParams& params, const GeometryCache& geom) {
  const int m = geom.frame.dim;
  if (params.preset_dim && *params.preset_dim != m)
    throw precondition_error("t_tensor: params were built for dimension " +
                             std::to_string(*params.preset_dim) + ", geometry has dimension " +
                             std::to_string(m));
  const Tensor& g = geom.frame.g;
  const Tensor& rm = geom.riemann;
  const Tensor& s = geom.ricci;
  const Tensor& q = geom.ricci_op;
  const Rational& r = geom.scalar;
  const auto& a = params.a;

  Tensor t(m, {Slot::Up, Slot::Down, Slot::Down, Slot::Down});
  for (int l = 0; l < m; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v = a[0] * rm(l, i, j, k);
          if (l == i) v += a[1] * s(j, k);
          if (l == j) v += a[2] * s(i, k);
          if (l == k) v += a[3] * s(i, j);
          v += a[4] * g(j, k) * q(l, i);
          v += a[5] * g(i, k) * q(l, j);
          v += a[6] * g(i, j) * q(l, k);
          if (l == i) v += a[7] * r * g(j, k);
          if (l == j) v -= a[7] * r * g(i, k);
          t(l, i, j, k) = v;
        }
  return t;
}

Tensor t_tensor_3d_closed_form(const TParams& params, const Rational& r, const Rational& eps,
                               const Tensor& g, const Tensor& eta) {
  const int m = g.dim();
  if (m != 3) throw std::invalid_argument("t_tensor_3d_closed_form: dimension must be 3");
  if (params.preset_dim && *params.preset_dim != 3)
    throw precondition_error("t_tensor_3d_closed_form: params bound to dimension " +
                             std::to_string(*params.preset_dim));
  const auto& a = params.a;
  const Rational half_r = r / Rational(2);

  // xi is determined by the structure: g(X, xi) = eps eta(X).
  const Tensor g_inv = metric_inverse(g);
  std::array<Rational, 3> xi{};
  for (int l = 0; l < 3; ++l) {
    Rational v(0);
    for (int p = 0; p < 3; ++p) v += g_inv(l, p) * eta(p);
    xi[static_cast<std::size_t>(l)] = eps * v;
  }

  const Rational ca = (half_r + eps) * (a[0] + a[1] + a[4]) + a[7] * r + eps * a[0];
  const Rational cb = (half_r + eps) * (a[0] - a[2] - a[5]) + a[7] * r + eps * a[0];
  const Rational cg = (half_r + eps) * (a[3] + a[6]);
  const Rational cd = eps * half_r + Rational(3);   // eta-eta coefficient block
  const Rational ce = half_r + Rational(3) * eps;   // eta-xi coefficient block

  Tensor t(3, {Slot::Up, Slot::Down, Slot::Down, Slot::Down});
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          Rational v(0);
          if (l == i) v += ca * g(j, k);
          if (l == j) v -= cb * g(i, k);
          if (l == k) v += cg * g(i, j);
          if (l == k) v -= cd * a[3] * eta(i) * eta(j);
          if (l == i) v -= cd * (a[0] + a[1]) * eta(j) * eta(k);
          if (l == j) v += cd * (a[0] - a[2]) * eta(i) * eta(k);
          const Rational& xl = xi[static_cast<std::size_t>(l)];
          v += ce * (a[0] - a[5]) * g(i, k) * eta(j) * xl;
          v -= ce * a[6] * g(i, j) * eta(k) * xl;
          v -= ce * (a[0] + a[4]) * g(j, k) * eta(i) * xl;
          t(l, i, j, k) = v;
        }
  return t;
}

Tensor nabla_t(const Tensor& t, const Connection& conn) {
  return covariant_derivative(t, conn);
}

}  // namespace tcurv
