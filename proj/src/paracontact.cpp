#include "tcurv/paracontact.hpp"

#include "tcurv/errors.hpp"

#include <stdexcept>

namespace tcurv {

ParacontactSpec ParacontactSpec::make(int dim, Rational eps) {
  return ParacontactSpec{Tensor(dim, {Slot::Up, Slot::Down}), Tensor(dim, {Slot::Up}),
                         Tensor(dim, {Slot::Down}), std::move(eps)};
}

namespace {

// phi^2 as a (Up,Down) matrix
Tensor phi_square(const ParacontactSpec& pc) {
  const int m = pc.phi.dim();
  Tensor p2(m, {Slot::Up, Slot::Down});
  for (int l = 0; l < m; ++l)
    for (int j = 0; j < m; ++j) {
      Rational v(0);
      for (int q = 0; q < m; ++q) v += pc.phi(l, q) * pc.phi(q, j);
      p2(l, j) = v;
    }
  return p2;
}

void require_shapes(const FrameSpec& spec, const ParacontactSpec& pc) {
  if (pc.phi.dim() != spec.dim || pc.xi.dim() != spec.dim || pc.eta.dim() != spec.dim)
    throw std::invalid_argument("paracontact: shape mismatch with frame dimension");
  if (pc.eps * pc.eps != Rational(1))
    throw std::invalid_argument("paracontact: eps must be +1 or -1");
}

}  // namespace

CheckReport validate_paracontact(const FrameSpec& spec, const ParacontactSpec& pc) {
  require_shapes(spec, pc);
  CheckReport report;
  const int m = spec.dim;
  const Tensor& g = spec.g;
  const Tensor p2 = phi_square(pc);

  {
    Tensor lhs = p2;
    Tensor rhs = Tensor::identity(m);
    for (int l = 0; l < m; ++l)
      for (int j = 0; j < m; ++j) rhs(l, j) -= pc.eta(j) * pc.xi(l);
    report.add(check_tensors_equal("phi-square", lhs, rhs));
  }
  {
    Rational v(0);
    for (int i = 0; i < m; ++i) v += pc.eta(i) * pc.xi(i);
    report.add(check_scalar_equal("eta-xi-one", v, Rational(1)));
  }
  {
    Tensor lhs(m, {Slot::Up});
    for (int l = 0; l < m; ++l) {
      Rational v(0);
      for (int p = 0; p < m; ++p) v += pc.phi(l, p) * pc.xi(p);
      lhs(l) = v;
    }
    report.add(check_tensor_zero("phi-xi-zero", lhs));
  }
  {
    Tensor lhs(m, {Slot::Down});
    for (int j = 0; j < m; ++j) {
      Rational v(0);
      for (int p = 0; p < m; ++p) v += pc.eta(p) * pc.phi(p, j);
      lhs(j) = v;
    }
    report.add(check_tensor_zero("eta-phi-zero", lhs));
  }
  {
    Tensor lhs(m, {Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational v(0);
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) v += g(p, q) * pc.phi(p, i) * pc.phi(q, j);
        lhs(i, j) = v;
        rhs(i, j) = g(i, j) - pc.eps * pc.eta(i) * pc.eta(j);
      }
    report.add(check_tensors_equal("phi-metric-compat", lhs, rhs));
  }
  {
    Tensor lhs(m, {Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational a(0), b(0);
        for (int p = 0; p < m; ++p) {
          a += g(i, p) * pc.phi(p, j);
          b += g(p, j) * pc.phi(p, i);
        }
        lhs(i, j) = a;
        rhs(i, j) = b;
      }
    report.add(check_tensors_equal("phi-self-adjoint", lhs, rhs));
  }
  {
    Tensor lhs(m, {Slot::Down});
    Tensor rhs(m, {Slot::Down});
    for (int i = 0; i < m; ++i) {
      Rational v(0);
      for (int p = 0; p < m; ++p) v += g(i, p) * pc.xi(p);
      lhs(i) = v;
      rhs(i) = pc.eps * pc.eta(i);
    }
    report.add(check_tensors_equal("xi-metric-dual", lhs, rhs));
  }
  {
    Rational v(0);
    for (int p = 0; p < m; ++p)
      for (int q = 0; q < m; ++q) v += g(p, q) * pc.xi(p) * pc.xi(q);
    report.add(check_scalar_equal("xi-norm", v, pc.eps));
  }

  return report;
}

CheckReport validate_eps_ps(const FrameSpec& spec, const ParacontactSpec& pc,
                            const GeometryCache& geom) {
  require_shapes(spec, pc);
  CheckReport report;
  const int m = spec.dim;
  const Tensor& g = spec.g;
  const Tensor p2 = phi_square(pc);
  const Tensor nabla_phi = covariant_derivative(pc.phi, geom.conn);  // (i, l, j)

  {
    Tensor lhs(m, {Slot::Down, Slot::Up, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Up, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l)
        for (int j = 0; j < m; ++j) {
          lhs(i, l, j) = nabla_phi(i, l, j);
          Rational gphi(0);
          for (int p = 0; p < m; ++p)
            for (int q = 0; q < m; ++q) gphi += g(p, q) * pc.phi(p, i) * pc.phi(q, j);
          rhs(i, l, j) = -gphi * pc.xi(l) - pc.eps * pc.eta(j) * p2(l, i);
        }
    report.add(check_tensors_equal("para-sasaki-defining-eq", lhs, rhs));
  }
  {
    const Tensor nabla_xi = covariant_derivative(pc.xi, geom.conn);  // (i, l)
    Tensor rhs(m, {Slot::Down, Slot::Up});
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l) rhs(i, l) = pc.eps * pc.phi(l, i);
    report.add(check_tensors_equal("nabla-xi-eq-eps-phi", nabla_xi, rhs));
  }

  return report;
}

CheckReport identity_suite(const FrameSpec& spec, const ParacontactSpec& pc,
                           const GeometryCache& geom) {
  require_shapes(spec, pc);
  CheckReport report;
  const int m = spec.dim;
  const Tensor& g = spec.g;
  const Tensor& rm = geom.riemann;
  const Tensor& rl = geom.riemann_low;
  const Tensor& s = geom.ricci;
  const Rational m1(m - 1);

  {
    // R(X,Y)xi = eta(X)Y - eta(Y)X
    Tensor lhs(m, {Slot::Up, Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Up, Slot::Down, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Rational v(0);
          for (int k = 0; k < m; ++k) v += rm(l, i, j, k) * pc.xi(k);
          lhs(l, i, j) = v;
          Rational w(0);
          if (l == j) w += pc.eta(i);
          if (l == i) w -= pc.eta(j);
          rhs(l, i, j) = w;
        }
    report.add(check_tensors_equal("id-r-xy-xi", lhs, rhs));
  }
  {
    // R(xi,X)Y = eta(Y)X - eps g(X,Y) xi
    Tensor lhs(m, {Slot::Up, Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Up, Slot::Down, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v(0);
          for (int i = 0; i < m; ++i) v += pc.xi(i) * rm(l, i, j, k);
          lhs(l, j, k) = v;
          Rational w(0);
          if (l == j) w += pc.eta(k);
          w -= pc.eps * g(j, k) * pc.xi(l);
          rhs(l, j, k) = w;
        }
    report.add(check_tensors_equal("id-r-xi-x-y", lhs, rhs));
  }
  {
    // R(xi,X)xi = X - eta(X) xi
    Tensor lhs(m, {Slot::Up, Slot::Down});
    Tensor rhs(m, {Slot::Up, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int j = 0; j < m; ++j) {
        Rational v(0);
        for (int i = 0; i < m; ++i)
          for (int k = 0; k < m; ++k) v += pc.xi(i) * rm(l, i, j, k) * pc.xi(k);
        lhs(l, j) = v;
        Rational w(0);
        if (l == j) w += Rational(1);
        w -= pc.eta(j) * pc.xi(l);
        rhs(l, j) = w;
      }
    report.add(check_tensors_equal("id-r-xi-x-xi", lhs, rhs));
  }
  {
    // R(X,Y,Z,xi) = eta(Y)g(X,Z) - eta(X)g(Y,Z)
    Tensor lhs(m, {Slot::Down, Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v(0);
          for (int w = 0; w < m; ++w) v += rl(i, j, k, w) * pc.xi(w);
          lhs(i, j, k) = v;
          rhs(i, j, k) = pc.eta(j) * g(i, k) - pc.eta(i) * g(j, k);
        }
    report.add(check_tensors_equal("id-rlow-xi", lhs, rhs));
  }
  {
    // eta(R(X,Y)Z) = eps (eta(Y)g(X,Z) - eta(X)g(Y,Z))
    Tensor lhs(m, {Slot::Down, Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v(0);
          for (int l = 0; l < m; ++l) v += pc.eta(l) * rm(l, i, j, k);
          lhs(i, j, k) = v;
          rhs(i, j, k) = pc.eps * (pc.eta(j) * g(i, k) - pc.eta(i) * g(j, k));
        }
    report.add(check_tensors_equal("id-eta-r", lhs, rhs));
  }
  {
    // S(X,xi) = -(m-1) eta(X)
    Tensor lhs(m, {Slot::Down});
    Tensor rhs(m, {Slot::Down});
    for (int j = 0; j < m; ++j) {
      Rational v(0);
      for (int k = 0; k < m; ++k) v += s(j, k) * pc.xi(k);
      lhs(j) = v;
      rhs(j) = -m1 * pc.eta(j);
    }
    report.add(check_tensors_equal("id-s-x-xi", lhs, rhs));
  }
  {
    // Q xi = -eps (m-1) xi
    Tensor lhs(m, {Slot::Up});
    Tensor rhs(m, {Slot::Up});
    for (int l = 0; l < m; ++l) {
      Rational v(0);
      for (int j = 0; j < m; ++j) v += geom.ricci_op(l, j) * pc.xi(j);
      lhs(l) = v;
      rhs(l) = -pc.eps * m1 * pc.xi(l);
    }
    report.add(check_tensors_equal("id-q-xi", lhs, rhs));
  }
  {
    // S(xi,xi) = -(m-1)
    Rational v(0);
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) v += s(j, k) * pc.xi(j) * pc.xi(k);
    report.add(check_scalar_equal("id-s-xi-xi", v, -m1));
  }
  {
    // S(phi X, phi Y) = S(X,Y) + (m-1) eta(X) eta(Y)
    Tensor lhs(m, {Slot::Down, Slot::Down});
    Tensor rhs(m, {Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational v(0);
        for (int p = 0; p < m; ++p)
          for (int q = 0; q < m; ++q) v += s(p, q) * pc.phi(p, i) * pc.phi(q, j);
        lhs(i, j) = v;
        rhs(i, j) = s(i, j) + m1 * pc.eta(i) * pc.eta(j);
      }
    report.add(check_tensors_equal("id-s-phi-phi", lhs, rhs));
  }
  {
    // nabla xi = eps phi
    const Tensor nabla_xi = covariant_derivative(pc.xi, geom.conn);
    Tensor rhs(m, {Slot::Down, Slot::Up});
    for (int i = 0; i < m; ++i)
      for (int l = 0; l < m; ++l) rhs(i, l) = pc.eps * pc.phi(l, i);
    report.add(check_tensors_equal("id-nabla-xi", nabla_xi, rhs));
  }

  return report;
}

CheckReport dim3_formula_suite(const FrameSpec& spec, const ParacontactSpec& pc,
                               const GeometryCache& geom) {
  require_shapes(spec, pc);
  if (spec.dim != 3) throw std::invalid_argument("dim3_formula_suite: dimension must be 3");
  CheckReport report;
  const int m = 3;
  const Tensor& g = spec.g;
  const Tensor& s = geom.ricci;
  const Tensor& q = geom.ricci_op;
  const Rational& r = geom.scalar;
  const Rational half_r = r / Rational(2);

  {
    // R = gQ-terms + S-terms - (r/2)(g wedge g)
    Tensor rhs(m, {Slot::Up, Slot::Down, Slot::Down, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            Rational v = g(j, k) * q(l, i) - g(i, k) * q(l, j);
            if (l == i) v += s(j, k);
            if (l == j) v -= s(i, k);
            if (l == i) v -= half_r * g(j, k);
            if (l == j) v += half_r * g(i, k);
            rhs(l, i, j, k) = v;
          }
    report.add(check_tensors_equal("dim3-riemann-decomposition", geom.riemann, rhs));
  }
  {
    // QX = (r/2 + eps) X - (r/2 + 3 eps) eta(X) xi
    const Rational c1 = half_r + pc.eps;
    const Rational c2 = half_r + Rational(3) * pc.eps;
    Tensor rhs(m, {Slot::Up, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int j = 0; j < m; ++j) {
        Rational v(0);
        if (l == j) v += c1;
        v -= c2 * pc.eta(j) * pc.xi(l);
        rhs(l, j) = v;
      }
    report.add(check_tensors_equal("dim3-ricci-operator-form", q, rhs));
  }
  {
    // S = (r/2 + eps) g - (eps r/2 + 3) eta (x) eta
    const Rational c1 = half_r + pc.eps;
    const Rational c2 = pc.eps * half_r + Rational(3);
    Tensor rhs(m, {Slot::Down, Slot::Down});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) rhs(i, j) = c1 * g(i, j) - c2 * pc.eta(i) * pc.eta(j);
    report.add(check_tensors_equal("dim3-ricci-form", s, rhs));
  }
  {
    // curvature closed form
    const Rational c1 = half_r + Rational(2) * pc.eps;
    const Rational c2 = pc.eps * half_r + Rational(3);
    const Rational c3 = half_r + Rational(3) * pc.eps;
    Tensor rhs(m, {Slot::Up, Slot::Down, Slot::Down, Slot::Down});
    for (int l = 0; l < m; ++l)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          for (int k = 0; k < m; ++k) {
            Rational v(0);
            if (l == i) v += c1 * g(j, k);
            if (l == j) v -= c1 * g(i, k);
            if (l == j) v += c2 * pc.eta(i) * pc.eta(k);
            if (l == i) v -= c2 * pc.eta(j) * pc.eta(k);
            v += c3 * (g(i, k) * pc.eta(j) - g(j, k) * pc.eta(i)) * pc.xi(l);
            rhs(l, i, j, k) = v;
          }
    report.add(check_tensors_equal("dim3-riemann-closed-form", geom.riemann, rhs));
  }
  {
    // constant curvature <=> r = -6 eps, with c = -eps when it holds
    const auto cc = constant_curvature_test(geom.riemann_low, g);
    const bool r_matches = (r == Rational(-6) * pc.eps);
    if (cc.has_value() != r_matches) {
      report.add(CheckResult::failed(
          "dim3-constant-curvature-lemma",
          Witness{{},
                  r_matches ? "constant curvature" : "not constant curvature",
                  cc ? ("constant curvature c = " + cc->str()) : "not constant curvature"}));
    } else if (cc && *cc != -pc.eps) {
      report.add(CheckResult::failed("dim3-constant-curvature-lemma",
                                     Witness{{}, ("c = " + (-pc.eps).str()), ("c = " + cc->str())}));
    } else {
      report.add(CheckResult::passed("dim3-constant-curvature-lemma"));
    }
  }

  return report;
}

Tensor phi_square_apply(const Tensor& t, const ParacontactSpec& pc) {
  int up_slot = -1;
  for (int s = 0; s < t.rank(); ++s)
    if (t.valence()[static_cast<std::size_t>(s)] == Slot::Up) {
      if (up_slot >= 0) throw std::invalid_argument("phi_square_apply: more than one Up slot");
      up_slot = s;
    }
  if (up_slot < 0) throw std::invalid_argument("phi_square_apply: no Up slot");

  const int m = t.dim();
  const Tensor p2 = phi_square(pc);
  Tensor out(m, t.valence());
  std::vector<int> inner(static_cast<std::size_t>(t.rank()), 0);
  for_each_index(m, t.rank(), [&](std::span<const int> idx) {
    Rational v(0);
    for (std::size_t s = 0; s < inner.size(); ++s) inner[s] = idx[s];
    for (int p = 0; p < m; ++p) {
      inner[static_cast<std::size_t>(up_slot)] = p;
      v += p2(idx[static_cast<std::size_t>(up_slot)], p) * t.at(inner);
    }
    out.at(idx) = v;
  });
  return out;
}

std::vector<int> horizontal_indices(const FrameSpec& spec, const ParacontactSpec& pc) {
  require_shapes(spec, pc);
  const int m = spec.dim;
  int axis = -1;
  for (int i = 0; i < m; ++i) {
    if (pc.xi(i).is_zero()) continue;
    if (axis >= 0 || pc.xi(i) != Rational(1))
      throw adapted_frame_error(
          "frame is not adapted: xi must coincide with a frame basis vector");
    axis = i;
  }
  if (axis < 0)
    throw adapted_frame_error("frame is not adapted: xi is zero");
  for (int i = 0; i < m; ++i)
    if (i != axis && !pc.eta(i).is_zero())
      throw adapted_frame_error("frame is not adapted: eta(e_" + std::to_string(i + 1) +
                                ") must vanish");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(m - 1));
  for (int i = 0; i < m; ++i)
    if (i != axis) out.push_back(i);
  return out;
}

}  // namespace tcurv
