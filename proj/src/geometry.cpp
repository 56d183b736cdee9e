#include "tcurv/geometry.hpp"

namespace tcurv {

GeometryCache GeometryCache::derive(const FrameSpec& spec) {
  Connection conn = koszul_connection(spec);  // validates the frame
  Tensor g_inv = metric_inverse(spec.g);
  Tensor riem = riemann_tensor(spec, conn);
  Tensor riem_low = contract(tensor_product(riem, spec.g), 0, 4);  // (i,j,k,w)
  Tensor ric = ricci_tensor(riem);
  Tensor q = ricci_operator(ric, g_inv);
  Rational r = scalar_curvature(ric, g_inv);
  return GeometryCache{spec,
                       std::move(g_inv),
                       std::move(conn),
                       std::move(riem),
                       std::move(riem_low),
                       std::move(ric),
                       std::move(q),
                       std::move(r)};
}

Tensor riemann_tensor(const FrameSpec& spec, const Connection& conn) {
  const int m = spec.dim;
  Tensor r(m, {Slot::Up, Slot::Down, Slot::Down, Slot::Down});
  for (int l = 0; l < m; ++l)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int k = 0; k < m; ++k) {
          Rational v(0);
          for (int p = 0; p < m; ++p) {
            v += conn.gamma(p, j, k) * conn.gamma(l, i, p);
            v -= conn.gamma(p, i, k) * conn.gamma(l, j, p);
            v -= spec.c(p, i, j) * conn.gamma(l, p, k);
          }
          r(l, i, j, k) = v;
        }
  return r;
}

Tensor ricci_tensor(const Tensor& riemann) {
  if (riemann.rank() != 4 || riemann.valence()[0] != Slot::Up)
    throw std::invalid_argument("ricci_tensor: expected (Up,Down,Down,Down)");
  return contract(riemann, 0, 1);
}

Rational scalar_curvature(const Tensor& ricci, const Tensor& g_inv) {
  const int m = ricci.dim();
  Rational r(0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) r += g_inv(j, k) * ricci(j, k);
  return r;
}

Tensor ricci_operator(const Tensor& ricci, const Tensor& g_inv) {
  const int m = ricci.dim();
  Tensor q(m, {Slot::Up, Slot::Down});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Rational v(0);
      for (int k = 0; k < m; ++k) v += g_inv(i, k) * ricci(k, j);
      q(i, j) = v;
    }
  return q;
}

Tensor covariant_derivative(const Tensor& t, const Connection& conn) {
  const int m = t.dim();
  if (conn.gamma.dim() != m)
    throw std::invalid_argument("covariant_derivative: dimension mismatch");
  std::vector<Slot> valence;
  valence.reserve(static_cast<std::size_t>(t.rank()) + 1);
  valence.push_back(Slot::Down);
  valence.insert(valence.end(), t.valence().begin(), t.valence().end());
  Tensor out(m, valence);

  std::vector<int> inner(static_cast<std::size_t>(t.rank()), 0);
  for_each_index(m, out.rank(), [&](std::span<const int> idx) {
    const int w = idx[0];
    Rational v(0);
    for (int s = 0; s < t.rank(); ++s) {
      const int own = idx[static_cast<std::size_t>(s) + 1];
      for (std::size_t q = 0; q < inner.size(); ++q) inner[q] = idx[q + 1];
      if (t.valence()[static_cast<std::size_t>(s)] == Slot::Up) {
        for (int p = 0; p < m; ++p) {
          inner[static_cast<std::size_t>(s)] = p;
          v += conn.gamma(own, w, p) * t.at(inner);
        }
      } else {
        for (int p = 0; p < m; ++p) {
          inner[static_cast<std::size_t>(s)] = p;
          v -= conn.gamma(p, w, own) * t.at(inner);
        }
      }
    }
    out.at(idx) = v;
  });
  return out;
}

std::optional<Rational> constant_curvature_test(const Tensor& riemann_low, const Tensor& g) {
  const int m = g.dim();
  // candidate from the first index tuple where g(Y,Z)g(X,W) - g(X,Z)g(Y,W) != 0
  std::optional<Rational> c;
  for (int i = 0; i < m && !c; ++i)
    for (int j = 0; j < m && !c; ++j)
      for (int k = 0; k < m && !c; ++k)
        for (int w = 0; w < m; ++w) {
          Rational denom = g(j, k) * g(i, w) - g(i, k) * g(j, w);
          if (!denom.is_zero()) {
            c = riemann_low(i, j, k, w) / denom;
            break;
          }
        }
  if (!c) return std::nullopt;  // cannot happen for nondegenerate g, m >= 2
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int w = 0; w < m; ++w) {
          Rational rhs = *c * (g(j, k) * g(i, w) - g(i, k) * g(j, w));
          if (riemann_low(i, j, k, w) != rhs) return std::nullopt;
        }
  return c;
}

std::optional<Rational> einstein_test(const Tensor& ricci, const Tensor& g) {
  const int m = g.dim();
  std::optional<Rational> lambda;
  for (int i = 0; i < m && !lambda; ++i)
    for (int j = 0; j < m; ++j)
      if (!g(i, j).is_zero()) {
        lambda = ricci(i, j) / g(i, j);
        break;
      }
  if (!lambda) return std::nullopt;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (ricci(i, j) != *lambda * g(i, j)) return std::nullopt;
  return lambda;
}

CheckReport curvature_symmetry_suite(const GeometryCache& geom, const FrameSpec& spec) {
  CheckReport report;
  const int m = spec.dim;
  const Tensor& r = geom.riemann;
  const Tensor& rl = geom.riemann_low;

  {
    CheckResult res = CheckResult::passed("riemann-antisym-12");
    for (int l = 0; l < m && res.pass; ++l)
      for (int i = 0; i < m && res.pass; ++i)
        for (int j = 0; j < m && res.pass; ++j)
          for (int k = 0; k < m; ++k)
            if (r(l, i, j, k) != -r(l, j, i, k)) {
              res = CheckResult::failed("riemann-antisym-12",
                                        Witness{{l + 1, i + 1, j + 1, k + 1},
                                                (-r(l, j, i, k)).str(), r(l, i, j, k).str()});
              break;
            }
    report.add(std::move(res));
  }

  {
    CheckResult res = CheckResult::passed("riemann-antisym-34");
    for (int i = 0; i < m && res.pass; ++i)
      for (int j = 0; j < m && res.pass; ++j)
        for (int k = 0; k < m && res.pass; ++k)
          for (int w = 0; w < m; ++w)
            if (rl(i, j, k, w) != -rl(i, j, w, k)) {
              res = CheckResult::failed("riemann-antisym-34",
                                        Witness{{i + 1, j + 1, k + 1, w + 1},
                                                (-rl(i, j, w, k)).str(), rl(i, j, k, w).str()});
              break;
            }
    report.add(std::move(res));
  }

  {
    CheckResult res = CheckResult::passed("riemann-pair-symmetry");
    for (int i = 0; i < m && res.pass; ++i)
      for (int j = 0; j < m && res.pass; ++j)
        for (int k = 0; k < m && res.pass; ++k)
          for (int w = 0; w < m; ++w)
            if (rl(i, j, k, w) != rl(k, w, i, j)) {
              res = CheckResult::failed("riemann-pair-symmetry",
                                        Witness{{i + 1, j + 1, k + 1, w + 1},
                                                rl(k, w, i, j).str(), rl(i, j, k, w).str()});
              break;
            }
    report.add(std::move(res));
  }

  {
    CheckResult res = CheckResult::passed("bianchi-first");
    for (int l = 0; l < m && res.pass; ++l)
      for (int i = 0; i < m && res.pass; ++i)
        for (int j = 0; j < m && res.pass; ++j)
          for (int k = 0; k < m; ++k) {
            Rational sum = r(l, i, j, k) + r(l, j, k, i) + r(l, k, i, j);
            if (!sum.is_zero()) {
              res = CheckResult::failed("bianchi-first",
                                        Witness{{l + 1, i + 1, j + 1, k + 1}, "0", sum.str()});
              break;
            }
          }
    report.add(std::move(res));
  }

  {
    CheckResult res = CheckResult::passed("ricci-symmetric");
    for (int j = 0; j < m && res.pass; ++j)
      for (int k = 0; k < m; ++k)
        if (geom.ricci(j, k) != geom.ricci(k, j)) {
          res = CheckResult::failed("ricci-symmetric",
                                    Witness{{j + 1, k + 1}, geom.ricci(k, j).str(),
                                            geom.ricci(j, k).str()});
          break;
        }
    report.add(std::move(res));
  }

  return report;
}

}  // namespace tcurv
