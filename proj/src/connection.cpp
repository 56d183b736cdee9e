#include "tcurv/connection.hpp"

namespace tcurv {

Connection koszul_connection(const FrameSpec& spec) {
  CheckReport validation = validate_frame(spec);
  if (!validation.all_pass()) throw invalid_frame_error(std::move(validation));

  const int m = spec.dim;
  const Tensor g_inv = metric_inverse(spec.g);
  Connection conn = Connection::zero(m);

  // Per (i,j): solve sum_l g_kl Gamma^l_ij = rhs_k / 2 exactly via g^{-1}.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      std::vector<Rational> rhs(static_cast<std::size_t>(m), Rational(0));
      for (int k = 0; k < m; ++k) {
        Rational v(0);
        for (int l = 0; l < m; ++l) {
          v -= spec.c(l, j, k) * spec.g(i, l);
          v -= spec.c(l, i, k) * spec.g(j, l);
          v += spec.c(l, i, j) * spec.g(l, k);
        }
        rhs[static_cast<std::size_t>(k)] = v / Rational(2);
      }
      for (int l = 0; l < m; ++l) {
        Rational v(0);
        for (int k = 0; k < m; ++k) v += g_inv(l, k) * rhs[static_cast<std::size_t>(k)];
        conn.gamma(l, i, j) = v;
      }
    }
  return conn;
}

Tensor torsion_defect(const FrameSpec& spec, const Connection& conn) {
  const int m = spec.dim;
  Tensor t(m, {Slot::Up, Slot::Down, Slot::Down});
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        t(k, i, j) = conn.gamma(k, i, j) - conn.gamma(k, j, i) - spec.c(k, i, j);
  return t;
}

Tensor metricity_defect(const FrameSpec& spec, const Connection& conn) {
  const int m = spec.dim;
  Tensor d(m, {Slot::Down, Slot::Down, Slot::Down});
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational v(0);
        for (int l = 0; l < m; ++l) {
          v += conn.gamma(l, k, i) * spec.g(l, j);
          v += conn.gamma(l, k, j) * spec.g(i, l);
        }
        d(k, i, j) = v;
      }
  return d;
}

}  // namespace tcurv
