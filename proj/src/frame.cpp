#include "tcurv/frame.hpp"

namespace tcurv {

namespace {

void require_metric_shape(const Tensor& g, const char* what) {
  if (g.rank() != 2 || g.valence()[0] != Slot::Down || g.valence()[1] != Slot::Down)
    throw std::invalid_argument(std::string(what) + ": metric must have valence (Down,Down)");
}

}  // namespace

CheckReport validate_frame(const FrameSpec& spec) {
  CheckReport report;
  const int m = spec.dim;

  {
    CheckResult r = CheckResult::passed("metric-symmetric");
    for (int i = 0; i < m && r.pass; ++i)
      for (int j = 0; j < m; ++j)
        if (spec.g(i, j) != spec.g(j, i)) {
          r = CheckResult::failed("metric-symmetric",
                                  Witness{{i + 1, j + 1}, spec.g(j, i).str(), spec.g(i, j).str()});
          break;
        }
    report.add(std::move(r));
  }

  {
    Rational det = metric_determinant(spec.g);
    if (det.is_zero())
      report.add(CheckResult::failed("metric-nondegenerate", Witness{{}, "nonzero det", "0"}));
    else
      report.add(CheckResult::passed("metric-nondegenerate"));
  }

  {
    CheckResult r = CheckResult::passed("bracket-antisymmetric");
    for (int k = 0; k < m && r.pass; ++k)
      for (int i = 0; i < m && r.pass; ++i)
        for (int j = 0; j < m; ++j)
          if (spec.c(k, i, j) != -spec.c(k, j, i)) {
            r = CheckResult::failed(
                "bracket-antisymmetric",
                Witness{{k + 1, i + 1, j + 1}, (-spec.c(k, j, i)).str(), spec.c(k, i, j).str()});
            break;
          }
    report.add(std::move(r));
  }

  {
    // cyclic sum of [[e_i,e_j],e_k], component along e_l
    CheckResult r = CheckResult::passed("jacobi");
    for (int i = 0; i < m && r.pass; ++i)
      for (int j = 0; j < m && r.pass; ++j)
        for (int k = 0; k < m && r.pass; ++k)
          for (int l = 0; l < m; ++l) {
            Rational sum(0);
            for (int p = 0; p < m; ++p) {
              sum += spec.c(p, i, j) * spec.c(l, p, k);
              sum += spec.c(p, j, k) * spec.c(l, p, i);
              sum += spec.c(p, k, i) * spec.c(l, p, j);
            }
            if (!sum.is_zero()) {
              r = CheckResult::failed("jacobi",
                                      Witness{{i + 1, j + 1, k + 1, l + 1}, "0", sum.str()});
              break;
            }
          }
    report.add(std::move(r));
  }

  return report;
}

Rational metric_determinant(const Tensor& g) {
  require_metric_shape(g, "metric_determinant");
  const int m = g.dim();
  // fraction-free enough at this scale: plain rational Gaussian elimination
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m),
                                       std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a[i][j] = g(i, j);

  Rational det(1);
  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int row = col; row < m; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det *= Rational(-1);
    }
    det *= a[col][col];
    for (int row = col + 1; row < m; ++row) {
      if (a[row][col].is_zero()) continue;
      Rational f = a[row][col] / a[col][col];
      for (int j = col; j < m; ++j) a[row][j] -= f * a[col][j];
    }
  }
  return det;
}

Tensor metric_inverse(const Tensor& g) {
  require_metric_shape(g, "metric_inverse");
  const int m = g.dim();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(m),
                                       std::vector<Rational>(static_cast<std::size_t>(2 * m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) a[i][j] = g(i, j);
    a[i][static_cast<std::size_t>(m + i)] = Rational(1);
  }

  for (int col = 0; col < m; ++col) {
    int pivot = -1;
    for (int row = col; row < m; ++row)
      if (!a[row][col].is_zero()) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw invalid_metric_error("metric_inverse: singular metric");
    if (pivot != col) std::swap(a[pivot], a[col]);
    Rational inv_pivot = Rational(1) / a[col][col];
    for (int j = 0; j < 2 * m; ++j) a[col][j] *= inv_pivot;
    for (int row = 0; row < m; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      Rational f = a[row][col];
      for (int j = 0; j < 2 * m; ++j) a[row][j] -= f * a[col][j];
    }
  }

  Tensor inv(m, {Slot::Up, Slot::Up});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) inv(i, j) = a[i][static_cast<std::size_t>(m + j)];
  return inv;
}

}  // namespace tcurv
