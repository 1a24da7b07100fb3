#include "detail/feasibility.hpp"

#include <algorithm>
#include <cmath>

namespace treelasso::detail {

std::optional<std::vector<double>> nonnegative_solution(const std::vector<std::vector<double>>& a,
                                                        const std::vector<double>& b,
                                                        double residual) {
  const std::size_t m = a.size();
  const std::size_t k = m == 0 ? 0 : a.front().size();
  if (m == 0) return std::vector<double>(k, 0.0);

  double scale = 1.0;
  for (double v : b) scale = std::max(scale, std::abs(v));
  const double pivot_eps = 1e-12;

  // Columns: k structural, m artificial, then the right-hand side.
  const std::size_t width = k + m + 1;
  std::vector<std::vector<double>> t(m + 1, std::vector<double>(width, 0.0));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double sign = b[i] < 0 ? -1.0 : 1.0;
    for (std::size_t j = 0; j < k; ++j) t[i][j] = sign * a[i][j];
    t[i][k + i] = 1.0;
    t[i][width - 1] = sign * b[i];
    basis[i] = k + i;
  }
  // Objective row: minimise the sum of artificials, written in reduced form.
  auto& obj = t[m];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < width; ++j) {
      if (j < k || j == width - 1) obj[j] -= t[i][j];
    }
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (obj[j] < -pivot_eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    double best = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= pivot_eps) continue;
      const double ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best - pivot_eps ||
          (ratio <= best + pivot_eps && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    const double p = t[leave][enter];
    for (auto& v : t[leave]) v /= p;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave || t[i][enter] == 0.0) continue;
      const double f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (-obj[width - 1] > 1e-9 * scale) return std::nullopt;
  std::vector<double> x(k, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < k) x[basis[i]] = std::max(0.0, t[i][width - 1]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    double lhs = 0.0;
    for (std::size_t j = 0; j < k; ++j) lhs += a[i][j] * x[j];
    if (std::abs(lhs - b[i]) > residual * std::max(1.0, std::abs(b[i]))) return std::nullopt;
  }
  return x;
}

}  // namespace treelasso::detail
