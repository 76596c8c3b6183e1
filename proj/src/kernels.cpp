#include "wsnu/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wsnu::kernels {

namespace {

void require_grid(std::size_t n, double h) {
  if (n < 2) throw std::invalid_argument("quadrature needs at least two samples");
  if (!(h > 0.0)) throw std::invalid_argument("quadrature step must be positive");
}

// Blocked weighted sum: sum_i w(i) * g(i), block partials summed in order.
template <class Term>
double blocked_sum(std::size_t n, Term term) {
  const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < nb; ++b) {
    const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
    const std::size_t hi = std::min(n, lo + kReductionBlock);
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += term(i);
    partial[static_cast<std::size_t>(b)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

double trapezoid_weight(std::size_t i, std::size_t n) { return (i == 0 || i + 1 == n) ? 0.5 : 1.0; }

}  // namespace

double simpson_weight(std::size_t i, std::size_t n_points) {
  const std::size_t intervals = n_points - 1;
  if (intervals == 1) return 0.5;
  if (intervals == 2) return i == 1 ? 4.0 / 3.0 : 1.0 / 3.0;
  // Even part handled by Simpson, the remainder (0 or 3 intervals) by 3/8.
  const std::size_t simpson_end = intervals % 2 == 0 ? intervals : intervals - 3;
  double w = 0.0;
  if (i <= simpson_end && simpson_end > 0) {
    if (i == 0 || i == simpson_end)
      w += 1.0 / 3.0;
    else
      w += (i % 2 == 1) ? 4.0 / 3.0 : 2.0 / 3.0;
  }
  if (simpson_end < intervals && i >= simpson_end) {
    const std::size_t k = i - simpson_end;
    w += (k == 0 || k == 3) ? 3.0 / 8.0 : 9.0 / 8.0;
  }
  return w;
}

double integrate_squared(std::span<const double> u, double h) {
  require_grid(u.size(), h);
  const std::size_t n = u.size();
  return h * blocked_sum(n, [&](std::size_t i) { return simpson_weight(i, n) * u[i] * u[i]; });
}

double integrate_squared_trapezoid(std::span<const double> u, double h) {
  require_grid(u.size(), h);
  const std::size_t n = u.size();
  return h * blocked_sum(n, [&](std::size_t i) { return trapezoid_weight(i, n) * u[i] * u[i]; });
}

double integrate_product(std::span<const double> u, std::span<const double> v, double h) {
  require_grid(u.size(), h);
  if (u.size() != v.size()) throw std::invalid_argument("integrate_product: size mismatch");
  const std::size_t n = u.size();
  return h * blocked_sum(n, [&](std::size_t i) { return simpson_weight(i, n) * u[i] * v[i]; });
}

void scale(std::span<double> u, double factor) {
  const auto n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) u[i] *= factor;
}

double max_abs(std::span<const double> u) {
  double m = 0.0;
  const auto n = static_cast<std::ptrdiff_t>(u.size());
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) m = std::max(m, std::abs(u[i]));
  return m;
}

int count_sign_changes(std::span<const double> u, double threshold) {
  int changes = 0;
  int last_sign = 0;
  for (double v : u) {
    if (std::abs(v) <= threshold) continue;
    const int s = v > 0 ? 1 : -1;
    if (last_sign != 0 && s != last_sign) ++changes;
    last_sign = s;
  }
  return changes;
}

namespace serial {

double integrate_squared(std::span<const double> u, double h) {
  require_grid(u.size(), h);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += simpson_weight(i, u.size()) * u[i] * u[i];
  return h * s;
}

double integrate_squared_trapezoid(std::span<const double> u, double h) {
  require_grid(u.size(), h);
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += trapezoid_weight(i, u.size()) * u[i] * u[i];
  return h * s;
}

double integrate_product(std::span<const double> u, std::span<const double> v, double h) {
  require_grid(u.size(), h);
  if (u.size() != v.size()) throw std::invalid_argument("integrate_product: size mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += simpson_weight(i, u.size()) * u[i] * v[i];
  return h * s;
}

void scale(std::span<double> u, double factor) {
  for (double& v : u) v *= factor;
}

double max_abs(std::span<const double> u) {
  double m = 0.0;
  for (double v : u) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace serial

}  // namespace wsnu::kernels
