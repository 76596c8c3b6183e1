#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Data-parallel grid kernels. Each OpenMP kernel has a serial twin in
// wsnu::kernels::serial that the tests use as the reference.
//
// Reductions are split into fixed-size blocks whose partial sums are added in
// block order, so results do not depend on the thread count.

namespace wsnu::kernels {

inline constexpr std::size_t kReductionBlock = 8192;

/// out[i] = f(x[i]).
template <class F>
void tabulate(std::span<const double> x, std::span<double> out, F&& f) {
  const auto n = static_cast<std::ptrdiff_t>(x.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = f(x[i]);
}

/// Composite Simpson weight of sample i on a grid of n_points (n_points >= 2).
/// Odd interval counts close with the 3/8 rule over the last three intervals.
double simpson_weight(std::size_t i, std::size_t n_points);

/// Simpson integral of u^2 on a uniform grid with step h.
double integrate_squared(std::span<const double> u, double h);

/// Trapezoid integral of u^2.
double integrate_squared_trapezoid(std::span<const double> u, double h);

/// Simpson integral of u*v.
double integrate_product(std::span<const double> u, std::span<const double> v, double h);

/// In-place u[i] *= factor.
void scale(std::span<double> u, double factor);

/// max |u[i]|.
double max_abs(std::span<const double> u);

/// Sign changes among samples with |u| > threshold.
int count_sign_changes(std::span<const double> u, double threshold);

namespace serial {

template <class F>
void tabulate(std::span<const double> x, std::span<double> out, F&& f) {
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f(x[i]);
}

double integrate_squared(std::span<const double> u, double h);
double integrate_squared_trapezoid(std::span<const double> u, double h);
double integrate_product(std::span<const double> u, std::span<const double> v, double h);
void scale(std::span<double> u, double factor);
double max_abs(std::span<const double> u);

}  // namespace serial

}  // namespace wsnu::kernels
