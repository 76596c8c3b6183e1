#include "wsnu/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "wsnu/kernels.hpp"

namespace wsnu {

namespace {

// log(1 + e^t) without overflow
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

constexpr double kTailTolerance = 1e-12;

}  // namespace

template <class T>
T jacobi_recurrence(int n, T a, T b, T x) {
  T prev = 1;
  if (n == 0) return prev;
  T cur = (a + 1) + (a + b + 2) * (x - 1) / 2;
  for (int m = 2; m <= n; ++m) {
    const T s = 2 * m + a + b;
    const T next = ((s - 1) * (s * (s - 2) * x + a * a - b * b) * cur - 2 * (m + a - 1) * (m + b - 1) * s * prev) /
                   (2 * m * (m + a + b) * (s - 2));
    prev = cur;
    cur = next;
  }
  return cur;
}

double jacobi(int n, double a, double b, double x) {
  if (n < 0) throw DomainError("jacobi: degree must be >= 0");
  if (!(a > -1.0) || !(b > -1.0)) throw DomainError("jacobi: parameters must exceed -1");
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("jacobi: x must lie in [-1, 1]");
  return jacobi_recurrence(n, a, b, x);
}

double z_of_r(double r, const PhysicalParams& params) {
  const double t = (r - params.r0) / params.a;
  return std::exp(-softplus(t));
}

WaveExponents wave_exponents(double np, double beta2, double gamma2) {
  if (!(np > 0.0)) throw NoBoundState(BoundFailure::n_out_of_range, "wave_exponents: n' <= 0");
  const double eps = epsilon_bound(np, beta2, gamma2);
  const double eta = np - eps;
  if (!(eps > 0.0) || !(eta > 0.0)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "wave_exponents: eps = %.6g, eta = %.6g (both must be > 0)", eps, eta);
    throw NoBoundState(BoundFailure::non_positive_exponent, buf);
  }
  return {eps, eta};
}

WaveExponents wave_exponents(const PhysicalParams& params, QuantumNumbers qn) {
  const auto level = energy(params, qn);
  const auto d = dimensionless(params, qn.l);
  return wave_exponents(level.n_prime, d.beta2, d.gamma2);
}

RadialFunction::RadialFunction(const PhysicalParams& params, QuantumNumbers qn)
    : params_(params), qn_(qn), level_(energy(params, qn)), dims_(dimensionless(params, qn.l)) {
  exponents_ = wave_exponents(level_.n_prime, dims_.beta2, dims_.gamma2);
}

double RadialFunction::operator()(double r) const {
  const double t = (r - params_.r0) / params_.a;
  const double log_envelope = -exponents_.eps * softplus(t) - exponents_.eta * softplus(-t);
  const double x = std::tanh(0.5 * t);  // 1 - 2z
  return std::exp(log_envelope) * jacobi(qn_.n, 2.0 * exponents_.eps, 2.0 * exponents_.eta, x);
}

double RadialFunction::in_z(double z) const {
  if (z <= 0.0 || z >= 1.0) return 0.0;
  const double envelope = std::exp(exponents_.eps * std::log(z) + exponents_.eta * std::log1p(-z));
  return envelope * jacobi(qn_.n, 2.0 * exponents_.eps, 2.0 * exponents_.eta, 1.0 - 2.0 * z);
}

double u_unnormalized(double r, const PhysicalParams& params, QuantumNumbers qn) {
  return RadialFunction(params, qn)(r);
}

RadialGrid RadialGrid::uniform(double r_start, double r_end, double h) {
  if (!(h > 0.0)) throw DomainError("RadialGrid: step must be positive");
  if (!(r_end > r_start)) throw DomainError("RadialGrid: r_end must exceed r_start");
  const auto intervals = static_cast<std::size_t>(std::ceil((r_end - r_start) / h - 1e-9));
  RadialGrid g;
  g.h_ = h;
  g.r_.resize(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) g.r_[i] = r_start + static_cast<double>(i) * h;
  return g;
}

double default_r_max(const PhysicalParams& params, const WaveExponents& exponents) {
  return params.r0 + params.a * std::max(25.0, 40.0 / exponents.eps);
}

WavefunctionTable sample_wavefunction(const PhysicalParams& params, QuantumNumbers qn, const RadialGrid& grid) {
  const RadialFunction u(params, qn);
  WavefunctionTable table;
  table.grid = grid;
  table.qn = qn;
  table.exponents = u.exponents();
  table.energy = u.level().energy;
  table.u_values.resize(grid.size());
  kernels::tabulate(grid.r_values(), table.u_values, u);
  return table;
}

WavefunctionTable sample_wavefunction(const PhysicalParams& params, QuantumNumbers qn, double h) {
  const auto exps = wave_exponents(params, qn);
  return sample_wavefunction(params, qn, RadialGrid::uniform(0.0, default_r_max(params, exps), h));
}

WavefunctionTable normalize(WavefunctionTable table) {
  if (table.u_values.size() < 3) throw DomainError("normalize: table needs at least three samples");
  const double peak = kernels::max_abs(table.u_values);
  if (!(peak > 0.0)) throw DomainError("normalize: zero norm");
  const double tail = std::abs(table.u_values.back());
  if (tail > kTailTolerance * peak) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "normalize: |u(r_max)| / max|u| = %.3g > %.0e; extend r_max (now %.6g fm)",
                  tail / peak, kTailTolerance, table.grid.back());
    throw TruncationError(buf);
  }
  const double integral = kernels::integrate_squared(table.u_values, table.grid.spacing());
  const double c = 1.0 / std::sqrt(integral);
  kernels::scale(table.u_values, c);
  table.norm_constant *= c;
  return table;
}

int node_count(const WavefunctionTable& table) {
  const double peak = kernels::max_abs(table.u_values);
  return kernels::count_sign_changes(table.u_values, kTailTolerance * peak);
}

double ode_residual_z(const PhysicalParams& params, QuantumNumbers qn, std::span<const double> z_samples,
                      double step, double epsilon_scale) {
  if (!(step > 0.0)) throw DomainError("ode_residual_z: step must be positive");
  const RadialFunction u(params, qn);
  const auto& d = u.dimensionless_set();
  using LD = long double;
  const LD eps = u.exponents().eps, eta = u.exponents().eta;
  const LD eps_eq = eps * epsilon_scale;
  // extended precision keeps rounding in the stencil well below the truncation error
  auto f = [&](LD z) {
    return std::exp(eps * std::log(z) + eta * std::log1p(-z)) * jacobi_recurrence<LD>(qn.n, 2 * eps, 2 * eta, 1 - 2 * z);
  };

  LD peak = 0, worst = 0;
  for (double zd : z_samples) {
    if (!(zd > 0.0 && zd < 1.0)) throw DomainError("ode_residual_z: samples must lie in (0, 1)");
    const LD z = zd;
    const LD h = std::min<LD>(step, 1e-3L * std::min(z, 1 - z));
    const LD um2 = f(z - 2 * h), um1 = f(z - h), u0 = f(z), up1 = f(z + h), up2 = f(z + 2 * h);
    const LD d1 = (-up2 + 8 * up1 - 8 * um1 + um2) / (12 * h);
    const LD d2 = (-up2 + 16 * up1 - 30 * u0 + 16 * um1 - um2) / (12 * h * h);
    const LD s = z * (1 - z);
    const LD residual =
        d2 + (1 - 2 * z) / s * d1 + (-eps_eq * eps_eq + LD(d.beta2) * z - LD(d.gamma2) * z * z) / (s * s) * u0;
    peak = std::max(peak, std::abs(u0));
    worst = std::max(worst, std::abs(residual));
  }
  if (!(peak > 0)) throw DomainError("ode_residual_z: function vanishes on all samples");
  return static_cast<double>(worst / peak);
}

}  // namespace wsnu
