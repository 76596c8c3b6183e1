#pragma once

#include <optional>
#include <span>
#include <vector>

#include "wsnu/core.hpp"

namespace wsnu {

/// P_n^{(a,b)}(x) by the ascending three-term recurrence.
/// Throws DomainError for a <= -1, b <= -1, n < 0 or x outside [-1, 1].
double jacobi(int n, double a, double b, double x);

/// z = 1 / (1 + exp((r - R0)/a)); decreasing in r, z(R0) = 1/2.
double z_of_r(double r, const PhysicalParams& params);

/// Exponents of z^eps (1-z)^eta; eps + eta = n'.
struct WaveExponents {
  double eps = 0.0;
  double eta = 0.0;
};

/// From raw dimensionless values. Throws NoBoundState if n' <= 0, eps <= 0 or eta <= 0.
WaveExponents wave_exponents(double n_prime, double beta2, double gamma2);

/// For a bound (n, l); throws NoBoundState otherwise.
WaveExponents wave_exponents(const PhysicalParams& params, QuantumNumbers qn);

/// Unnormalised analytic radial function z^eps (1-z)^eta P_n^{(2eps,2eta)}(1-2z),
/// prepared once per state so it can be evaluated on a grid cheaply.
class RadialFunction {
public:
  RadialFunction(const PhysicalParams& params, QuantumNumbers qn);

  double operator()(double r) const;

  /// Same function in the z variable, z in (0, 1).
  double in_z(double z) const;

  const WaveExponents& exponents() const { return exponents_; }
  const EnergyLevel& level() const { return level_; }
  const DimensionlessSet& dimensionless_set() const { return dims_; }

private:
  PhysicalParams params_;
  QuantumNumbers qn_;
  EnergyLevel level_;
  DimensionlessSet dims_;
  WaveExponents exponents_;
};

double u_unnormalized(double r, const PhysicalParams& params, QuantumNumbers qn);

/// Uniform radial mesh r_i = r_start + i h.
class RadialGrid {
public:
  RadialGrid() = default;
  /// Grid from r_start covering at least r_end; the last point is r_start + N h
  /// with N = ceil((r_end - r_start)/h - 1e-9).
  static RadialGrid uniform(double r_start, double r_end, double h);

  std::span<const double> r_values() const { return r_; }
  double spacing() const { return h_; }
  std::size_t size() const { return r_.size(); }
  double front() const { return r_.front(); }
  double back() const { return r_.back(); }

private:
  std::vector<double> r_;
  double h_ = 0.0;
};

struct WavefunctionTable {
  RadialGrid grid;
  std::vector<double> u_values;
  double norm_constant = 1.0;  // C_nl; 1 until normalize() runs
  QuantumNumbers qn;
  WaveExponents exponents;
  double energy = 0.0;
};

/// Right edge that leaves u below ~1e-13 of its peak: max(R0 + 25a, R0 + 40a/eps).
double default_r_max(const PhysicalParams& params, const WaveExponents& exponents);

/// Samples the unnormalised u_nl on the grid (OpenMP over grid points).
WavefunctionTable sample_wavefunction(const PhysicalParams& params, QuantumNumbers qn,
                                      const RadialGrid& grid);

/// Default grid [0, default_r_max] with step h.
WavefunctionTable sample_wavefunction(const PhysicalParams& params, QuantumNumbers qn, double h = 1e-3);

/// Scales the table so that the Simpson integral of u^2 is 1 and records C_nl.
/// Throws TruncationError if |u| at the right edge exceeds 1e-12 max|u| and
/// DomainError for an all-zero table.
WavefunctionTable normalize(WavefunctionTable table);

/// Interior sign changes of the sampled function (tail noise below 1e-12 max|u| ignored).
int node_count(const WavefunctionTable& table);

/// Max over z of |u'' + (1-2z)/(z(1-z)) u' + (-eps^2 + beta^2 z - gamma^2 z^2)/(z(1-z))^2 u| / max|u|
/// with derivatives from 5-point central differences of step `step`, evaluated in
/// long double. Near z = 0 and z = 1 the step is capped at 1e-3 min(z, 1-z) so
/// that the stencil stays inside the region where u is smooth on its own scale.
/// `epsilon_scale` multiplies the eps entering the equation (not the function), for detuning checks.
double ode_residual_z(const PhysicalParams& params, QuantumNumbers qn, std::span<const double> z_samples,
                      double step = 1e-4, double epsilon_scale = 1.0);

}  // namespace wsnu
