#pragma once

#include <string>
#include <vector>

#include "wsnu/errors.hpp"
#include "wsnu/params.hpp"

// Closed-form bound-state spectrum of the Woods-Saxon well with the
// centrifugal barrier replaced by its second-order Fermi-function expansion
// around r = R0.

namespace wsnu {

struct PekerisCoefficients {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Coefficients of delta*(C0 + C1 f + C2 f^2), f = 1/(1+e^{alpha x}), that
/// match delta/(1+x)^2 through second order at x = 0.
PekerisCoefficients pekeris_coefficients(double alpha);

/// Centrifugal barrier after the Pekeris replacement, as a function of
/// x = (r - R0)/R0. Used by the oracle and by the Taylor-match checks.
double pekeris_barrier(double x, double alpha, double delta);

DimensionlessSet dimensionless(const PhysicalParams& params, int l);

/// n' = -n + (sqrt(1 + 4 gamma^2) - 1)/2. May be <= 0.
double n_prime(int n, double gamma2);

/// eps = (n' + (beta^2 - gamma^2)/n')/2. Throws DomainError when n' <= 0.
double epsilon_bound(double n_prime, double beta2, double gamma2);

/// Half-open range [0, end) of radial quantum numbers for which n' > 0.
struct RadialRange {
  int end = 0;
  double upper_bound = 0.0;  // the (real) exclusive bound on n

  bool empty() const { return end <= 0; }
  bool contains(int n) const { return n >= 0 && n < end; }
  int size() const { return end > 0 ? end : 0; }
};

RadialRange allowed_n_range(const PhysicalParams& params, int l);

/// Depth window for (n, l). Throws NoBoundState if n is outside allowed_n_range.
BoundWindow v0_window(const PhysicalParams& params, QuantumNumbers qn);

struct BoundCheck {
  bool exists = false;
  BoundFailure reason = BoundFailure::none;
  std::string message;

  explicit operator bool() const { return exists; }
};

BoundCheck bound_state_exists(const PhysicalParams& params, QuantumNumbers qn);

/// E = delta C0 - (V0 - delta C1) ((n'^2 + beta^2 - gamma^2) / (2 beta n'))^2.
/// Evaluated whenever n' > 0 and beta^2 > 0, regardless of the depth window.
double energy_compact_form(const PhysicalParams& params, QuantumNumbers qn);

/// Same quantity written directly in R0, a, V0, l, n.
double energy_expanded_form(const PhysicalParams& params, QuantumNumbers qn);

/// Bound level. Throws NoBoundState (carrying the failed condition) otherwise.
EnergyLevel energy(const PhysicalParams& params, QuantumNumbers qn);

struct ExcludedLevel {
  QuantumNumbers qn;
  BoundWindow window;
  BoundFailure reason = BoundFailure::none;
};

struct Spectrum {
  std::vector<EnergyLevel> levels;      // sorted by (l, n)
  std::vector<ExcludedLevel> excluded;  // allowed n whose window misses V0
};

Spectrum spectrum(const PhysicalParams& params, int l_max);

}  // namespace wsnu
