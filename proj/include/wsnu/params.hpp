#pragma once

#include <string>
#include <vector>

namespace wsnu {

inline constexpr double kDefaultHbarC = 197.3269631;  // MeV fm
inline constexpr double kDefaultUToMeV = 931.4940954; // MeV per u

/// Woods-Saxon well plus the constants that fix the MeV/fm unit system.
///
/// Fields are plain values; call validate() before use. All library entry
/// points validate on their own.
struct PhysicalParams {
  double v0 = 0.0;  // depth, MeV
  double r0 = 0.0;  // radius, fm
  double a = 0.0;   // surface thickness, fm
  double mu = 0.0;  // reduced mass, u
  double hbar_c = kDefaultHbarC;
  double u_to_mev = kDefaultUToMeV;

  /// Throws DomainError unless every field is positive and a < r0.
  void validate() const;

  /// Non-fatal diagnostics (currently: a/R0 > 0.2).
  std::vector<std::string> warnings() const;

  /// hbar^2 / (2 mu) in MeV fm^2.
  double hbar2_over_2mu() const { return hbar_c * hbar_c / (2.0 * mu * u_to_mev); }

  /// hbar^2 / (2 mu a^2) in MeV: the energy scale of the dimensionless set.
  double energy_scale() const { return hbar2_over_2mu() / (a * a); }

  /// Empirical parametrisation by mass number: V0 = 40.5 + 0.13 A MeV,
  /// R0 = 1.285 A^(1/3) fm, a = 0.65 fm.
  static PhysicalParams from_mass_number(double mass_number, double mu);
};

struct QuantumNumbers {
  int n = 0;
  int l = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
  friend auto operator<=>(const QuantumNumbers& x, const QuantumNumbers& y) {
    if (auto c = x.l <=> y.l; c != 0) return c;
    return x.n <=> y.n;
  }
};

/// Everything the closed forms need for a given (params, l).
struct DimensionlessSet {
  int l = 0;
  double alpha = 0.0;   // R0 / a
  double delta = 0.0;   // hbar^2 l(l+1) / (2 mu R0^2), MeV
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  double beta2 = 0.0;   // may be negative when V0 < delta*C1
  double gamma2 = 0.0;
  double energy_scale = 0.0;  // hbar^2/(2 mu a^2), MeV
};

/// Open interval of depths (v0_min, v0_max) admitting the level.
struct BoundWindow {
  double v0_min = 0.0;
  double v0_max = 0.0;
  double n_max_exclusive = 0.0;

  double width() const { return v0_max - v0_min; }
  bool contains(double v0) const { return v0_min < v0 && v0 < v0_max; }
};

struct EnergyLevel {
  QuantumNumbers qn;
  double energy = 0.0;   // MeV
  double epsilon = 0.0;
  double n_prime = 0.0;
  BoundWindow window;
};

}  // namespace wsnu
