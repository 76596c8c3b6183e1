#include "wsnu/params.hpp"

#include <cmath>
#include <cstdio>

#include "wsnu/errors.hpp"

namespace wsnu {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%s must be finite and > 0, got %g", name, value);
    throw DomainError(buf);
  }
}

}  // namespace

void PhysicalParams::validate() const {
  require_positive(v0, "V0");
  require_positive(r0, "R0");
  require_positive(a, "a");
  require_positive(mu, "mu");
  require_positive(hbar_c, "hbar_c");
  require_positive(u_to_mev, "u_to_mev");
  if (!(a < r0)) throw DomainError("surface thickness a must be smaller than R0");
}

std::vector<std::string> PhysicalParams::warnings() const {
  std::vector<std::string> out;
  if (a / r0 > 0.2) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "a/R0 = %.3g > 0.2: the thin-surface assumption a << R0 is weak", a / r0);
    out.emplace_back(buf);
  }
  return out;
}

PhysicalParams PhysicalParams::from_mass_number(double mass_number, double mu) {
  if (!(mass_number > 0.0)) throw DomainError("mass number A must be > 0");
  PhysicalParams p;
  p.v0 = 40.5 + 0.13 * mass_number;
  p.r0 = 1.285 * std::cbrt(mass_number);
  p.a = 0.65;
  p.mu = mu;
  return p;
}

}  // namespace wsnu
