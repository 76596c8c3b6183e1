#include "wsnu/core.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace wsnu {

namespace {

constexpr double kDegenerateNPrime = 1e-12;
constexpr double kDualFormTolerance = 1e-10;

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, value);
  return buf;
}

void require_quantum_numbers(QuantumNumbers qn) {
  if (qn.n < 0 || qn.l < 0)
    throw DomainError("quantum numbers must be non-negative (n=" + std::to_string(qn.n) +
                      ", l=" + std::to_string(qn.l) + ")");
}

// sqrt(1 + 192 a^4 l(l+1) / R0^4) = sqrt(1 + 4 gamma^2)
double root_term(const PhysicalParams& p, int l) {
  const double ratio = p.a / p.r0;
  const double ll = static_cast<double>(l) * (l + 1);
  return std::sqrt(1.0 + 192.0 * ll * ratio * ratio * ratio * ratio);
}

}  // namespace

std::string describe(BoundFailure reason) {
  switch (reason) {
    case BoundFailure::none: return "bound";
    case BoundFailure::zero_angular_momentum: return "n' <= 0 (l = 0)";
    case BoundFailure::n_out_of_range: return "n exceeds allowed range";
    case BoundFailure::degenerate_n_prime: return "n' ~ 0 (degenerate)";
    case BoundFailure::v0_below_window: return "V0 < V0min";
    case BoundFailure::v0_above_window: return "V0 > V0max";
    case BoundFailure::v0_on_window_edge: return "V0 on window edge";
    case BoundFailure::non_positive_exponent: return "eps <= 0 or eta <= 0";
  }
  return "unknown";
}

PekerisCoefficients pekeris_coefficients(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw DomainError("pekeris_coefficients: alpha must be positive, got " + fmt("%g", alpha));
  const double inv = 1.0 / alpha;
  const double inv2 = inv * inv;
  return {1.0 - 4.0 * inv + 12.0 * inv2, 8.0 * inv - 48.0 * inv2, 48.0 * inv2};
}

double pekeris_barrier(double x, double alpha, double delta) {
  const auto c = pekeris_coefficients(alpha);
  // 1/(1+e^t) without overflow for large t
  const double t = alpha * x;
  const double f = t > 0 ? std::exp(-t) / (1.0 + std::exp(-t)) : 1.0 / (1.0 + std::exp(t));
  return delta * (c.c0 + c.c1 * f + c.c2 * f * f);
}

DimensionlessSet dimensionless(const PhysicalParams& params, int l) {
  params.validate();
  if (l < 0) throw DomainError("dimensionless: l must be >= 0");

  DimensionlessSet d;
  d.l = l;
  d.alpha = params.r0 / params.a;
  const auto c = pekeris_coefficients(d.alpha);
  d.c0 = c.c0;
  d.c1 = c.c1;
  d.c2 = c.c2;
  d.delta = params.hbar2_over_2mu() * static_cast<double>(l) * (l + 1) / (params.r0 * params.r0);
  d.energy_scale = params.energy_scale();
  d.beta2 = (params.v0 - d.delta * d.c1) / d.energy_scale;
  d.gamma2 = d.delta * d.c2 / d.energy_scale;
  return d;
}

double n_prime(int n, double gamma2) {
  return -static_cast<double>(n) + 0.5 * (std::sqrt(1.0 + 4.0 * gamma2) - 1.0);
}

double epsilon_bound(double np, double beta2, double gamma2) {
  if (!(np > 0.0))
    throw DomainError("epsilon_bound: n' must be positive (no bound state), got " + fmt("%g", np));
  return 0.5 * (np + (beta2 - gamma2) / np);
}

RadialRange allowed_n_range(const PhysicalParams& params, int l) {
  params.validate();
  if (l < 0) throw DomainError("allowed_n_range: l must be >= 0");
  RadialRange range;
  range.upper_bound = 0.5 * (root_term(params, l) - 1.0);
  range.end = range.upper_bound > 0.0 ? static_cast<int>(std::ceil(range.upper_bound)) : 0;
  return range;
}

BoundWindow v0_window(const PhysicalParams& params, QuantumNumbers qn) {
  require_quantum_numbers(qn);
  const auto range = allowed_n_range(params, qn.l);
  if (!range.contains(qn.n)) {
    const auto reason = qn.l == 0 ? BoundFailure::zero_angular_momentum : BoundFailure::n_out_of_range;
    throw NoBoundState(reason, describe(reason) + ": n=" + std::to_string(qn.n) + " for l=" +
                                   std::to_string(qn.l));
  }
  const double hb2_mu = 2.0 * params.hbar2_over_2mu();  // hbar^2 / mu
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  const double centre = 4.0 * hb2_mu * params.a * ll / (params.r0 * params.r0 * params.r0);
  const double lambda = root_term(params, qn.l) - 2.0 * qn.n - 1.0;
  const double half_width = hb2_mu * lambda * lambda / (8.0 * params.a * params.a);
  return {centre - half_width, centre + half_width, range.upper_bound};
}

BoundCheck bound_state_exists(const PhysicalParams& params, QuantumNumbers qn) {
  require_quantum_numbers(qn);
  const auto d = dimensionless(params, qn.l);
  auto fail = [](BoundFailure reason, std::string detail) {
    return BoundCheck{false, reason, describe(reason) + ": " + std::move(detail)};
  };

  if (qn.l == 0) return {false, BoundFailure::zero_angular_momentum, "n′ ≤ 0: no bound state for l=0"};

  const double np = n_prime(qn.n, d.gamma2);
  if (np <= 0.0)
    return fail(BoundFailure::n_out_of_range,
                "n=" + std::to_string(qn.n) + " but n < " + fmt("%.6g", allowed_n_range(params, qn.l).upper_bound) +
                    " is required for l=" + std::to_string(qn.l));
  if (np < kDegenerateNPrime) return fail(BoundFailure::degenerate_n_prime, "n' = " + fmt("%.3g", np));

  const auto w = v0_window(params, qn);
  if (params.v0 == w.v0_min || params.v0 == w.v0_max)
    return fail(BoundFailure::v0_on_window_edge, "V0 = " + fmt("%.10g", params.v0));
  if (params.v0 < w.v0_min)
    return fail(BoundFailure::v0_below_window,
                fmt("V0 = %.10g", params.v0) + fmt(" <= V0min = %.10g", w.v0_min));
  if (params.v0 > w.v0_max)
    return fail(BoundFailure::v0_above_window,
                fmt("V0 = %.10g", params.v0) + fmt(" >= V0max = %.10g", w.v0_max));

  // Same condition in dimensionless form; catches round-off right at the edges.
  const double eps = epsilon_bound(np, d.beta2, d.gamma2);
  if (!(eps > 0.0) || !(np - eps > 0.0))
    return fail(BoundFailure::non_positive_exponent, fmt("eps = %.3g", eps) + fmt(", eta = %.3g", np - eps));

  return {true, BoundFailure::none, "bound"};
}

double energy_compact_form(const PhysicalParams& params, QuantumNumbers qn) {
  require_quantum_numbers(qn);
  const auto d = dimensionless(params, qn.l);
  const double np = n_prime(qn.n, d.gamma2);
  if (!(np > 0.0) || !(d.beta2 > 0.0))
    throw DomainError("energy_compact_form: requires n' > 0 and beta^2 > 0");
  const double beta = std::sqrt(d.beta2);
  const double ratio = (np * np + d.beta2 - d.gamma2) / (2.0 * beta * np);
  return d.delta * d.c0 - (params.v0 - d.delta * d.c1) * ratio * ratio;
}

double energy_expanded_form(const PhysicalParams& params, QuantumNumbers qn) {
  require_quantum_numbers(qn);
  params.validate();
  const double e_scale = params.energy_scale();      // hbar^2/(2 mu a^2)
  const double mu_over_hb2 = 1.0 / (2.0 * params.hbar2_over_2mu());  // mu/hbar^2
  const double a = params.a;
  const double r0 = params.r0;
  const double ll = static_cast<double>(qn.l) * (qn.l + 1);
  const double lambda = root_term(params, qn.l) - 2.0 * qn.n - 1.0;
  if (lambda == 0.0) throw DomainError("energy_expanded_form: n' = 0");

  const double centrifugal = params.hbar2_over_2mu() * ll / (r0 * r0) * (1.0 + 12.0 * a * a / (r0 * r0));
  const double depth_term = mu_over_hb2 * a * a * params.v0;
  const double shifted = depth_term - 4.0 * ll * a * a * a / (r0 * r0 * r0);
  const double braces = lambda * lambda / 16.0 + 4.0 * shifted * shifted / (lambda * lambda) + depth_term;
  return centrifugal - e_scale * braces;
}

EnergyLevel energy(const PhysicalParams& params, QuantumNumbers qn) {
  const auto check = bound_state_exists(params, qn);
  if (!check) throw NoBoundState(check.reason, check.message);

  const auto d = dimensionless(params, qn.l);
  EnergyLevel level;
  level.qn = qn;
  level.n_prime = n_prime(qn.n, d.gamma2);
  level.epsilon = epsilon_bound(level.n_prime, d.beta2, d.gamma2);
  level.window = v0_window(params, qn);
  level.energy = energy_compact_form(params, qn);

  const double expanded = energy_expanded_form(params, qn);
  const double scale = std::max(std::abs(level.energy), std::abs(expanded));
  if (std::abs(level.energy - expanded) > kDualFormTolerance * scale) {
    std::ostringstream os;
    os.precision(17);
    os << "energy: compact and expanded forms disagree (" << level.energy << " vs " << expanded << ")";
    throw std::logic_error(os.str());
  }
  return level;
}

Spectrum spectrum(const PhysicalParams& params, int l_max) {
  if (l_max < 0) throw DomainError("spectrum: l_max must be >= 0");
  params.validate();
  Spectrum out;
  for (int l = 0; l <= l_max; ++l) {
    const auto range = allowed_n_range(params, l);
    for (int n = 0; n < range.size(); ++n) {
      const QuantumNumbers qn{n, l};
      const auto check = bound_state_exists(params, qn);
      if (check)
        out.levels.push_back(energy(params, qn));
      else
        out.excluded.push_back({qn, v0_window(params, qn), check.reason});
    }
  }
  return out;
}

}  // namespace wsnu
