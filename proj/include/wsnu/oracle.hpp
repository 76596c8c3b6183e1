#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "wsnu/core.hpp"

// Independent eigenvalue solver for the radial equation u'' = (2mu/hbar^2)(V_eff - E) u:
// Numerov integration, node counting to bracket level n, and bisection on the
// outward/inward matching condition. It knows nothing about the closed forms.

namespace wsnu {

/// No level with the requested node count below the potential's asymptote.
class NoEigenvalue : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class PotentialKind {
  exact,    // hbar^2 l(l+1)/(2 mu r^2) - V0/(1+e^{(r-R0)/a})
  pekeris,  // delta C0 - (V0 - delta C1) f + delta C2 f^2, f = 1/(1+e^{(r-R0)/a})
};

std::string to_string(PotentialKind kind);
PotentialKind parse_potential_kind(const std::string& name);

/// Effective potential in MeV. The exact kind throws DomainError for r <= 0;
/// the Pekeris kind is smooth on the whole real line and accepts any r.
double effective_potential(double r, const PhysicalParams& params, int l, PotentialKind kind);

/// Value of V_eff as r -> +inf (and, for the Pekeris kind, as r -> -inf).
double right_asymptote(const PhysicalParams& params, int l, PotentialKind kind);
double left_asymptote(const PhysicalParams& params, int l);

struct ShootingConfig {
  // Unset ends are chosen automatically: the exact kind starts at 1e-6 fm,
  // the Pekeris kind uses a full-line box; both grow until the converged
  // level decays over `decay_lengths` on each open side.
  std::optional<double> r_min;
  std::optional<double> r_max;
  double h = 1e-3;
  double energy_tol = 1e-9;
  int max_bisections = 200;
  int bracket_steps = 200;
  double decay_lengths = 20.0;
  double max_extent = 5.0e3;  // fm

  void validate() const;
};

struct NumerovResult {
  std::vector<double> r;
  std::vector<double> u;          // outward branch up to the match point, rescaled inward branch after it
  int node_count = 0;             // sign changes of the outward solution over the whole box
  double log_derivative_mismatch = 0.0;  // (u'/u)_out - (u'/u)_in at the match point, 1/fm
  std::size_t match_index = 0;
};

/// Integrates at a single trial energy on [r_min, r_max] (unset ends take the
/// initial automatic box). Throws UnboundEnergy if e_trial is not below the
/// potential at r_max.
NumerovResult numerov_integrate(double e_trial, const PhysicalParams& params, int l, PotentialKind kind,
                                const ShootingConfig& cfg);

struct EigenSolution {
  double energy = 0.0;
  int node_count = 0;
  double r_min = 0.0;
  double r_max = 0.0;
  double h = 0.0;
  int iterations = 0;
};

/// Level with n nodes. Throws NoEigenvalue when it does not exist below the
/// asymptote, ConvergenceError when max_bisections is exhausted.
EigenSolution find_eigenvalue(int n, const PhysicalParams& params, int l, PotentialKind kind,
                              const ShootingConfig& cfg);

/// Sampled eigenfunction at a converged energy (normalised to unit Simpson integral).
NumerovResult eigenfunction(const EigenSolution& solution, const PhysicalParams& params, int l,
                            PotentialKind kind);

struct OracleReport {
  QuantumNumbers qn;
  double e_analytic = 0.0;
  double e_numeric_pekeris = 0.0;
  std::optional<double> e_numeric_exact;
  std::string exact_note;               // why the exact kind has no value, if absent
  std::optional<double> pekeris_error;  // |E_exact - E_pekeris|
  double agreement = 0.0;               // |E_analytic - E_pekeris|
};

/// Throws NoBoundState when the closed form has no level; errors from the
/// Pekeris solve propagate, exact-kind failures leave e_numeric_exact empty.
OracleReport compare(const PhysicalParams& params, QuantumNumbers qn, const ShootingConfig& cfg,
                     bool with_exact = true);

enum class OutcomeKind { ok, no_bound_state, no_convergence, error };

struct ValidationCase {
  PhysicalParams params;
  QuantumNumbers qn;
};

struct ValidationOutcome {
  OutcomeKind kind = OutcomeKind::ok;
  std::optional<OracleReport> report;
  std::string message;
};

/// compare() over many cases, in parallel; outcomes keep the input order.
std::vector<ValidationOutcome> compare_many(std::span<const ValidationCase> cases, const ShootingConfig& cfg,
                                            bool with_exact = true);

}  // namespace wsnu
