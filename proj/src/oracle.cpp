#include "wsnu/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "wsnu/kernels.hpp"

namespace wsnu {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleBy = 1e-250;
constexpr double kExactOrigin = 1e-6;
constexpr double kInitialHalfWidth = 25.0;  // in units of a
constexpr int kMaxBoxUpdates = 40;

double fermi(double t) { return t > 0 ? std::exp(-t) / (1.0 + std::exp(-t)) : 1.0 / (1.0 + std::exp(t)); }

std::string format_energy(const char* what, double e) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s %.10g MeV", what, e);
  return buf;
}

int sign(double x) { return (x > 0) - (x < 0); }

// Potential tabulated on a fixed uniform box, integrated at arbitrary energies.
//
// Recurrence (Numerov, y'' = -k y, k = (E - V)/(hbar^2/2mu)):
//   (1 + c_{i+1}) y_{i+1} = 2 (1 - 5 c_i) y_i - (1 + c_{i-1}) y_{i-1},  c_i = h^2 k_i / 12.
// The outward branch starts from y_0, y_1 (Dirichlet-like at r_min), the
// inward branch from y_N = 0, y_{N-1} = 1.
class Shooter {
public:
  Shooter(const PhysicalParams& params, int l, PotentialKind kind, double r_min, double r_max, double h)
      : kind_(kind), l_(l), r0_(params.r0), r_min_(r_min), h_(h), hb_(params.hbar2_over_2mu()) {
    const auto intervals = static_cast<std::size_t>(std::ceil((r_max - r_min) / h - 1e-9));
    if (intervals < 8) throw DomainError("oracle: box holds fewer than 8 steps");
    r_.resize(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) r_[i] = r_min + static_cast<double>(i) * h;
    v_.resize(r_.size());
    kernels::tabulate(r_, v_, [&](double r) { return effective_potential(r, params, l, kind); });
    q_ = h * h / (12.0 * hb_);

    if (kind == PotentialKind::exact) {
      // u ~ r^{l+1}, normalised so that y_1 = 1
      y0_ = std::pow(r_[0] / r_[1], l + 1);
      y1_ = 1.0;
    } else {
      y0_ = 0.0;
      y1_ = h;
    }

    floor_ = *std::min_element(v_.begin() + 1, v_.end());
    ceiling_ = std::min(v_.back(), right_asymptote(params, l, kind));
    if (kind == PotentialKind::pekeris) ceiling_ = std::min({ceiling_, v_.front(), left_asymptote(params, l)});
  }

  std::size_t last() const { return r_.size() - 1; }
  double r_min() const { return r_.front(); }
  double r_max() const { return r_.back(); }
  double floor() const { return floor_; }
  double ceiling() const { return ceiling_; }
  double value_at_end() const { return v_.back(); }

  // Sturm count: sign changes of the outward solution on (r_min, r_max].
  int count_nodes(double e) const {
    const std::size_t n = last();
    double y_prev = y0_, y = y1_;
    double c_prev = c(e, 0), c_cur = c(e, 1);
    int nodes = 0;
    int last_sign = sign(y);
    for (std::size_t i = 1; i < n; ++i) {
      const double c_next = c(e, i + 1);
      const double y_next = (2.0 * (1.0 - 5.0 * c_cur) * y - (1.0 + c_prev) * y_prev) / (1.0 + c_next);
      y_prev = y;
      y = y_next;
      c_prev = c_cur;
      c_cur = c_next;
      if (std::abs(y) > kRescaleAbove) {
        y *= kRescaleBy;
        y_prev *= kRescaleBy;
      }
      const int s = sign(y);
      if (s != 0) {
        if (last_sign != 0 && s != last_sign) ++nodes;
        last_sign = s;
      }
    }
    return nodes;
  }

  // Outermost classically allowed grid point (matching point), clamped to the
  // interior; falls back to the point nearest R0.
  std::size_t match_index(double e) const {
    const std::size_t n = last();
    std::size_t m = 0;
    bool found = false;
    for (std::size_t i = n + 1; i-- > 0;) {
      if (v_[i] <= e) {
        m = i;
        found = true;
        break;
      }
    }
    if (!found) m = static_cast<std::size_t>(std::llround(std::clamp((r0_ - r_min_) / h_, 0.0, double(n))));
    return std::clamp<std::size_t>(m, 2, n - 3);
  }

  // Innermost classically allowed point (left turning point), or the match fallback.
  double left_turning_point(double e) const {
    for (std::size_t i = 0; i <= last(); ++i)
      if (v_[i] <= e) return r_[i];
    return r0_;
  }

  struct Match {
    double casoratian = 0.0;  // normalised; sign flips exactly at the box eigenvalue
    double log_derivative_mismatch = 0.0;
  };

  Match match(double e, std::size_t m) const {
    double out_m = 0, out_m1 = 0, in_m = 0, in_m1 = 0;
    outward_pair(e, m, out_m, out_m1);
    inward_pair(e, m, in_m, in_m1);
    Match result;
    const double norm = std::hypot(out_m, out_m1) * std::hypot(in_m, in_m1);
    result.casoratian = norm > 0 ? (out_m * in_m1 - out_m1 * in_m) / norm : 0.0;
    result.log_derivative_mismatch = (out_m != 0.0 && in_m != 0.0)
                                         ? (out_m1 / out_m - in_m1 / in_m) / h_
                                         : std::numeric_limits<double>::infinity();
    return result;
  }

  NumerovResult solution(double e) const {
    const std::size_t n = last();
    const std::size_t m = match_index(e);
    NumerovResult res;
    res.r = r_;
    res.u.assign(n + 1, 0.0);
    res.match_index = m;

    auto& y = res.u;
    y[0] = y0_;
    y[1] = y1_;
    for (std::size_t i = 1; i <= m; ++i) {
      y[i + 1] = (2.0 * (1.0 - 5.0 * c(e, i)) * y[i] - (1.0 + c(e, i - 1)) * y[i - 1]) / (1.0 + c(e, i + 1));
      if (std::abs(y[i + 1]) > kRescaleAbove) kernels::serial::scale(std::span(y).first(i + 2), kRescaleBy);
    }
    const double out_m = y[m], out_m1 = y[m + 1];

    std::vector<double> in(n + 1, 0.0);
    in[n] = 0.0;
    in[n - 1] = 1.0;
    for (std::size_t i = n - 1; i > m; --i) {
      in[i - 1] = (2.0 * (1.0 - 5.0 * c(e, i)) * in[i] - (1.0 + c(e, i + 1)) * in[i + 1]) / (1.0 + c(e, i - 1));
      if (std::abs(in[i - 1]) > kRescaleAbove) kernels::serial::scale(std::span(in).subspan(i - 1), kRescaleBy);
    }
    const double in_m = in[m], in_m1 = in[m + 1];
    const double join = in_m != 0.0 ? out_m / in_m : 0.0;
    for (std::size_t i = m + 1; i <= n; ++i) y[i] = join * in[i];

    for (double v : y)
      if (!std::isfinite(v)) throw ConvergenceError("numerov: non-finite values after rescaling");

    res.node_count = count_nodes(e);
    res.log_derivative_mismatch = (out_m != 0.0 && in_m != 0.0)
                                      ? (out_m1 / out_m - in_m1 / in_m) / h_
                                      : std::numeric_limits<double>::infinity();
    return res;
  }

private:
  double c(double e, std::size_t i) const { return q_ * (e - v_[i]); }

  void outward_pair(double e, std::size_t m, double& y_m, double& y_m1) const {
    double y_prev = y0_, y = y1_;
    for (std::size_t i = 1; i <= m; ++i) {
      const double y_next = (2.0 * (1.0 - 5.0 * c(e, i)) * y - (1.0 + c(e, i - 1)) * y_prev) / (1.0 + c(e, i + 1));
      y_prev = y;
      y = y_next;
      if (std::abs(y) > kRescaleAbove) {
        y *= kRescaleBy;
        y_prev *= kRescaleBy;
      }
    }
    y_m = y_prev;
    y_m1 = y;
  }

  void inward_pair(double e, std::size_t m, double& y_m, double& y_m1) const {
    const std::size_t n = last();
    double y_next = 0.0, y = 1.0;  // y_N, y_{N-1}
    for (std::size_t i = n - 1; i > m; --i) {
      const double y_prev = (2.0 * (1.0 - 5.0 * c(e, i)) * y - (1.0 + c(e, i + 1)) * y_next) / (1.0 + c(e, i - 1));
      y_next = y;
      y = y_prev;
      if (std::abs(y) > kRescaleAbove) {
        y *= kRescaleBy;
        y_next *= kRescaleBy;
      }
    }
    y_m = y;
    y_m1 = y_next;
  }

  PotentialKind kind_;
  int l_;
  double r0_;
  double r_min_;
  double h_;
  double hb_;
  double q_ = 0.0;
  double y0_ = 0.0, y1_ = 0.0;
  double floor_ = 0.0, ceiling_ = 0.0;
  std::vector<double> r_;
  std::vector<double> v_;
};

struct BoxSolve {
  bool found = false;
  double energy = 0.0;
  int iterations = 0;
};

// Level with n nodes inside one box, or found = false when it lies above the ceiling.
BoxSolve solve_in_box(const Shooter& box, int n, const ShootingConfig& cfg) {
  BoxSolve out;
  const double top = box.ceiling();
  const double bottom = box.floor();
  if (!(bottom < top) || box.count_nodes(top) <= n) return out;

  // Coarse scan on node counts.
  double lo = bottom, hi = top;
  for (int k = 1; k <= cfg.bracket_steps; ++k) {
    const double e = bottom + (top - bottom) * k / cfg.bracket_steps;
    if (box.count_nodes(e) >= n + 1) {
      hi = e;
      break;
    }
    lo = e;
  }

  // Isolate exactly one level: N(lo) = n, N(hi) = n + 1.
  int n_lo = box.count_nodes(lo);
  int n_hi = box.count_nodes(hi);
  while (!(n_lo == n && n_hi == n + 1)) {
    if (++out.iterations > cfg.max_bisections) throw ConvergenceError("find_eigenvalue: bracketing exceeded max_bisections");
    const double mid = 0.5 * (lo + hi);
    const int n_mid = box.count_nodes(mid);
    if (n_mid <= n) {
      lo = mid;
      n_lo = n_mid;
    } else {
      hi = mid;
      n_hi = n_mid;
    }
  }

  // Converge on the matching condition at a fixed matching point.
  const std::size_t m = box.match_index(0.5 * (lo + hi));
  const int s_lo = sign(box.match(lo, m).casoratian);
  const int s_hi = sign(box.match(hi, m).casoratian);
  const bool use_match = s_lo != 0 && s_hi != 0 && s_lo != s_hi;
  while (hi - lo > cfg.energy_tol) {
    if (++out.iterations > cfg.max_bisections)
      throw ConvergenceError(format_energy("find_eigenvalue: max_bisections exceeded near", 0.5 * (lo + hi)));
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    const bool below = use_match ? sign(box.match(mid, m).casoratian) == s_lo : box.count_nodes(mid) <= n;
    (below ? lo : hi) = mid;
  }
  out.found = true;
  out.energy = 0.5 * (lo + hi);
  return out;
}

}  // namespace

std::string to_string(PotentialKind kind) { return kind == PotentialKind::exact ? "exact" : "pekeris"; }

PotentialKind parse_potential_kind(const std::string& name) {
  if (name == "exact") return PotentialKind::exact;
  if (name == "pekeris") return PotentialKind::pekeris;
  throw DomainError("unknown potential kind '" + name + "' (expected exact or pekeris)");
}

double effective_potential(double r, const PhysicalParams& params, int l, PotentialKind kind) {
  const double t = (r - params.r0) / params.a;
  const double well = params.v0 * fermi(t);
  const double ll = static_cast<double>(l) * (l + 1);
  if (kind == PotentialKind::exact) {
    if (!(r > 0.0)) throw DomainError("effective_potential: exact kind is singular at r <= 0");
    return params.hbar2_over_2mu() * ll / (r * r) - well;
  }
  const double delta = params.hbar2_over_2mu() * ll / (params.r0 * params.r0);
  return pekeris_barrier((r - params.r0) / params.r0, params.r0 / params.a, delta) - well;
}

double right_asymptote(const PhysicalParams& params, int l, PotentialKind kind) {
  if (kind == PotentialKind::exact) return 0.0;
  const auto d = dimensionless(params, l);
  return d.delta * d.c0;
}

double left_asymptote(const PhysicalParams& params, int l) {
  const auto d = dimensionless(params, l);
  return d.delta * (d.c0 + d.c1 + d.c2) - params.v0;
}

void ShootingConfig::validate() const {
  if (r_min && r_max && !(*r_min < *r_max)) throw DomainError("ShootingConfig: r_min must be < r_max");
  if (!(h > 0.0)) throw DomainError("ShootingConfig: h must be > 0");
  if (!(energy_tol > 0.0)) throw DomainError("ShootingConfig: energy_tol must be > 0");
  if (max_bisections <= 0 || bracket_steps <= 0) throw DomainError("ShootingConfig: iteration limits must be > 0");
  if (!(decay_lengths > 0.0) || !(max_extent > 0.0)) throw DomainError("ShootingConfig: box limits must be > 0");
}

namespace {

struct Box {
  double lo;
  double hi;
};

Box initial_box(const PhysicalParams& params, PotentialKind kind, const ShootingConfig& cfg) {
  const double half = kInitialHalfWidth * params.a;
  Box box;
  box.lo = cfg.r_min.value_or(kind == PotentialKind::exact ? kExactOrigin : params.r0 - half);
  box.hi = cfg.r_max.value_or(params.r0 + half);
  if (kind == PotentialKind::exact && !(box.lo > 0.0)) throw DomainError("oracle: exact kind needs r_min > 0");
  if (!(box.lo < box.hi)) throw DomainError("oracle: empty integration box");
  return box;
}

}  // namespace

NumerovResult numerov_integrate(double e_trial, const PhysicalParams& params, int l, PotentialKind kind,
                                const ShootingConfig& cfg) {
  params.validate();
  cfg.validate();
  const auto box = initial_box(params, kind, cfg);
  const Shooter shooter(params, l, kind, box.lo, box.hi, cfg.h);
  if (!(e_trial < shooter.value_at_end()))
    throw UnboundEnergy(format_energy("numerov_integrate: trial energy not below V(r_max):", e_trial));
  return shooter.solution(e_trial);
}

EigenSolution find_eigenvalue(int n, const PhysicalParams& params, int l, PotentialKind kind,
                              const ShootingConfig& cfg) {
  params.validate();
  cfg.validate();
  if (n < 0 || l < 0) throw DomainError("find_eigenvalue: n and l must be >= 0");

  auto box = initial_box(params, kind, cfg);
  const bool grow_left = kind == PotentialKind::pekeris && !cfg.r_min;
  const bool grow_right = !cfg.r_max;
  const double hb = params.hbar2_over_2mu();

  int iterations = 0;
  for (int update = 0; update < kMaxBoxUpdates; ++update) {
    const Shooter shooter(params, l, kind, box.lo, box.hi, cfg.h);
    if (!(shooter.floor() < shooter.ceiling()))
      throw NoEigenvalue("find_eigenvalue: effective potential has no well below its asymptote (" + to_string(kind) +
                         ", l=" + std::to_string(l) + ")");

    const auto solved = solve_in_box(shooter, n, cfg);
    iterations += solved.iterations;
    const bool can_grow = (grow_left || grow_right) && (box.hi - box.lo) < cfg.max_extent;

    if (!solved.found) {
      if (!can_grow)
        throw NoEigenvalue("find_eigenvalue: no level with " + std::to_string(n) + " nodes below the asymptote (" +
                           to_string(kind) + ", l=" + std::to_string(l) + ")");
      if (grow_right) box.hi = params.r0 + 2.0 * (box.hi - params.r0);
      if (grow_left) box.lo = params.r0 - 2.0 * (params.r0 - box.lo);
      continue;
    }

    // Each open side must cover decay_lengths / kappa beyond its turning point.
    const double e = solved.energy;
    bool enough = true;
    if (grow_right) {
      const double kappa = std::sqrt(std::max(right_asymptote(params, l, kind) - e, 0.0) / hb);
      const double r_turn = shooter.match_index(e) * cfg.h + shooter.r_min();
      const double needed = kappa > 0 ? r_turn + cfg.decay_lengths / kappa : std::numeric_limits<double>::infinity();
      if (box.hi < needed) {
        enough = false;
        box.hi = std::min(needed + 0.1 * (needed - params.r0), params.r0 + 4.0 * (box.hi - params.r0));
      }
    }
    if (grow_left) {
      const double kappa = std::sqrt(std::max(left_asymptote(params, l) - e, 0.0) / hb);
      const double r_turn = shooter.left_turning_point(e);
      const double needed = kappa > 0 ? r_turn - cfg.decay_lengths / kappa : -std::numeric_limits<double>::infinity();
      if (box.lo > needed) {
        enough = false;
        box.lo = std::max(needed - 0.1 * (params.r0 - needed), params.r0 - 4.0 * (params.r0 - box.lo));
      }
    }
    if (enough || !can_grow) {
      EigenSolution sol;
      sol.energy = e;
      const auto u = shooter.solution(e).u;
      sol.node_count = kernels::count_sign_changes(u, 1e-10 * kernels::max_abs(u));
      sol.r_min = shooter.r_min();
      sol.r_max = shooter.r_max();
      sol.h = cfg.h;
      sol.iterations = iterations;
      return sol;
    }
    if (box.hi - box.lo > cfg.max_extent) {
      // clamp to the cap and take one last solve there
      const double excess = box.hi - box.lo - cfg.max_extent;
      if (grow_left && grow_right) {
        box.lo += 0.5 * excess;
        box.hi -= 0.5 * excess;
      } else if (grow_right) {
        box.hi -= excess;
      } else {
        box.lo += excess;
      }
    }
  }
  throw ConvergenceError("find_eigenvalue: integration box did not settle");
}

NumerovResult eigenfunction(const EigenSolution& solution, const PhysicalParams& params, int l, PotentialKind kind) {
  const Shooter shooter(params, l, kind, solution.r_min, solution.r_max, solution.h);
  auto res = shooter.solution(solution.energy);
  const double norm = kernels::integrate_squared(res.u, solution.h);
  if (norm > 0) kernels::scale(res.u, 1.0 / std::sqrt(norm));
  return res;
}

OracleReport compare(const PhysicalParams& params, QuantumNumbers qn, const ShootingConfig& cfg, bool with_exact) {
  const auto check = bound_state_exists(params, qn);
  if (!check) throw NoBoundState(check.reason, "no analytic bound state: " + check.message);

  OracleReport report;
  report.qn = qn;
  report.e_analytic = energy(params, qn).energy;
  report.e_numeric_pekeris = find_eigenvalue(qn.n, params, qn.l, PotentialKind::pekeris, cfg).energy;
  report.agreement = std::abs(report.e_analytic - report.e_numeric_pekeris);

  if (with_exact) {
    try {
      report.e_numeric_exact = find_eigenvalue(qn.n, params, qn.l, PotentialKind::exact, cfg).energy;
      report.pekeris_error = std::abs(*report.e_numeric_exact - report.e_numeric_pekeris);
    } catch (const NoEigenvalue& e) {
      report.exact_note = e.what();
    } catch (const ConvergenceError& e) {
      report.exact_note = e.what();
    }
  }
  return report;
}

std::vector<ValidationOutcome> compare_many(std::span<const ValidationCase> cases, const ShootingConfig& cfg,
                                            bool with_exact) {
  std::vector<ValidationOutcome> out(cases.size());
  const auto n = static_cast<std::ptrdiff_t>(cases.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    auto& slot = out[static_cast<std::size_t>(i)];
    const auto& c = cases[static_cast<std::size_t>(i)];
    try {
      slot.report = compare(c.params, c.qn, cfg, with_exact);
      slot.kind = OutcomeKind::ok;
    } catch (const NoBoundState& e) {
      slot.kind = OutcomeKind::no_bound_state;
      slot.message = e.what();
    } catch (const NoEigenvalue& e) {
      slot.kind = OutcomeKind::no_convergence;
      slot.message = e.what();
    } catch (const ConvergenceError& e) {
      slot.kind = OutcomeKind::no_convergence;
      slot.message = e.what();
    } catch (const std::exception& e) {
      slot.kind = OutcomeKind::error;
      slot.message = e.what();
    }
  }
  return out;
}

}  // namespace wsnu
