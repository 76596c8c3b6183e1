#include "doctest.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <vector>

#include "test_support.hpp"
#include "wsnu/core.hpp"
#include "wsnu/errors.hpp"
#include "wsnu/oracle.hpp"

using namespace wsnu;
using test::fitted;
using test::reference;

namespace {

// Lowest eigenvalues of the three-point discretisation of
// -hbar^2/(2mu) u'' + V u = E u on (r_lo, r_hi) with Dirichlet ends.
std::vector<double> finite_difference_levels(const PhysicalParams& p, int l, PotentialKind kind, double r_lo,
                                             double r_hi, double h, int count) {
  const int n = static_cast<int>(std::round((r_hi - r_lo) / h)) - 1;
  const double k = p.hbar2_over_2mu() / (h * h);
  Eigen::VectorXd diag(n), off(n - 1);
  for (int i = 0; i < n; ++i) diag[i] = 2 * k + effective_potential(r_lo + (i + 1) * h, p, l, kind);
  off.setConstant(-k);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (int i = 0; i < count; ++i) out.push_back(solver.eigenvalues()[i]);
  return out;
}

// Richardson-extrapolated finite-difference level (error O(h^4) after the step).
double finite_difference_level(const PhysicalParams& p, int l, PotentialKind kind, double r_lo, double r_hi,
                               int index) {
  const double coarse = finite_difference_levels(p, l, kind, r_lo, r_hi, 0.02, index + 1)[index];
  const double fine = finite_difference_levels(p, l, kind, r_lo, r_hi, 0.01, index + 1)[index];
  return (4 * fine - coarse) / 3;
}

}  // namespace

TEST_CASE("effective potential") {
  const auto p = reference(47.78);
  CHECK(effective_potential(p.r0, p, 0, PotentialKind::exact) == doctest::Approx(-p.v0 / 2));
  CHECK(effective_potential(p.r0, p, 0, PotentialKind::pekeris) == doctest::Approx(-p.v0 / 2));

  const auto d = dimensionless(p, 1);
  CHECK(effective_potential(1e4, p, 1, PotentialKind::pekeris) == doctest::Approx(d.delta * d.c0));
  CHECK(right_asymptote(p, 1, PotentialKind::pekeris) == doctest::Approx(d.delta * d.c0));
  CHECK(right_asymptote(p, 1, PotentialKind::exact) == 0.0);
  CHECK(left_asymptote(p, 1) == doctest::Approx(d.delta * (d.c0 + d.c1 + d.c2) - p.v0));
  CHECK(effective_potential(-1e4, p, 1, PotentialKind::pekeris) == doctest::Approx(left_asymptote(p, 1)));

  const double exact = effective_potential(p.r0, p, 1, PotentialKind::exact);
  const double pek = effective_potential(p.r0, p, 1, PotentialKind::pekeris);
  CHECK(std::abs(exact - pek) < 0.02 * d.delta);
  // the two agree through second order around R0, so the gap grows like x^3
  const double gap_near = std::abs(effective_potential(p.r0 * 1.02, p, 1, PotentialKind::exact) -
                                   effective_potential(p.r0 * 1.02, p, 1, PotentialKind::pekeris));
  const double gap_far = std::abs(effective_potential(p.r0 * 1.04, p, 1, PotentialKind::exact) -
                                  effective_potential(p.r0 * 1.04, p, 1, PotentialKind::pekeris));
  CHECK(gap_far / gap_near == doctest::Approx(8.0).epsilon(0.15));

  CHECK_THROWS_AS(effective_potential(0.0, p, 1, PotentialKind::exact), DomainError);
  CHECK_NOTHROW(effective_potential(-3.0, p, 1, PotentialKind::pekeris));
}

TEST_CASE("potential kind names") {
  CHECK(to_string(PotentialKind::exact) == "exact");
  CHECK(parse_potential_kind("pekeris") == PotentialKind::pekeris);
  CHECK_THROWS_AS(parse_potential_kind("square"), DomainError);
}

TEST_CASE("shooting config validation") {
  ShootingConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.h = 0;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.r_min = 5;
  cfg.r_max = 4;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
  cfg = {};
  cfg.energy_tol = -1;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("single integrations") {
  const auto p = reference(3.6);
  ShootingConfig cfg;
  cfg.r_min = -800;
  cfg.r_max = 1600;

  SUBCASE("deep below the floor there are no nodes") {
    const double floor = left_asymptote(p, 1);
    const auto a = numerov_integrate(floor - 5.0, p, 1, PotentialKind::pekeris, cfg);
    const auto b = numerov_integrate(floor - 50.0, p, 1, PotentialKind::pekeris, cfg);
    CHECK(a.node_count == 0);
    CHECK(b.node_count == 0);
    CHECK(std::signbit(a.log_derivative_mismatch) == std::signbit(b.log_derivative_mismatch));
  }
  SUBCASE("the closed-form energy matches both branches") {
    const double e = energy(p, {0, 1}).energy;
    const auto res = numerov_integrate(e, p, 1, PotentialKind::pekeris, cfg);
    CHECK(std::abs(res.log_derivative_mismatch) * p.a < 1e-6);
    CHECK(res.r.size() == res.u.size());
    CHECK(res.match_index > 0);
    CHECK(res.match_index < res.r.size() - 1);
  }
  SUBCASE("energies above the right asymptote are rejected") {
    CHECK_THROWS_AS(numerov_integrate(right_asymptote(p, 1, PotentialKind::pekeris) + 0.1, p, 1,
                                      PotentialKind::pekeris, cfg),
                    UnboundEnergy);
  }
}

TEST_CASE("node count grows monotonically with energy") {
  const auto p = reference(1690);
  ShootingConfig cfg;
  cfg.r_min = -40;
  cfg.r_max = 60;
  cfg.h = 2e-3;
  const double lo = left_asymptote(p, 30), hi = right_asymptote(p, 30, PotentialKind::pekeris);
  int prev = 0;
  for (int i = 0; i < 100; ++i) {
    const double e = lo + (hi - lo) * (i + 0.5) / 100.0;
    const int nodes = numerov_integrate(e, p, 30, PotentialKind::pekeris, cfg).node_count;
    CHECK(nodes >= prev);
    prev = nodes;
  }
  CHECK(prev >= 4);
}

TEST_CASE("eigenvalues of the Pekeris potential equal the closed form") {
  ShootingConfig cfg;
  struct Case {
    double v0;
    int n, l;
    double tol;
  };
  for (auto c : {Case{3.6, 0, 1, 1e-5}, Case{47.78, 0, 5, 1e-4}, Case{330, 1, 13, 1e-4}, Case{1690, 3, 30, 1e-4}}) {
    const auto p = reference(c.v0);
    CAPTURE(c.l);
    CAPTURE(c.n);
    const auto sol = find_eigenvalue(c.n, p, c.l, PotentialKind::pekeris, cfg);
    CHECK(std::abs(sol.energy - energy(p, {c.n, c.l}).energy) < c.tol);
    CHECK(sol.node_count == c.n);
    CHECK(sol.h == cfg.h);
  }
  CHECK_THROWS_AS(find_eigenvalue(1, reference(47.78), 5, PotentialKind::pekeris, cfg), NoEigenvalue);
}

TEST_CASE("eigenfunction is normalised with n nodes") {
  const auto p = reference(330);
  const auto sol = find_eigenvalue(1, p, 13, PotentialKind::pekeris, ShootingConfig{});
  const auto f = eigenfunction(sol, p, 13, PotentialKind::pekeris);
  const double h = f.r[1] - f.r[0];
  double norm = 0;
  for (double u : f.u) norm += u * u * h;
  CHECK(norm == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("exact potential against a finite-difference eigen solver") {
  // With V0 = 47.78 and l = 1 the unapproximated well holds one level.
  const auto p = reference(47.78);
  ShootingConfig cfg;
  const auto sol = find_eigenvalue(0, p, 1, PotentialKind::exact, cfg);
  const double fd = finite_difference_level(p, 1, PotentialKind::exact, 0.0, 40.0, 0);
  CHECK(sol.energy == doctest::Approx(-19.9290161).epsilon(1e-7));
  CHECK(std::abs(sol.energy - fd) < 1e-4);
  CHECK(sol.node_count == 0);
  CHECK_THROWS_AS(find_eigenvalue(1, p, 1, PotentialKind::exact, cfg), NoEigenvalue);

  // s-wave of a deeper well: two levels
  const auto q = reference(80.0);
  for (int n = 0; n < 2; ++n) {
    CAPTURE(n);
    const double e = find_eigenvalue(n, q, 0, PotentialKind::exact, cfg).energy;
    CHECK(std::abs(e - finite_difference_level(q, 0, PotentialKind::exact, 0.0, 40.0, n)) < 1e-4);
  }
}

TEST_CASE("Pekeris potential against the finite-difference solver") {
  const auto p = reference(1690);
  const double fd = finite_difference_level(p, 30, PotentialKind::pekeris, -30.0, 50.0, 2);
  CHECK(std::abs(fd - energy(p, {2, 30}).energy) < 1e-3);
}

TEST_CASE("compare") {
  ShootingConfig cfg;
  const auto rep = compare(reference(3.6), {0, 1}, cfg);
  CHECK(rep.agreement < 1e-5);
  CHECK(rep.e_analytic == doctest::Approx(2.326450976).epsilon(1e-9));
  // the unapproximated potential has no well for these parameters
  CHECK_FALSE(rep.e_numeric_exact);
  CHECK_FALSE(rep.pekeris_error);
  CHECK_FALSE(rep.exact_note.empty());

  try {
    compare(reference(3.6), {0, 0}, cfg);
    FAIL("expected NoBoundState");
  } catch (const NoBoundState& e) {
    CHECK(std::string(e.what()).rfind("no analytic bound state", 0) == 0);
  }

  // l = 20, n = 2 at V0 = 764.2 sits just outside the CODATA window
  CHECK_THROWS_AS(compare(reference(764.2), {2, 20}, cfg), NoBoundState);
  const auto high = compare(fitted(764.2), {2, 20}, cfg, false);
  CHECK(high.agreement < 1e-3);
}

TEST_CASE("compare_many keeps input order") {
  ShootingConfig cfg;
  std::vector<ValidationCase> cases{
      {reference(1690), {3, 30}}, {reference(3.6), {0, 0}}, {reference(47.78), {0, 5}}, {reference(3.6), {0, 1}}};
  const auto out = compare_many(cases, cfg, false);
  REQUIRE(out.size() == 4);
  CHECK(out[0].kind == OutcomeKind::ok);
  CHECK(out[0].report->qn == QuantumNumbers{3, 30});
  CHECK(out[1].kind == OutcomeKind::no_bound_state);
  CHECK_FALSE(out[1].report);
  CHECK(out[2].report->qn == QuantumNumbers{0, 5});
  CHECK(out[3].report->qn == QuantumNumbers{0, 1});
  for (int i : {0, 2, 3}) CHECK(out[i].report->agreement < 1e-4);
}
