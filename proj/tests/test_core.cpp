#include "doctest.h"

#include <cmath>
#include <limits>
#include <random>

#include "test_support.hpp"
#include "wsnu/core.hpp"
#include "wsnu/errors.hpp"

using namespace wsnu;
using test::fitted;
using test::reference;
using test::rel;

TEST_CASE("pekeris coefficients") {
  SUBCASE("alpha = 4 is exact") {
    const auto c = pekeris_coefficients(4.0);
    CHECK(c.c0 == 0.75);
    CHECK(c.c1 == -1.0);
    CHECK(c.c2 == 3.0);
  }
  SUBCASE("alpha = 4.9162/0.65") {
    const auto c = pekeris_coefficients(4.9162 / 0.65);
    CHECK(c.c0 == doctest::Approx(0.6809088982).epsilon(1e-9));
    CHECK(c.c1 == doctest::Approx(0.2186368941).epsilon(1e-9));
    CHECK(c.c2 == doctest::Approx(0.8390906190).epsilon(1e-9));
  }
  SUBCASE("large alpha") {
    const auto c = pekeris_coefficients(1e9);
    CHECK(c.c0 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(c.c1) < 1e-8);
    CHECK(std::abs(c.c2) < 1e-8);
  }
  CHECK_THROWS_AS(pekeris_coefficients(0.0), DomainError);
}

TEST_CASE("dimensionless set") {
  SUBCASE("l = 0") {
    const auto p = reference(47.78);
    const auto d = dimensionless(p, 0);
    CHECK(d.delta == 0.0);
    CHECK(d.gamma2 == 0.0);
    CHECK(d.beta2 == doctest::Approx(p.v0 * p.a * p.a / p.hbar2_over_2mu()).epsilon(1e-14));
  }
  SUBCASE("gamma^2 reduces to 48 l(l+1) a^4 / R0^4") {
    const auto p = reference(47.78);
    const auto d = dimensionless(p, 5);
    CHECK(d.gamma2 == doctest::Approx(48.0 * 30.0 * std::pow(p.a / p.r0, 4)).epsilon(1e-13));
    CHECK(d.gamma2 == doctest::Approx(0.4400338018).epsilon(1e-9));
  }
  SUBCASE("l = 1, V0 = 3.6") {
    const auto d = dimensionless(reference(3.6), 1);
    CHECK(d.beta2 == doctest::Approx(0.02905723358).epsilon(1e-9));
    CHECK(d.gamma2 == doctest::Approx(0.02933558678).epsilon(1e-9));
    CHECK(d.alpha == doctest::Approx(7.563435600).epsilon(1e-9));
  }
  CHECK_THROWS_AS(dimensionless(reference(3.6), -1), DomainError);
}

TEST_CASE("n prime") {
  for (int n = 0; n < 5; ++n) CHECK(n_prime(n, 0.0) == -n);
  CHECK(n_prime(0, 2.0) == doctest::Approx(1.0));
  CHECK(n_prime(0, dimensionless(reference(3.6), 1).gamma2) == doctest::Approx(0.02852207786).epsilon(1e-9));
}

TEST_CASE("epsilon") {
  CHECK(epsilon_bound(1.0, 0.3, 0.3) == doctest::Approx(0.5));
  CHECK(epsilon_bound(2.0, 5.0, 1.0) == doctest::Approx(2.0));
  const auto d = dimensionless(reference(3.6), 1);
  CHECK(epsilon_bound(n_prime(0, d.gamma2), d.beta2, d.gamma2) == doctest::Approx(0.009381429387).epsilon(1e-8));
  CHECK_THROWS_AS(epsilon_bound(0.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(epsilon_bound(-1.0, 1.0, 1.0), DomainError);
}

TEST_CASE("allowed n range") {
  const auto p = reference(47.78);
  CHECK(allowed_n_range(p, 0).empty());
  const auto r20 = allowed_n_range(p, 20);
  CHECK(r20.size() == 3);
  CHECK(r20.contains(2));
  CHECK_FALSE(r20.contains(3));
  const auto r100 = allowed_n_range(p, 100);
  CHECK(r100.size() == 12);
  CHECK(r100.contains(11));
  CHECK_FALSE(r100.contains(12));
  CHECK(allowed_n_range(p, 1).size() == 1);
}

TEST_CASE("depth windows against the published tables") {
  struct Row {
    int l, n;
    double lo, hi;
  };
  for (auto row : {Row{1, 0, 3.5590, 3.7191}, Row{20, 2, 764.1028, 764.3034}, Row{40, 4, 2965.8279, 3002.2441}}) {
    CAPTURE(row.l);
    CAPTURE(row.n);
    const auto w = v0_window(reference(1.0), {row.n, row.l});
    CHECK(rel(w.v0_min, row.lo) < 0.01);
    CHECK(rel(w.v0_max, row.hi) < 0.01);
  }
  const auto w = v0_window(reference(3.6), {0, 1});
  CHECK(w.v0_min == doctest::Approx(3.547506997).epsilon(1e-9));
  CHECK(w.v0_max == doctest::Approx(3.707099896).epsilon(1e-9));
  CHECK_THROWS_AS(v0_window(reference(3.6), {5, 1}), NoBoundState);
  CHECK_THROWS_AS(v0_window(reference(3.6), {0, 0}), NoBoundState);
}

TEST_CASE("bound state conditions") {
  SUBCASE("l = 0") {
    const auto c = bound_state_exists(reference(47.78), {0, 0});
    CHECK_FALSE(c.exists);
    CHECK(c.reason == BoundFailure::zero_angular_momentum);
    CHECK(c.message == "n′ ≤ 0: no bound state for l=0");
  }
  SUBCASE("inside the window") {
    const auto c = bound_state_exists(reference(3.6), {0, 1});
    CHECK(c.exists);
    CHECK(c.reason == BoundFailure::none);
  }
  SUBCASE("too deep") {
    const auto c = bound_state_exists(reference(10.0), {0, 1});
    CHECK_FALSE(c.exists);
    CHECK(c.reason == BoundFailure::v0_above_window);
    CHECK(c.message.rfind("V0 > V0max", 0) == 0);
  }
  SUBCASE("too shallow") {
    const auto c = bound_state_exists(reference(3.0), {0, 1});
    CHECK(c.reason == BoundFailure::v0_below_window);
  }
  SUBCASE("n too large") {
    const auto c = bound_state_exists(reference(3.6), {5, 1});
    CHECK(c.reason == BoundFailure::n_out_of_range);
    CHECK(c.message.rfind("n exceeds allowed range", 0) == 0);
  }
}

TEST_CASE("energies") {
  const auto e1 = energy(reference(3.6), {0, 1});
  CHECK(e1.energy == doctest::Approx(2.326450976).epsilon(1e-9));
  CHECK(rel(e1.energy, 2.3374) < 0.01);
  CHECK(e1.epsilon == doctest::Approx(0.009381429387).epsilon(1e-8));
  CHECK(e1.n_prime == doctest::Approx(0.02852207786).epsilon(1e-9));

  const auto e5 = energy(reference(47.78), {0, 5});
  CHECK(e5.energy == doctest::Approx(34.63510772).epsilon(1e-9));
  CHECK(rel(e5.energy, 34.7761) < 0.01);

  const auto e13 = energy(reference(330), {1, 13});
  CHECK(e13.energy == doctest::Approx(211.4667906).epsilon(1e-9));

  // l = 100, n = 11 at V0 = 18400 lies just above the CODATA window; with the
  // fitted constants it is bound and matches the published value.
  CHECK_THROWS_AS(energy(reference(18400), {11, 100}), NoBoundState);
  CHECK(rel(energy(fitted(18400), {11, 100}).energy, 11804.6769) < 0.01);
  CHECK_THROWS_AS(energy(reference(47.78), {0, 0}), NoBoundState);
}

TEST_CASE("spectrum") {
  CHECK(spectrum(reference(47.78), 0).levels.empty());
  CHECK(spectrum(reference(47.78), 0).excluded.empty());

  const auto s5 = spectrum(reference(47.78), 5);
  int at_l5 = 0;
  for (const auto& lv : s5.levels) {
    if (lv.qn.l != 5) continue;
    ++at_l5;
    CHECK(lv.qn.n == 0);
    CHECK(rel(lv.energy, 34.7761) < 0.01);
  }
  CHECK(at_l5 == 1);
  for (std::size_t i = 1; i < s5.levels.size(); ++i) CHECK(s5.levels[i - 1].qn < s5.levels[i].qn);

  const auto s1 = spectrum(reference(3.6), 1);
  REQUIRE(s1.levels.size() == 1);
  CHECK(s1.levels[0].qn == QuantumNumbers{0, 1});
  CHECK_THROWS_AS(spectrum(reference(3.6), -1), DomainError);
}

// Random well inside the useful regime: alpha in (5, 50), any l up to 60.
struct Sample {
  PhysicalParams params;
  int l;
};

Sample random_sample(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> alpha(5.0, 50.0), a(0.4, 0.9), depth(1.0, 20000.0), mu(0.3, 2.0);
  std::uniform_int_distribution<int> l(1, 60);
  PhysicalParams p;
  p.a = a(rng);
  p.r0 = alpha(rng) * p.a;
  p.v0 = depth(rng);
  p.mu = mu(rng);
  return {p, l(rng)};
}

TEST_CASE("pekeris barrier reproduces delta (R0/r)^2 to second order") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> alpha(5.0, 50.0);
  const double h = 1e-3;
  for (int trial = 0; trial < 100; ++trial) {
    const double al = alpha(rng), delta = 2.5;
    const double f0 = pekeris_barrier(0.0, al, delta);
    const double fp = pekeris_barrier(h, al, delta), fm = pekeris_barrier(-h, al, delta);
    const double fp2 = pekeris_barrier(2 * h, al, delta), fm2 = pekeris_barrier(-2 * h, al, delta);
    const double d1 = (fm2 - 8 * fm + 8 * fp - fp2) / (12 * h);
    const double d2 = (-fm2 + 16 * fm - 30 * f0 + 16 * fp - fp2) / (12 * h * h);
    CAPTURE(al);
    CHECK(rel(f0, delta) < 1e-12);
    CHECK(rel(d1, -2 * delta) < 1e-6);
    CHECK(rel(d2, 6 * delta) < 1e-6);
  }
}

TEST_CASE("compact and expanded energy forms agree") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const auto s = random_sample(rng);
    const auto range = allowed_n_range(s.params, s.l);
    for (int n = 0; n < range.end; ++n) {
      const auto d = dimensionless(s.params, s.l);
      if (d.beta2 <= 0) continue;
      const double c = energy_compact_form(s.params, {n, s.l});
      const double e = energy_expanded_form(s.params, {n, s.l});
      CHECK(std::abs(c - e) <= 1e-10 * std::max(std::abs(c), 1e-300));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("level invariants") {
  std::mt19937_64 rng(23);
  int bound = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto s = random_sample(rng);
    const auto& p = s.params;
    const auto range = allowed_n_range(p, s.l);
    for (int n = 0; n < range.end + 1; ++n) {
      const QuantumNumbers qn{n, s.l};
      const auto check = bound_state_exists(p, qn);
      if (!check) {
        CHECK_THROWS_AS(energy(p, qn), NoBoundState);
        continue;
      }
      ++bound;
      const auto lv = energy(p, qn);
      const auto d = dimensionless(p, s.l);
      const double eta = lv.n_prime - lv.epsilon;
      CHECK(lv.epsilon > 0);
      CHECK(eta > 0);
      // the two boundary exponents satisfy eta^2 = eps^2 - beta^2 + gamma^2
      CHECK(std::abs(eta * eta - (lv.epsilon * lv.epsilon - d.beta2 + d.gamma2)) <=
            1e-9 * std::max({eta * eta, d.beta2, d.gamma2}));
      // decay constant at large r
      const double e_from_eps = d.delta * d.c0 - d.energy_scale * lv.epsilon * lv.epsilon;
      CHECK(std::abs(lv.energy - e_from_eps) <= 1e-9 * std::max(std::abs(lv.energy), d.delta * d.c0));
      // below both asymptotes, above the bottom of the well
      const double depth = p.v0 - d.delta * d.c1;
      const double f_min = std::min(1.0, depth / (2 * d.delta * d.c2));
      const double bottom = d.delta * d.c0 - depth * f_min + d.delta * d.c2 * f_min * f_min;
      CHECK(lv.energy < d.delta * d.c0);
      CHECK(lv.energy < d.delta * (d.c0 + d.c1 + d.c2) - p.v0);
      CHECK(lv.energy > bottom);
      CHECK(lv.window.contains(p.v0));
    }
  }
  CHECK(bound > 100);
}

TEST_CASE("window geometry") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_sample(rng);
    const auto& p = s.params;
    const double mid =
        8.0 * p.hbar2_over_2mu() * p.a * s.l * (s.l + 1) / (p.r0 * p.r0 * p.r0);
    const auto range = allowed_n_range(p, s.l);
    double prev_width = std::numeric_limits<double>::infinity();
    for (int n = 0; n < range.end; ++n) {
      const auto w = v0_window(p, {n, s.l});
      CHECK(w.v0_min < w.v0_max);
      CHECK(rel(0.5 * (w.v0_min + w.v0_max), mid) < 1e-10);
      CHECK(w.width() < prev_width);
      prev_width = w.width();
    }
  }
}
