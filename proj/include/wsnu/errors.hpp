#pragma once

#include <stdexcept>
#include <string>

namespace wsnu {

/// Invalid argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Which bound-state condition failed.
enum class BoundFailure {
  none,
  zero_angular_momentum,  // l = 0: n' = -n <= 0
  n_out_of_range,         // n' <= 0 for l > 0
  degenerate_n_prime,     // 0 < n' < 1e-12
  v0_below_window,
  v0_above_window,
  v0_on_window_edge,
  non_positive_exponent,  // eps <= 0 or eta <= 0
};

std::string describe(BoundFailure reason);

/// The requested (n, l) has no bound state for the given parameters.
class NoBoundState : public std::runtime_error {
public:
  NoBoundState(BoundFailure reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}
  BoundFailure reason() const noexcept { return reason_; }

private:
  BoundFailure reason_;
};

/// Sampled wavefunction has not decayed at the right edge of the grid.
class TruncationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Numerical solver failed to bracket or converge.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Trial energy lies above the potential at the outer edge; nothing to shoot for.
class UnboundEnergy : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace wsnu
