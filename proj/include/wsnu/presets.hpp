#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wsnu/params.hpp"

namespace wsnu {

/// One published row: (l, n, V0) plus the reported window and energy, all MeV.
struct ReferenceRow {
  int l = 0;
  int n = 0;
  double v0 = 0.0;
  double v0_min = 0.0;
  double v0_max = 0.0;
  double energy = 0.0;
};

enum class ReferenceTable { one, two };

/// Rows of the two published tables (A = 56 parameter set). Table one has a
/// printed l = 15 row without n; it is left out.
std::span<const ReferenceRow> reference_rows(ReferenceTable table);

/// "paper-table-1" / "paper-table-2"; nullopt for anything else.
std::optional<ReferenceTable> parse_reference_table(const std::string& name);
std::string to_string(ReferenceTable table);

inline constexpr double kReferenceMassNumber = 56.0;
inline constexpr double kReferenceReducedMass = 0.50433;  // u

/// Default parameter set: A = 56 empirical well with mu = 0.50433 u.
PhysicalParams reference_params();

}  // namespace wsnu
