#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "wsnu/core.hpp"

namespace wsnu::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, csv, json };

Format parse_format(const std::string& name);

/// Fixed 10-significant-digit rendering used for every number we emit.
std::string num(double x);
std::string num(std::optional<double> x);  // empty when absent

/// x rounded to the digits num() prints, so JSON and CSV agree.
double round10(double x);
Json json_num(std::optional<double> x);

Json params_json(const PhysicalParams& p);
Json meta_json(const PhysicalParams& p, const std::string& command);
Json level_json(const EnergyLevel& level);
Json excluded_json(const ExcludedLevel& excluded);

/// A rectangular table rendered as CSV or as right-aligned text columns.
class Table {
public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
  bool empty() const { return rows_.empty(); }

  void write_csv(std::ostream& os) const;
  void write_text(std::ostream& os) const;

private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

}  // namespace wsnu::cli
