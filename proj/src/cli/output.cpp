#include "cli/output.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>

#include "wsnu/errors.hpp"

namespace wsnu::cli {

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw DomainError("unknown format '" + name + "' (expected csv, json or text)");
}

std::string num(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

std::string num(std::optional<double> x) { return x ? num(*x) : std::string{}; }

double round10(double x) { return std::strtod(num(x).c_str(), nullptr); }

Json json_num(std::optional<double> x) { return x ? Json(round10(*x)) : Json(nullptr); }

Json params_json(const PhysicalParams& p) {
  Json j;
  j["V0"] = round10(p.v0);
  j["R0"] = round10(p.r0);
  j["a"] = round10(p.a);
  j["mu"] = round10(p.mu);
  return j;
}

Json meta_json(const PhysicalParams& p, const std::string& command) {
  Json j;
  j["command"] = command;
  j["units"] = {{"energy", "MeV"}, {"length", "fm"}, {"mass", "u"}};
  j["constants"] = {{"hbar_c", round10(p.hbar_c)}, {"u_to_mev", round10(p.u_to_mev)}};
  return j;
}

Json level_json(const EnergyLevel& level) {
  Json j;
  j["l"] = level.qn.l;
  j["n"] = level.qn.n;
  j["E"] = round10(level.energy);
  j["epsilon"] = round10(level.epsilon);
  j["n_prime"] = round10(level.n_prime);
  j["V0min"] = round10(level.window.v0_min);
  j["V0max"] = round10(level.window.v0_max);
  return j;
}

Json excluded_json(const ExcludedLevel& excluded) {
  Json j;
  j["l"] = excluded.qn.l;
  j["n"] = excluded.qn.n;
  j["V0min"] = round10(excluded.window.v0_min);
  j["V0max"] = round10(excluded.window.v0_max);
  j["reason"] = describe(excluded.reason);
  return j;
}

void Table::write_csv(std::ostream& os) const {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) os << ',';
      const bool quote = cells[i].find_first_of(",\"") != std::string::npos;
      if (!quote) {
        os << cells[i];
        continue;
      }
      os << '"';
      for (char c : cells[i]) os << (c == '"' ? std::string("\"\"") : std::string(1, c));
      os << '"';
    }
    os << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

void Table::write_text(std::ostream& os) const {
  std::vector<std::size_t> width(header_.size(), 0);
  auto measure = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
  };
  measure(header_);
  for (const auto& r : rows_) measure(r);
  auto line = [&](const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += "  ";
      // free-text columns left-aligned, numbers right-aligned
      const bool text = header_[i] == "error" || header_[i] == "reason" || header_[i] == "note";
      if (text)
        out += cells[i];
      else
        out += std::string(width[i] - std::min(width[i], cells[i].size()), ' ') + cells[i];
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << '\n';
  };
  line(header_);
  for (const auto& r : rows_) line(r);
}

}  // namespace wsnu::cli
