#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cli/output.hpp"
#include "wsnu/core.hpp"
#include "wsnu/errors.hpp"
#include "wsnu/oracle.hpp"
#include "wsnu/presets.hpp"
#include "wsnu/specfun.hpp"

namespace wsnu::cli {

namespace {

// Every option lives on the top-level app so a config file can set any of
// them with a bare `key = value` line; subcommands only select the action.
struct Options {
  std::optional<double> v0, r0, a, mu, mass_number, hbar_c, u_to_mev;
  std::string format = "text";
  std::string out_path;

  std::optional<int> l, n, l_max, max_l;
  std::optional<double> r_max;
  double h = 1e-3;
  double tol = 1e-4;
  std::string preset, rows, states;
  bool with_oracle = false;
  bool skip_exact = false;
};

struct Context {
  PhysicalParams params;
  Format format = Format::text;
  std::ostream& out;
  std::ostream& err;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

PhysicalParams build_params(const Options& o) {
  auto p = PhysicalParams::from_mass_number(o.mass_number.value_or(kReferenceMassNumber),
                                            o.mu.value_or(kReferenceReducedMass));
  if (o.v0) p.v0 = *o.v0;
  if (o.r0) p.r0 = *o.r0;
  if (o.a) p.a = *o.a;
  if (o.hbar_c) p.hbar_c = *o.hbar_c;
  if (o.u_to_mev) p.u_to_mev = *o.u_to_mev;
  p.validate();
  return p;
}

QuantumNumbers require_state(const Options& o, const std::string& command) {
  if (!o.l || !o.n) throw UsageError(command + " needs --l and --n");
  if (*o.l < 0 || *o.n < 0) throw UsageError("--l and --n must be non-negative");
  return QuantumNumbers{*o.n, *o.l};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <class T>
T parse_number(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t used = 0;
  T value{};
  try {
    if constexpr (std::is_same_v<T, int>)
      value = std::stoi(t, &used);
    else
      value = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size()) throw UsageError("cannot parse " + what + " from '" + text + "'");
  return value;
}

struct RowSpec {
  int l = 0;
  int n = 0;
  double v0 = 0.0;
};

// "l,n;l,n" (with_v0 false) or "l,n,V0;..." (with_v0 true)
std::vector<RowSpec> parse_rows(const std::string& text, bool with_v0, double default_v0) {
  std::vector<RowSpec> rows;
  for (const auto& item : split(text, ';')) {
    if (trim(item).empty()) continue;
    auto f = split(item, ',');
    const std::size_t want = with_v0 ? 3 : 2;
    if (f.size() != want)
      throw UsageError("row '" + item + "' needs " + std::to_string(want) + " comma-separated fields");
    RowSpec r{parse_number<int>(f[0], "l"), parse_number<int>(f[1], "n"),
              with_v0 ? parse_number<double>(f[2], "V0") : default_v0};
    if (r.l < 0 || r.n < 0) throw UsageError("row '" + item + "': l and n must be non-negative");
    rows.push_back(r);
  }
  if (rows.empty()) throw UsageError("no rows given");
  return rows;
}

std::vector<RowSpec> preset_rows(const std::string& name) {
  auto table = parse_reference_table(name);
  if (!table) throw UsageError("unknown preset '" + name + "' (expected paper-table-1 or paper-table-2)");
  std::vector<RowSpec> rows;
  for (const auto& r : reference_rows(*table)) rows.push_back({r.l, r.n, r.v0});
  return rows;
}

void sort_rows(std::vector<RowSpec>& rows) {
  std::stable_sort(rows.begin(), rows.end(),
                   [](const RowSpec& x, const RowSpec& y) { return std::tie(x.l, x.n) < std::tie(y.l, y.n); });
}

void csv_preamble(std::ostream& os, const PhysicalParams& p, const std::string& command) {
  os << "# command = " << command << '\n';
  os << "# V0 = " << num(p.v0) << " MeV, R0 = " << num(p.r0) << " fm, a = " << num(p.a)
     << " fm, mu = " << num(p.mu) << " u\n";
  os << "# hbar_c = " << num(p.hbar_c) << " MeV fm, u_to_mev = " << num(p.u_to_mev) << " MeV\n";
}

void emit(const Context& ctx, const Table& table, const std::string& command) {
  if (ctx.format == Format::csv) {
    csv_preamble(ctx.out, ctx.params, command);
    table.write_csv(ctx.out);
  } else {
    table.write_text(ctx.out);
  }
}

void emit_json(const Context& ctx, Json doc) { ctx.out << doc.dump(2) << '\n'; }

Json skeleton(const PhysicalParams& p) {
  Json doc;
  doc["params"] = params_json(p);
  doc["levels"] = Json::array();
  doc["excluded"] = Json::array();
  return doc;
}

int report_unbound(const Context& ctx, const BoundCheck& check) {
  ctx.err << "no bound state: " << check.message << '\n';
  return kNoBoundState;
}

int cmd_energy(const Context& ctx, const Options& o) {
  const auto qn = require_state(o, "energy");
  const auto check = bound_state_exists(ctx.params, qn);
  if (!check) return report_unbound(ctx, check);
  const auto level = energy(ctx.params, qn);

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    doc["levels"].push_back(level_json(level));
    doc["meta"] = meta_json(ctx.params, "energy");
    emit_json(ctx, doc);
    return kOk;
  }
  Table t({"l", "n", "V0", "E", "epsilon", "n_prime", "V0min", "V0max"});
  t.add({std::to_string(qn.l), std::to_string(qn.n), num(ctx.params.v0), num(level.energy), num(level.epsilon),
         num(level.n_prime), num(level.window.v0_min), num(level.window.v0_max)});
  emit(ctx, t, "energy");
  return kOk;
}

int cmd_window(const Context& ctx, const Options& o) {
  const auto qn = require_state(o, "window");
  const auto range = allowed_n_range(ctx.params, qn.l);
  if (!range.contains(qn.n)) return report_unbound(ctx, bound_state_exists(ctx.params, qn));
  const auto w = v0_window(ctx.params, qn);
  const auto check = bound_state_exists(ctx.params, qn);

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    Json win;
    win["l"] = qn.l;
    win["n"] = qn.n;
    win["V0min"] = round10(w.v0_min);
    win["V0max"] = round10(w.v0_max);
    win["width"] = round10(w.width());
    win["n_max_exclusive"] = round10(w.n_max_exclusive);
    win["bound"] = check.exists;
    if (check.exists)
      doc["levels"].push_back(level_json(energy(ctx.params, qn)));
    else
      doc["excluded"].push_back(excluded_json({qn, w, check.reason}));
    doc["windows"] = Json::array({win});
    doc["meta"] = meta_json(ctx.params, "window");
    emit_json(ctx, doc);
    return kOk;
  }
  Table t({"l", "n", "V0min", "V0max", "width", "n_max", "V0", "bound"});
  t.add({std::to_string(qn.l), std::to_string(qn.n), num(w.v0_min), num(w.v0_max), num(w.width()),
         num(w.n_max_exclusive), num(ctx.params.v0), check.exists ? "yes" : "no"});
  emit(ctx, t, "window");
  return kOk;
}

int cmd_spectrum(const Context& ctx, const Options& o) {
  if (!o.l_max) throw UsageError("spectrum needs --l-max");
  if (*o.l_max < 0) throw UsageError("--l-max must be >= 0");
  if (*o.l_max == 0) ctx.err << "warning: no l=0 bound states (n' = -n <= 0 for l=0)\n";
  const auto s = spectrum(ctx.params, *o.l_max);

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    for (const auto& lv : s.levels) doc["levels"].push_back(level_json(lv));
    for (const auto& ex : s.excluded) doc["excluded"].push_back(excluded_json(ex));
    doc["meta"] = meta_json(ctx.params, "spectrum");
    doc["meta"]["l_max"] = *o.l_max;
    emit_json(ctx, doc);
    return kOk;
  }

  struct Line {
    QuantumNumbers qn;
    std::vector<std::string> cells;
  };
  std::vector<Line> lines;
  for (const auto& lv : s.levels)
    lines.push_back({lv.qn,
                     {std::to_string(lv.qn.l), std::to_string(lv.qn.n), "bound", num(lv.energy), num(lv.epsilon),
                      num(lv.n_prime), num(lv.window.v0_min), num(lv.window.v0_max), ""}});
  for (const auto& ex : s.excluded)
    lines.push_back({ex.qn,
                     {std::to_string(ex.qn.l), std::to_string(ex.qn.n), "excluded", "", "", "",
                      num(ex.window.v0_min), num(ex.window.v0_max), describe(ex.reason)}});
  std::stable_sort(lines.begin(), lines.end(), [](const Line& x, const Line& y) { return x.qn < y.qn; });

  Table t({"l", "n", "status", "E", "epsilon", "n_prime", "V0min", "V0max", "reason"});
  for (auto& line : lines) t.add(std::move(line.cells));
  emit(ctx, t, "spectrum");
  return kOk;
}

int cmd_table(const Context& ctx, const Options& o) {
  if (o.preset.empty() == o.rows.empty()) throw UsageError("table needs exactly one of --preset or --rows");
  auto rows = o.preset.empty() ? parse_rows(o.rows, true, ctx.params.v0) : preset_rows(o.preset);
  sort_rows(rows);

  struct Result {
    PhysicalParams params;
    QuantumNumbers qn;
    std::optional<BoundWindow> window;
    std::optional<double> e_analytic;
    BoundCheck check;
    std::optional<double> e_numeric, delta;
    std::string error;
  };
  std::vector<Result> results;
  for (const auto& r : rows) {
    Result res;
    res.params = ctx.params;
    res.params.v0 = r.v0;
    res.qn = QuantumNumbers{r.n, r.l};
    try {
      res.params.validate();
      res.check = bound_state_exists(res.params, res.qn);
      if (allowed_n_range(res.params, r.l).contains(r.n)) {
        res.window = v0_window(res.params, res.qn);
        res.e_analytic = energy_compact_form(res.params, res.qn);
      }
      if (!res.check) res.error = res.check.message;
    } catch (const std::exception& e) {
      res.error = e.what();
    }
    results.push_back(std::move(res));
  }

  if (o.with_oracle) {
    ShootingConfig cfg;
    cfg.h = o.h;
    cfg.validate();
    std::vector<ValidationCase> cases;
    std::vector<std::size_t> index;
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (!results[i].check) continue;
      cases.push_back({results[i].params, results[i].qn});
      index.push_back(i);
    }
    const auto outcomes = compare_many(cases, cfg, false);
    for (std::size_t k = 0; k < outcomes.size(); ++k) {
      auto& res = results[index[k]];
      if (outcomes[k].report) {
        res.e_numeric = outcomes[k].report->e_numeric_pekeris;
        res.delta = outcomes[k].report->agreement;
      } else {
        res.error = outcomes[k].message;
      }
    }
  }

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    doc["rows"] = Json::array();
    for (const auto& res : results) {
      Json row;
      row["l"] = res.qn.l;
      row["n"] = res.qn.n;
      row["V0min"] = json_num(res.window ? std::optional(res.window->v0_min) : std::nullopt);
      row["V0max"] = json_num(res.window ? std::optional(res.window->v0_max) : std::nullopt);
      row["V0"] = round10(res.params.v0);
      row["E_analytic"] = json_num(res.e_analytic);
      row["bound"] = res.check.exists;
      if (o.with_oracle) {
        row["E_numeric"] = json_num(res.e_numeric);
        row["delta"] = json_num(res.delta);
      }
      row["error"] = res.error.empty() ? Json(nullptr) : Json(res.error);
      doc["rows"].push_back(row);
      if (res.check)
        doc["levels"].push_back(level_json(energy(res.params, res.qn)));
      else if (res.window)
        doc["excluded"].push_back(excluded_json({res.qn, *res.window, res.check.reason}));
    }
    doc["meta"] = meta_json(ctx.params, "table");
    doc["meta"]["preset"] = o.preset.empty() ? "custom" : o.preset;
    emit_json(ctx, doc);
    return kOk;
  }

  std::vector<std::string> header{"l", "n", "V0min", "V0max", "V0", "E_analytic", "bound"};
  if (o.with_oracle) header.insert(header.end(), {"E_numeric", "delta"});
  header.push_back("error");
  Table t(header);
  for (const auto& res : results) {
    std::vector<std::string> cells{std::to_string(res.qn.l),
                                   std::to_string(res.qn.n),
                                   res.window ? num(res.window->v0_min) : "",
                                   res.window ? num(res.window->v0_max) : "",
                                   num(res.params.v0),
                                   num(res.e_analytic),
                                   res.check.exists ? "yes" : "no"};
    if (o.with_oracle) cells.insert(cells.end(), {num(res.e_numeric), num(res.delta)});
    cells.push_back(res.error);
    t.add(std::move(cells));
  }
  emit(ctx, t, "table");
  return kOk;
}

int cmd_wavefunction(const Context& ctx, const Options& o) {
  const auto qn = require_state(o, "wavefunction");
  const auto check = bound_state_exists(ctx.params, qn);
  if (!check) return report_unbound(ctx, check);
  if (!(o.h > 0.0)) throw UsageError("--h must be positive");

  const auto exps = wave_exponents(ctx.params, qn);
  const double r_max = o.r_max.value_or(default_r_max(ctx.params, exps));
  if (!(r_max > 0.0)) throw UsageError("--r-max must be positive");
  const auto table = normalize(sample_wavefunction(ctx.params, qn, RadialGrid::uniform(0.0, r_max, o.h)));
  const auto r = table.grid.r_values();

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    doc["levels"].push_back(level_json(energy(ctx.params, qn)));
    Json wf;
    wf["l"] = qn.l;
    wf["n"] = qn.n;
    wf["E"] = round10(table.energy);
    wf["epsilon"] = round10(table.exponents.eps);
    wf["eta"] = round10(table.exponents.eta);
    wf["C_nl"] = round10(table.norm_constant);
    wf["h"] = round10(table.grid.spacing());
    wf["r"] = Json::array();
    wf["u"] = Json::array();
    for (std::size_t i = 0; i < r.size(); ++i) {
      wf["r"].push_back(round10(r[i]));
      wf["u"].push_back(round10(table.u_values[i]));
    }
    doc["wavefunction"] = std::move(wf);
    doc["meta"] = meta_json(ctx.params, "wavefunction");
    emit_json(ctx, doc);
    return kOk;
  }

  // text and csv share the two-column layout
  csv_preamble(ctx.out, ctx.params, "wavefunction");
  ctx.out << "# l = " << qn.l << ", n = " << qn.n << '\n';
  ctx.out << "# E_nl = " << num(table.energy) << '\n';
  ctx.out << "# epsilon = " << num(table.exponents.eps) << '\n';
  ctx.out << "# eta = " << num(table.exponents.eta) << '\n';
  ctx.out << "# C_nl = " << num(table.norm_constant) << '\n';
  ctx.out << "# h = " << num(table.grid.spacing()) << ", r_max = " << num(table.grid.back()) << '\n';
  ctx.out << "r,u\n";
  for (std::size_t i = 0; i < r.size(); ++i) ctx.out << num(r[i]) << ',' << num(table.u_values[i]) << '\n';
  return kOk;
}

const char* to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::ok: return "ok";
    case OutcomeKind::no_bound_state: return "no_bound_state";
    case OutcomeKind::no_convergence: return "no_convergence";
    case OutcomeKind::error: return "error";
  }
  return "error";
}

int cmd_validate(const Context& ctx, const Options& o) {
  if (o.preset.empty() == o.states.empty()) throw UsageError("validate needs exactly one of --states or --preset");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  auto rows = o.preset.empty() ? parse_rows(o.states, false, ctx.params.v0) : preset_rows(o.preset);
  if (o.max_l) std::erase_if(rows, [&](const RowSpec& r) { return r.l > *o.max_l; });
  sort_rows(rows);

  ShootingConfig cfg;
  cfg.h = o.h;
  cfg.validate();
  std::vector<ValidationCase> cases;
  for (const auto& r : rows) {
    auto p = ctx.params;
    p.v0 = r.v0;
    p.validate();
    cases.push_back({p, QuantumNumbers{r.n, r.l}});
  }
  const auto outcomes = compare_many(cases, cfg, !o.skip_exact);

  bool any_unbound = false, any_failure = false;
  std::vector<std::string> status(outcomes.size());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& oc = outcomes[i];
    if (oc.kind == OutcomeKind::ok) {
      const bool pass = oc.report->agreement < o.tol;
      status[i] = pass ? "pass" : "fail";
      any_failure |= !pass;
    } else {
      status[i] = to_string(oc.kind);
      if (oc.kind == OutcomeKind::no_bound_state)
        any_unbound = true;
      else
        any_failure = true;
      ctx.err << "l=" << cases[i].qn.l << " n=" << cases[i].qn.n << ": " << oc.message << '\n';
    }
  }

  if (ctx.format == Format::json) {
    auto doc = skeleton(ctx.params);
    doc["rows"] = Json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& oc = outcomes[i];
      const auto& rep = oc.report;
      Json row;
      row["l"] = cases[i].qn.l;
      row["n"] = cases[i].qn.n;
      row["V0"] = round10(cases[i].params.v0);
      row["E_analytic"] = json_num(rep ? std::optional(rep->e_analytic) : std::nullopt);
      row["E_pekeris"] = json_num(rep ? std::optional(rep->e_numeric_pekeris) : std::nullopt);
      row["agreement"] = json_num(rep ? std::optional(rep->agreement) : std::nullopt);
      row["E_exact"] = json_num(rep ? rep->e_numeric_exact : std::nullopt);
      row["pekeris_error"] = json_num(rep ? rep->pekeris_error : std::nullopt);
      row["status"] = status[i];
      row["note"] = rep ? rep->exact_note : oc.message;
      doc["rows"].push_back(row);
    }
    doc["meta"] = meta_json(ctx.params, "validate");
    doc["meta"]["tol"] = o.tol;
    doc["meta"]["h"] = o.h;
    emit_json(ctx, doc);
  } else {
    Table t({"l", "n", "V0", "E_analytic", "E_pekeris", "agreement", "E_exact", "pekeris_error", "status", "note"});
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      const auto& oc = outcomes[i];
      const auto& rep = oc.report;
      t.add({std::to_string(cases[i].qn.l), std::to_string(cases[i].qn.n), num(cases[i].params.v0),
             rep ? num(rep->e_analytic) : "", rep ? num(rep->e_numeric_pekeris) : "",
             rep ? num(rep->agreement) : "", rep ? num(rep->e_numeric_exact) : "",
             rep ? num(rep->pekeris_error) : "", status[i], rep ? rep->exact_note : oc.message});
    }
    emit(ctx, t, "validate");
  }
  if (any_failure) return kSolverFailure;
  if (any_unbound) return kNoBoundState;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Woods-Saxon bound states from the closed-form Pekeris solution, with a Numerov cross-check"};
  app.set_help_flag("--help", "print this help and exit");  // -h is taken by the step option
  app.set_config("--config", "", "read `key = value` defaults (keys are flag names); flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.fallthrough();
  app.require_subcommand(1);

  const std::string params = "Potential";
  app.add_option("--V0", o.v0, "well depth, MeV (default 40.5 + 0.13 A)")->group(params);
  app.add_option("--R0", o.r0, "radius, fm (default 1.285 A^(1/3))")->group(params);
  app.add_option("--a", o.a, "surface diffuseness, fm (default 0.65)")->group(params);
  app.add_option("--mu", o.mu, "reduced mass, u (default 0.50433)")->group(params);
  app.add_option("--A", o.mass_number, "mass number used for the defaults (default 56)")->group(params);
  app.add_option("--hbar-c", o.hbar_c, "hbar c, MeV fm")->group(params);
  app.add_option("--u-mev", o.u_to_mev, "atomic mass unit, MeV")->group(params);

  const std::string output = "Output";
  app.add_option("--format", o.format, "csv, json or text")
      ->check(CLI::IsMember({"csv", "json", "text"}))
      ->group(output);
  app.add_option("--out", o.out_path, "write to PATH instead of stdout")->group(output);

  const std::string command = "Command options";
  app.add_option("--l", o.l, "orbital angular momentum")->group(command);
  app.add_option("--n", o.n, "radial quantum number")->group(command);
  app.add_option("--l-max", o.l_max, "spectrum: largest l")->group(command);
  app.add_option("--preset", o.preset, "table/validate: paper-table-1 or paper-table-2")->group(command);
  app.add_option("--rows", o.rows, "table: custom rows \"l,n,V0;l,n,V0\"")->group(command);
  app.add_flag("--with-oracle", o.with_oracle, "table: add Numerov energies")->group(command);
  app.add_option("--r-max", o.r_max, "wavefunction: grid end, fm")->group(command);
  app.add_option("--h", o.h, "wavefunction grid step / Numerov step, fm (default 1e-3)")->group(command);
  app.add_option("--states", o.states, "validate: \"l,n;l,n\"")->group(command);
  app.add_option("--max-l", o.max_l, "validate: drop preset rows with larger l")->group(command);
  app.add_option("--tol", o.tol, "validate: agreement tolerance, MeV (default 1e-4)")->group(command);
  app.add_flag("--skip-exact", o.skip_exact, "validate: skip the exact-potential solve")->group(command);

  auto* energy_cmd = app.add_subcommand("energy", "E_nl, epsilon, n' and the depth window (--l, --n)");
  auto* window_cmd = app.add_subcommand("window", "allowed depth window (V0min, V0max) for (--l, --n)");
  auto* spectrum_cmd = app.add_subcommand("spectrum", "all bound levels with l <= --l-max");
  auto* table_cmd = app.add_subcommand("table", "rows (l, n, V0) from --preset or --rows");
  auto* wave_cmd = app.add_subcommand("wavefunction", "normalised u_nl(r) on [0, --r-max] with step --h");
  auto* validate_cmd = app.add_subcommand("validate", "closed form vs Numerov for --states or --preset");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    Context ctx{build_params(o), parse_format(o.format), o.out_path.empty() ? out : buffer, err};
    for (const auto& w : ctx.params.warnings()) err << "warning: " << w << '\n';
    if (energy_cmd->parsed())
      code = cmd_energy(ctx, o);
    else if (window_cmd->parsed())
      code = cmd_window(ctx, o);
    else if (spectrum_cmd->parsed())
      code = cmd_spectrum(ctx, o);
    else if (table_cmd->parsed())
      code = cmd_table(ctx, o);
    else if (wave_cmd->parsed())
      code = cmd_wavefunction(ctx, o);
    else if (validate_cmd->parsed())
      code = cmd_validate(ctx, o);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const TruncationError& e) {
    err << "grid too short: " << e.what() << '\n';
    return kUsage;
  } catch (const NoBoundState& e) {
    err << "no bound state: " << e.what() << '\n';
    return kNoBoundState;
  } catch (const std::exception& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  }

  if (!o.out_path.empty()) {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "cannot open " << o.out_path << " for writing\n";
      return kUsage;
    }
    file << buffer.str();
  }
  return code;
}

}  // namespace wsnu::cli
