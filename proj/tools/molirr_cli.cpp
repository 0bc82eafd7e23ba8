// molirr: generate molecular graphs, compute irregularity indices, check the
// closed forms and run the Var - CS sweeps.
//
// Exit codes: 0 ok, 1 verification failure, 2 bad parameters,
// 3 I/O or parse error, 4 eigensolver did not converge.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "molirr/error.hpp"
#include "molirr/formulas.hpp"
#include "molirr/generators.hpp"
#include "molirr/graph.hpp"
#include "molirr/indices.hpp"
#include "molirr/verify.hpp"

using namespace molirr;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kBadParams = 2;
constexpr int kIoError = 3;
constexpr int kNotConverged = 4;

constexpr Param kParams[] = {Param::P, Param::Q, Param::K, Param::D, Param::N};

struct RunConfig {
  std::string family;
  std::string values[5];  // raw lists, indexed like kParams
  double tol = SolverOptions{}.tol;
  std::size_t max_iter = SolverOptions{}.max_iter;
  std::string out;
  std::string in;
  std::string format;
  bool printed_forms = false;
  bool allow_unconverged = false;
  bool all = false;
  bool quick = false;

  const std::string& raw(Param p) const { return values[static_cast<int>(p)]; }
  SolverOptions solver() const { return {.tol = tol, .max_iter = max_iter}; }
};

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidParams, msg); }

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    bad(fmt::format("not an integer: '{}'", text));
  }
  if (used != text.size()) bad(fmt::format("not an integer: '{}'", text));
  return v;
}

// "4", "2..8", "4,8,16", "2:80:5" (2 then every multiple of 5 up to 80), or a
// comma list mixing those.
std::vector<std::int64_t> parse_values(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ',')) {
    if (item.empty()) bad(fmt::format("empty item in '{}'", text));
    if (auto dots = item.find(".."); dots != std::string::npos) {
      const auto a = parse_int(item.substr(0, dots));
      const auto b = parse_int(item.substr(dots + 2));
      if (b < a) bad(fmt::format("empty range '{}'", item));
      if (b - a > 1'000'000) bad(fmt::format("range too long '{}'", item));
      for (auto v = a; v <= b; ++v) out.push_back(v);
    } else if (item.find(':') != std::string::npos) {
      std::vector<std::string> parts;
      std::stringstream ss(item);
      std::string part;
      while (std::getline(ss, part, ':')) parts.push_back(part);
      if (parts.size() != 3) bad(fmt::format("expected a:b:step, got '{}'", item));
      const auto a = parse_int(parts[0]);
      const auto b = parse_int(parts[1]);
      const auto s = parse_int(parts[2]);
      if (s <= 0) bad(fmt::format("step must be positive in '{}'", item));
      if (b < a) bad(fmt::format("empty range '{}'", item));
      if ((b - a) / s > 1'000'000) bad(fmt::format("range too long '{}'", item));
      out.push_back(a);
      // next multiple of s strictly above a
      std::int64_t v = (a >= 0 ? a / s + 1 : -((-a) / s) + ((-a) % s == 0 ? 1 : 0)) * s;
      for (; v <= b; v += s) out.push_back(v);
    } else {
      out.push_back(parse_int(item));
    }
  }
  if (out.empty()) bad("empty parameter list");
  return out;
}

Family parse_family_flag(const RunConfig& cfg) {
  if (cfg.family.empty()) bad("--family is required");
  const auto f = parse_family(cfg.family);
  if (!f) {
    bad(fmt::format("unknown family '{}' (tuc4c8s, tuc4c8r, tuc4, tuhc6, tuvc6, dendrimer, "
                    "circumcoronene, mcycle, mpath)",
                    cfg.family));
  }
  return *f;
}

// Grid from the flags; parameters the family uses but the flags omit come
// from `fallback` (or are an error when it is empty).
ParamGrid grid_from_flags(const RunConfig& cfg, Family f, const ParamGrid* fallback) {
  ParamGrid grid;
  for (Param p : kParams) {
    const auto& raw = cfg.raw(p);
    if (!uses_param(f, p)) {
      if (!raw.empty() && fallback == nullptr) {
        bad(fmt::format("{} does not take -{}", family_token(f), param_name(p)));
      }
      continue;
    }
    if (!raw.empty()) {
      grid.values(p) = parse_values(raw);
    } else if (fallback != nullptr) {
      grid.values(p) = fallback->values(p);
    } else {
      bad(fmt::format("{} needs -{}", family_token(f), param_name(p)));
    }
  }
  return grid;
}

FamilySpec single_spec(const RunConfig& cfg) {
  const Family f = parse_family_flag(cfg);
  const auto specs = expand(f, grid_from_flags(cfg, f, nullptr));
  if (specs.size() != 1) bad("expected a single parameter value per flag");
  validate(specs.front());
  return specs.front();
}

std::vector<FamilySpec> spec_list(const RunConfig& cfg) {
  const Family f = parse_family_flag(cfg);
  auto specs = expand(f, grid_from_flags(cfg, f, nullptr));
  for (const auto& s : specs) validate(s);
  return specs;
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  bad(fmt::format("--format must be one of: {}", list));
}

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorKind::Parse, fmt::format("cannot open {} for writing", cfg.out));
  file << text;
  if (!file.flush()) throw Error(ErrorKind::Parse, fmt::format("write to {} failed", cfg.out));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

// --- generate --------------------------------------------------------------

int cmd_generate(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "edgelist";
  check_format(cfg, {"edgelist", "csv", "pretty"});
  const FamilySpec spec = single_spec(cfg);
  const Graph g = generate(spec);
  std::ostringstream out;
  if (cfg.format == "edgelist") {
    write_edge_list(out, g);
  } else if (cfg.format == "csv") {
    out << "u,v\n";
    for (const Edge& e : g.edges()) out << e.u << ',' << e.v << '\n';
  } else {
    const auto ds = degree_sequence(g);
    out << fmt::format("graph={}\nn={}\nm={}\n", label(spec), g.order(), g.size());
    for (auto [d, c] : ds.counts) out << fmt::format("degree {}: {}\n", d, c);
    for (auto [key, c] : edge_class_counts(g))
      out << fmt::format("edges ({},{}): {}\n", key.first, key.second, c);
    out << fmt::format("connected={}\n", is_connected(g) ? "yes" : "no");
  }
  emit(cfg, out.str());
  return kOk;
}

// --- indices ---------------------------------------------------------------

std::string pretty_report(const std::string& name, const IndexReport& r) {
  std::string s = fmt::format("graph={}\nn={}\nm={}\nirr={}\nirr_t={}\nvar={}\nvar_float={:.17g}\n"
                              "mean_degree={}\nt={}\n",
                              name, r.n, r.m, r.irr, r.irr_t, to_string(r.variance),
                              to_double(r.variance), to_string(r.mean_degree), r.t_index);
  if (!r.connected) {
    s += "lambda1=\ncs=\nnote=disconnected graph, CS undefined\n";
  } else if (r.spectral) {
    s += fmt::format("lambda1={:.17g}\ncs={:.17g}\niterations={}\nconverged={}\n", r.spectral->lambda1,
                     *r.cs(), r.spectral->iterations, r.spectral->converged ? "yes" : "no");
  }
  return s;
}

int cmd_indices(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "pretty";
  check_format(cfg, {"pretty", "csv"});
  struct Item {
    std::string family, params, name;
    Graph graph;
  };
  std::vector<Item> items;
  if (!cfg.in.empty()) {
    if (!cfg.family.empty()) bad("give either --in or --family, not both");
    std::ifstream file(cfg.in, std::ios::binary);
    if (!file) throw Error(ErrorKind::Parse, fmt::format("cannot open {}", cfg.in));
    items.push_back({"edgelist", cfg.in, cfg.in, read_edge_list(file)});
  } else {
    for (const auto& s : spec_list(cfg))
      items.push_back({std::string(family_token(s.family)), params_string(s), label(s), generate(s)});
  }

  std::ostringstream out;
  if (cfg.format == "csv") out << index_csv_header() << '\n';
  bool unconverged = false;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (items[i].graph.order() == 0) throw Error(ErrorKind::Parse, "graph has no vertices");
    const IndexReport r = full_report(items[i].graph, cfg.solver());
    if (r.spectral && !r.spectral->converged) unconverged = true;
    if (cfg.format == "csv") {
      out << index_csv_row(items[i].family, items[i].params, r) << '\n';
    } else {
      if (i > 0) out << '\n';
      out << pretty_report(items[i].name, r);
    }
  }
  if (unconverged && !cfg.allow_unconverged) {
    throw Error(ErrorKind::NotConverged,
                fmt::format("no convergence within {} iterations (use --allow-unconverged to keep "
                            "the estimate)",
                            cfg.max_iter));
  }
  emit(cfg, out.str());
  return kOk;
}

// --- verify ----------------------------------------------------------------

int cmd_verify(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "pretty";
  check_format(cfg, {"pretty", "csv"});
  std::vector<Family> families;
  if (cfg.all) {
    if (!cfg.family.empty()) bad("give either --all or --family, not both");
    families.assign(std::begin(kAllFamilies), std::end(kAllFamilies));
  } else {
    families.push_back(parse_family_flag(cfg));
  }
  const auto variant = cfg.printed_forms ? FormVariant::Printed : FormVariant::Corrected;

  std::ostringstream out;
  if (cfg.format == "csv") out << grid_csv_header() << '\n';
  std::size_t mismatched = 0, rejected = 0;
  for (Family f : families) {
    const ParamGrid fallback = default_grid(f, cfg.quick);
    const auto results = compare_grid(f, grid_from_flags(cfg, f, &fallback), variant);
    std::size_t passed = 0;
    for (const auto& r : results) {
      if (r.passed()) ++passed;
      if (!r.error.empty()) ++rejected;
      if (!r.mismatches.empty()) ++mismatched;
      if (cfg.format == "csv") {
        out << grid_csv_row(r) << '\n';
        continue;
      }
      if (!r.error.empty()) {
        out << fmt::format("INVALID {}: {}\n", label(r.spec), r.error);
      } else if (r.mismatches.empty()) {
        out << fmt::format("PASS {}\n", label(r.spec));
      } else {
        out << fmt::format("FAIL {}\n", label(r.spec));
        for (const auto& m : r.mismatches) {
          out << fmt::format("  {}: graph {} closed {}\n", m.field, m.graph_value, m.closed_value);
          if (!m.citation.empty()) out << fmt::format("  {}\n", m.citation);
        }
      }
    }
    if (cfg.format == "pretty") {
      out << fmt::format("{}: {}/{} pass\n", family_token(f), passed, results.size());
    }
  }
  emit(cfg, out.str());
  if (mismatched > 0) return kVerifyFailed;
  if (rejected > 0) return kBadParams;
  return kOk;
}

// --- sweep -----------------------------------------------------------------

Param default_growing(Family f) {
  if (f == Family::Tuc4) return Param::P;
  if (f == Family::Circumcoronene) return Param::K;
  return Param::Q;
}

int cmd_sweep(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "csv";
  check_format(cfg, {"csv", "pretty"});
  SweepOptions opts{.solver = cfg.solver(), .allow_unconverged = cfg.allow_unconverged};

  std::vector<SweepPlan> plans;
  if (cfg.all) {
    if (!cfg.family.empty()) bad("give either --all or --family, not both");
    plans = default_sweeps();
  } else {
    const Family f = parse_family_flag(cfg);
    if (!in_conjecture_scope(f)) {
      bad(fmt::format("{} is outside the conjecture's scope (tube families and circumcoronene)",
                      family_token(f)));
    }
    const ParamGrid grid = grid_from_flags(cfg, f, nullptr);
    std::optional<Param> growing;
    for (Param p : kParams) {
      if (!uses_param(f, p) || grid.values(p).size() < 2) continue;
      if (growing) bad("only one parameter may take several values in a sweep");
      growing = p;
    }
    const Param g = growing.value_or(default_growing(f));
    SweepPlan plan{.base = FamilySpec{.family = f}, .growing = g, .values = grid.values(g)};
    for (Param p : kParams)
      if (uses_param(f, p) && p != g) plan.base.set(p, grid.values(p).front());
    plans.push_back(std::move(plan));
  }

  std::ostringstream out;
  if (cfg.format == "csv") {
    out << sweep_csv_header() << '\n';
  } else {
    out << fmt::format("{:<28} {:>9} {:>22} {:>22} {:>22} {:>9}\n", "graph", "n", "var", "cs", "gap",
                       "iters");
  }
  for (const auto& plan : plans) {
    for (const auto& r : conjecture_sweep(plan.base, plan.growing, plan.values, opts)) {
      if (cfg.format == "csv") {
        out << sweep_csv_row(r) << '\n';
      } else {
        out << fmt::format("{:<28} {:>9} {:>22.15g} {:>22.15g} {:>22.15g} {:>9}{}\n", label(r.spec),
                           r.n, r.variance_float(), r.cs, r.gap, r.iterations,
                           r.converged ? "" : " (not converged)");
      }
    }
  }
  emit(cfg, out.str());
  return kOk;
}

// --- errata ----------------------------------------------------------------

int cmd_errata(RunConfig cfg) {
  if (cfg.format.empty()) cfg.format = "pretty";
  check_format(cfg, {"pretty", "csv"});
  std::ostringstream out;
  if (cfg.format == "csv") out << "family,field,printed,corrected,justification\n";
  for (const auto& e : errata_ledger()) {
    if (cfg.format == "csv") {
      out << fmt::format("{},{},{},{},{}\n", family_token(e.family), e.field,
                         csv_field(e.printed_form), csv_field(e.corrected_form),
                         csv_field(e.justification));
    } else {
      out << fmt::format("{} {}\n  printed:   {}\n  corrected: {}\n  {}\n", family_token(e.family),
                         e.field, e.printed_form, e.corrected_form, e.justification);
    }
  }
  emit(cfg, out.str());
  return kOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParams:
      return kBadParams;
    case ErrorKind::NotConverged:
      return kNotConverged;
    case ErrorKind::InternalConsistency:
      return kVerifyFailed;
    default:
      return kIoError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Molecular graph irregularity toolkit", "molirr"};
  app.require_subcommand(1, 1);
  app.set_config("--config", "", "key=value file of flag defaults (command-line flags win)");

  RunConfig cfg;
  app.add_option("--family", cfg.family, "graph family token");
  const char* names[] = {"-p,--p", "-q,--q", "-k,--k", "-d,--d", "-n,--n"};
  for (int i = 0; i < 5; ++i) {
    app.add_option(names[i], cfg.values[i], "value, a..b, a,b,c or a:b:step");
  }
  app.add_option("--tol", cfg.tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
  app.add_option("--max-iter", cfg.max_iter, "eigensolver iteration cap")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "output file (default stdout)");
  app.add_option("--in", cfg.in, "edge-list input file");
  app.add_option("--format", cfg.format, "csv | edgelist | pretty");
  app.add_flag("--printed-forms", cfg.printed_forms, "compare against the formulas as printed");
  app.add_flag("--allow-unconverged", cfg.allow_unconverged, "keep estimates that did not converge");
  app.add_flag("--all", cfg.all, "every family (verify) or every default sweep (sweep)");
  app.add_flag("--quick", cfg.quick, "reduced default grids");

  auto* gen = app.add_subcommand("generate", "write the edge list of one graph")->fallthrough();
  auto* ind = app.add_subcommand("indices", "irregularity indices of generated or loaded graphs")->fallthrough();
  auto* ver = app.add_subcommand("verify", "closed forms against graph values over a grid")->fallthrough();
  auto* swp = app.add_subcommand("sweep", "Var - CS gap along one growing parameter")->fallthrough();
  auto* err = app.add_subcommand("errata", "list the known misprints")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::FileError& e) {
    std::cerr << e.what() << '\n';
    return kIoError;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kBadParams;
  }

  try {
    if (gen->parsed()) return cmd_generate(cfg);
    if (ind->parsed()) return cmd_indices(cfg);
    if (ver->parsed()) return cmd_verify(cfg);
    if (swp->parsed()) return cmd_sweep(cfg);
    if (err->parsed()) return cmd_errata(cfg);
  } catch (const Error& e) {
    std::cerr << "molirr: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::bad_alloc&) {
    std::cerr << "molirr: out of memory\n";
    return kBadParams;
  }
  return kBadParams;
}
