// Acceptance run: one PASS/FAIL line per criterion, details indented below.
//
//   acceptance [--cli <path to molirr>] [--scratch <dir>] [--full-calibration]

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "molirr/error.hpp"
#include "molirr/formulas.hpp"
#include "molirr/generators.hpp"
#include "molirr/indices.hpp"
#include "molirr/spectral.hpp"
#include "molirr/verify.hpp"

using namespace molirr;

namespace {

// Pinned tolerances and budgets.
constexpr double kOracleTol = 1e-9;
constexpr double kPIndependenceTol = 1e-6;
constexpr double kEquivalenceBudgetSeconds = 30.0;
constexpr double kSweepBudgetSeconds = 60.0;
constexpr double kGapShrinkFactor = 0.5;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(std::string note) {
    pass = false;
    notes.push_back(std::move(note));
  }
  void note(std::string n) { notes.push_back(std::move(n)); }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<FamilySpec> default_points() {
  std::vector<FamilySpec> all;
  for (Family f : kAllFamilies) {
    const auto pts = expand(f, default_grid(f));
    all.insert(all.end(), pts.begin(), pts.end());
  }
  return all;
}

std::int64_t pairwise_total_irr(const Graph& g) {
  std::int64_t sum = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      sum += std::llabs(static_cast<long long>(g.degree(u)) - static_cast<long long>(g.degree(v)));
  return sum;
}

// --- 1 ---------------------------------------------------------------------

Outcome closed_form_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t points = 0, exact = 0;
  for (Family f : kAllFamilies) {
    for (const auto& r : compare_grid(f, default_grid(f))) {
      ++points;
      if (r.passed()) {
        ++exact;
        continue;
      }
      std::string why = r.error;
      for (const auto& m : r.mismatches)
        why += fmt::format("{} graph {} closed {}; ", m.field, m.graph_value, m.closed_value);
      o.fail(fmt::format("{}: {}", label(r.spec), why));
    }
  }
  const double secs = seconds_since(t0);
  o.note(fmt::format("{}/{} grid points exact in {:.1f} s (budget {:.0f} s)", exact, points, secs,
                     kEquivalenceBudgetSeconds));
  if (secs >= kEquivalenceBudgetSeconds) o.fail("over the time budget");
  return o;
}

// --- 2 ---------------------------------------------------------------------

Outcome published_spot_values() {
  Outcome o;
  auto expect = [&](const std::string& what, const Rational& measured, const Rational& published,
                    const Rational& printed_formula) {
    if (measured == published) return;
    o.fail(fmt::format("{}: graph gives {}, published value {} (printed formula evaluates to {})", what,
                       to_string(measured), to_string(published), to_string(printed_formula)));
  };
  auto report_of = [](const FamilySpec& s) { return full_report(generate(s), {}, false); };

  std::size_t tubes = 0;
  for (const auto& s : expand(Family::Tuc4c8s, default_grid(Family::Tuc4c8s))) {
    ++tubes;
    expect(fmt::format("irr({})", label(s)), Rational(report_of(s).irr), Rational(4 * s.p),
           closed_form(s).printed.irr);
  }
  o.note(fmt::format("irr(tuc4c8s[p,q]) = 4p checked on {} grid points", tubes));

  const auto vc = tube(Family::Tuvc6, 4, 9);
  expect("irr_t(tuvc6[4,9])", Rational(report_of(vc).irr_t), Rational(448), closed_form(vc).printed.irr_t);

  const auto h2 = circumcoronene(2);
  expect("Var(H2)", report_of(h2).variance, Rational(1, 4), closed_form(h2).printed.variance);

  const auto mc = mycielski_cycle(8);
  const auto rc = report_of(mc);
  const auto pc = closed_form(mc).printed;
  expect("irr(M(C8))", Rational(rc.irr), Rational(56), pc.irr);
  expect("irr_t(M(C8))", Rational(rc.irr_t), Rational(136), pc.irr_t);
  expect("Var(M(C8))", rc.variance, Rational(392, 289), pc.variance);

  const auto mp = mycielski_path(8);
  const auto rp = report_of(mp);
  const auto pp = closed_form(mp).printed;
  expect("irr(M(P8))", Rational(rp.irr), Rational(62), pp.irr);
  expect("irr_t(M(P8))", Rational(rp.irr_t), Rational(186), pp.irr_t);
  expect("Var(M(P8))", rp.variance, Rational(546, 289), pp.variance);
  return o;
}

// --- 3 ---------------------------------------------------------------------

Outcome errata_by_brute_force() {
  Outcome o;
  struct Case {
    std::int64_t k, d, oracle;
  };
  for (const Case c : {Case{3, 1, 6}, Case{3, 2, 48}}) {
    const auto s = dendrimer(c.k, c.d);
    const auto brute = pairwise_total_irr(generate(s));
    const auto r = closed_form(s);
    if (brute != c.oracle) o.fail(fmt::format("pairwise irr_t(T{},{}) = {}, expected {}", c.k, c.d, brute, c.oracle));
    if (r.printed.irr_t == Rational(brute))
      o.fail(fmt::format("printed irr_t(T{},{}) agrees with the oracle", c.k, c.d));
    if (Rational(r.irr_t) != Rational(brute))
      o.fail(fmt::format("corrected irr_t(T{},{}) = {}, oracle {}", c.k, c.d, r.irr_t, brute));
    o.note(fmt::format("T{},{}: oracle {}, printed {}", c.k, c.d, brute, to_string(r.printed.irr_t)));
  }

  struct Mean {
    Family f;
    Rational corrected, printed;
  };
  for (const Mean m : {Mean{Family::Tuc4c8s, Rational(11, 4), Rational(13, 4)},
                       Mean{Family::Tuc4c8r, Rational(23, 8), Rational(25, 8)}}) {
    const auto s = tube(m.f, 4, 4);
    const auto g = generate(s);
    const Rational two_m_over_n(2 * static_cast<std::int64_t>(g.size()), static_cast<std::int64_t>(g.order()));
    const auto r = closed_form(s);
    if (two_m_over_n != m.corrected) o.fail(fmt::format("2m/n of {} = {}", label(s), to_string(two_m_over_n)));
    if (r.printed.mean_degree != m.printed || r.printed.mean_degree == two_m_over_n)
      o.fail(fmt::format("printed mean degree of {} = {}", label(s), to_string(r.printed.mean_degree)));
    if (r.mean_degree != two_m_over_n) o.fail(fmt::format("corrected mean degree of {}", label(s)));
    o.note(fmt::format("{}: 2m/n = {}, printed {}", label(s), to_string(two_m_over_n),
                       to_string(r.printed.mean_degree)));
  }
  return o;
}

// --- 4 ---------------------------------------------------------------------

Outcome calibration(bool full) {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t solves = 0;
  double worst = 0.0;

  auto run = [&](const std::string& name, const Graph& g, double expected) {
    const auto r = lambda1_power(g);
    ++solves;
    if (!r.converged) {
      o.fail(fmt::format("{} did not converge in {} iterations", name, r.iterations));
      return;
    }
    const SolverOptions defaults;
    if (!(r.residual < defaults.tol * std::max(1.0, r.lambda1)))
      o.fail(fmt::format("{} residual {:.3g} breaks the contract", name, r.residual));
    const double err = std::abs(r.lambda1 - expected);
    worst = std::max(worst, err);
    if (!(err <= kOracleTol)) o.fail(fmt::format("{}: |err| = {:.3g}", name, err));
  };

  std::vector<std::size_t> cycles;
  for (std::size_t n = 3; n <= 200; ++n) cycles.push_back(n);
  for (std::size_t n : {500, 1000, 5000, 10000}) cycles.push_back(n);
  for (auto n : cycles) run(fmt::format("C{}", n), cycle_graph(n), oracle_lambda1(OracleFamily::Cycle, n));

  for (std::size_t n : {1, 2, 3, 4, 5, 10, 50, 100, 500, 1000, 5000, 10000})
    run(fmt::format("K{}", n), complete_graph(n), oracle_lambda1(OracleFamily::Complete, n));

  std::vector<std::size_t> paths;
  if (full) {
    for (std::size_t n = 2; n <= 2000; ++n) paths.push_back(n);
  } else {
    for (std::size_t n = 2; n <= 150; ++n) paths.push_back(n);
    for (std::size_t n = 200; n <= 2000; n += 100) paths.push_back(n);
  }
  for (auto n : paths) run(fmt::format("P{}", n), path_graph(n), oracle_lambda1(OracleFamily::Path, n));

  // bipartite tubes: converged, contract and Perron sandwich
  std::size_t tubes = 0;
  for (const auto& s : default_points()) {
    if (!is_tube(s.family)) continue;
    const auto g = generate(s);
    const auto r = lambda1_power(g);
    ++tubes;
    const double mean = 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
    if (!r.converged || !(r.residual < SolverOptions{}.tol * std::max(1.0, r.lambda1)) ||
        r.lambda1 < mean - kOracleTol || r.lambda1 > static_cast<double>(g.max_degree()) + kOracleTol)
      o.fail(fmt::format("{}: converged={} lambda1={:.12g}", label(s), r.converged, r.lambda1));
  }

  o.note(fmt::format("{} oracle solves (paths: {}), worst |err| {:.2e}, {} tube solves, {:.1f} s", solves,
                     full ? "every n in 2..2000" : "2..150 and 200..2000 step 100", worst, tubes,
                     seconds_since(t0)));
  return o;
}

// --- 5 ---------------------------------------------------------------------

Outcome conjecture_sweeps() {
  Outcome o;
  const auto t0 = Clock::now();
  for (const auto& plan : default_sweeps()) {
    const auto rs = conjecture_sweep(plan.base, plan.growing, plan.values);
    std::string series;
    bool monotone = true;
    for (std::size_t i = 0; i < rs.size(); ++i) {
      series += fmt::format("{}{:.3e}", i ? " " : "", std::abs(rs[i].gap));
      if (!std::isfinite(rs[i].gap)) monotone = false;
      if (i > 0 && !(std::abs(rs[i].gap) < std::abs(rs[i - 1].gap))) monotone = false;
    }
    const auto name = std::string(family_token(plan.base.family));
    if (!monotone) o.fail(fmt::format("{}: |gap| not decreasing: {}", name, series));
    if (rs.empty() || !(std::abs(rs.back().gap) < kGapShrinkFactor * std::abs(rs.front().gap)))
      o.fail(fmt::format("{}: last |gap| not below half the first", name));
    o.note(fmt::format("{} {}: {}", name, param_name(plan.growing), series));
  }
  const double secs = seconds_since(t0);
  o.note(fmt::format("{:.1f} s (budget {:.0f} s)", secs, kSweepBudgetSeconds));
  if (secs >= kSweepBudgetSeconds) o.fail("over the time budget");
  return o;
}

// --- 6 ---------------------------------------------------------------------

Outcome p_independence() {
  Outcome o;
  for (std::int64_t q : {4, 8, 16}) {
    const double a = lambda1_power(generate(tube(Family::Tuc4c8s, 4, q))).lambda1;
    const double b = lambda1_power(generate(tube(Family::Tuc4c8s, 12, q))).lambda1;
    const double diff = std::abs(a - b);
    o.note(fmt::format("q={}: |lambda1(p=4) - lambda1(p=12)| = {:.2e}", q, diff));
    if (!(diff < kPIndependenceTol)) o.fail(fmt::format("q={} differs by {:.3g}", q, diff));
  }
  return o;
}

// --- 7 ---------------------------------------------------------------------

Outcome structural_counts() {
  Outcome o;
  std::size_t points = 0;
  for (const auto& s : default_points()) {
    ++points;
    const auto t = count_table(s);
    const auto g = generate(s);
    const auto ds = degree_sequence(g);
    const auto classes = edge_class_counts(g);
    auto sum_where = [&](auto pred) {
      std::size_t c = 0;
      for (const auto& [key, count] : classes)
        if (pred(key.first, key.second)) c += count;
      return c;
    };
    const std::size_t lo = ds.counts.begin()->first;
    const bool ok = g.order() == t.n && g.size() == t.m && ds.counts == t.degree_counts &&
                    classes == t.edge_classes &&
                    sum_where([](auto a, auto b) { return a != b; }) == t.imbalanced_edges() &&
                    sum_where([lo](auto a, auto b) { return a == b && a == lo; }) == t.balanced_low_edges() &&
                    sum_where([lo](auto a, auto b) { return a == b && a != lo; }) == t.balanced_high_edges();
    if (!ok) o.fail(fmt::format("{} does not match its count table", label(s)));
    if (!is_connected(g)) o.fail(fmt::format("{} is disconnected", label(s)));
  }
  o.note(fmt::format("{} grid points", points));
  return o;
}

// --- 8 ---------------------------------------------------------------------

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Outcome determinism(const std::string& cli, const std::filesystem::path& scratch) {
  Outcome o;
  if (cli.empty()) {
    o.fail("no --cli path given");
    return o;
  }
  std::filesystem::create_directories(scratch);
  const std::vector<std::string> commands{
      "generate --family tuc4c8s -p 4 -q 4",
      "generate --family circumcoronene -k 7",
      "generate --family mpath -n 12 --format pretty",
      "indices --family tuc4c8r -p 3..5 -q 3..5 --format csv",
      "indices --family dendrimer -k 3 -d 1..4",
      "verify --all --quick --format csv",
      "verify --family dendrimer --printed-forms",
      "sweep --family tuc4c8s -p 4 -q 4,8,16",
      "sweep --family circumcoronene -k 2:10:2",
      "errata --format csv",
  };
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string first;
    int first_status = 0;
    for (int run = 0; run < 2; ++run) {
      const auto out = scratch / fmt::format("run{}_{}.out", i, run);
      std::filesystem::remove(out);
      const auto cmd = fmt::format("\"{}\" {} --out \"{}\" > /dev/null 2>&1", cli, commands[i], out.string());
      const int status = std::system(cmd.c_str());
      const auto text = slurp(out);
      if (text.empty()) o.fail(fmt::format("'{}' wrote nothing", commands[i]));
      if (run == 0) {
        first = text;
        first_status = status;
      } else if (text != first || status != first_status) {
        o.fail(fmt::format("'{}' differs between runs", commands[i]));
      }
    }
  }
  o.note(fmt::format("{} commands run twice, outputs compared byte for byte", commands.size()));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::filesystem::path scratch = std::filesystem::temp_directory_path() / "molirr_acceptance";
  bool full = false;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--cli" && i + 1 < argc) cli = argv[++i];
    else if (a == "--scratch" && i + 1 < argc) scratch = argv[++i];
    else if (a == "--full-calibration") full = true;
    else {
      std::cerr << "usage: acceptance [--cli path] [--scratch dir] [--full-calibration]\n";
      return 2;
    }
  }

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "closed forms equal graph values over the default grids", closed_form_equivalence},
      {2, "published spot values", published_spot_values},
      {3, "errata confirmed by brute force", errata_by_brute_force},
      {4, "eigensolver calibration", [full] { return calibration(full); }},
      {5, "Var - CS gap shrinks on every default sweep", conjecture_sweeps},
      {6, "lambda1 of tuc4c8s independent of p", p_independence},
      {7, "generated graphs match count tables and are connected", structural_counts},
      {8, "CLI output is deterministic", [&] { return determinism(cli, scratch); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(fmt::format("threw: {}", e.what()));
    }
    if (!o.pass) ++failed;
    std::cout << fmt::format("{} {} {}\n", o.pass ? "PASS" : "FAIL", c.id, c.name);
    for (const auto& n : o.notes) std::cout << "     " << n << '\n';
    std::cout.flush();
  }
  std::cout << fmt::format("{}/{} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
