#include "molirr/verify.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "molirr/error.hpp"
#include "molirr/generators.hpp"

namespace molirr {

namespace {

constexpr Param kParamOrder[] = {Param::P, Param::Q, Param::K, Param::D, Param::N};

std::vector<std::int64_t> range(std::int64_t first, std::int64_t last) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = first; v <= last; ++v) out.push_back(v);
  return out;
}

std::string citation_for(Family family, const std::string& field) {
  for (const ErrataEntry& e : errata_ledger()) {
    if (e.family == family && e.field == field) {
      return fmt::format("errata: printed {}; corrected {}; {}", e.printed_form, e.corrected_form,
                         e.justification);
    }
  }
  return {};
}

}  // namespace

std::vector<std::int64_t>& ParamGrid::values(Param which) {
  switch (which) {
    case Param::P: return p;
    case Param::Q: return q;
    case Param::K: return k;
    case Param::D: return d;
    case Param::N: return n;
  }
  return p;
}

const std::vector<std::int64_t>& ParamGrid::values(Param which) const {
  return const_cast<ParamGrid&>(*this).values(which);
}

std::vector<FamilySpec> expand(Family family, const ParamGrid& grid) {
  std::vector<FamilySpec> specs{FamilySpec{.family = family}};
  for (Param param : kParamOrder) {
    if (!uses_param(family, param)) continue;
    std::vector<FamilySpec> next;
    for (const FamilySpec& base : specs) {
      for (std::int64_t v : grid.values(param)) {
        FamilySpec s = base;
        s.set(param, v);
        next.push_back(s);
      }
    }
    specs = std::move(next);
  }
  return specs;
}

ParamGrid default_grid(Family family, bool quick) {
  ParamGrid grid;
  switch (family) {
    case Family::Dendrimer:
      grid.k = range(3, 5);
      grid.d = quick ? range(1, 3) : range(1, 4);
      break;
    case Family::Circumcoronene:
      grid.k = range(1, quick ? 5 : 10);
      break;
    case Family::MycielskiCycle:
    case Family::MycielskiPath:
      grid.n = range(4, quick ? 12 : 30);
      break;
    default:
      grid.p = range(param_floor(family, Param::P), quick ? 6 : 10);
      grid.q = range(param_floor(family, Param::Q), quick ? 6 : 10);
      break;
  }
  return grid;
}

std::vector<GridPointResult> compare_grid(Family family, const ParamGrid& grid,
                                          FormVariant variant) {
  std::vector<GridPointResult> results;
  for (const FamilySpec& spec : expand(family, grid)) {
    GridPointResult point;
    point.spec = spec;
    try {
      validate(spec);
    } catch (const Error& e) {
      point.error = e.what();
      results.push_back(std::move(point));
      continue;
    }
    point.measured = full_report(generate(spec), {}, /*with_spectral=*/false);
    point.closed = closed_form(spec);

    const IndexReport& g = *point.measured;
    const ClosedValues c =
        variant == FormVariant::Printed ? point.closed->printed : point.closed->corrected();
    auto compare = [&](const char* field, const Rational& graph_value, const Rational& closed) {
      if (graph_value == closed) return;
      point.mismatches.push_back({field, to_string(graph_value), to_string(closed),
                                  citation_for(family, field)});
    };
    compare("irr", Rational(g.irr), c.irr);
    compare("irr_t", Rational(g.irr_t), c.irr_t);
    compare("variance", g.variance, c.variance);
    compare("mean_degree", g.mean_degree, c.mean_degree);
    results.push_back(std::move(point));
  }
  return results;
}

std::string grid_csv_header() {
  return "family,params,irr,irr_closed,irr_t,irr_t_closed,var,var_closed,mean,mean_closed,pass";
}

std::string grid_csv_row(const GridPointResult& r) {
  if (!r.measured || !r.closed) {
    return fmt::format("{},{},,,,,,,,,0", family_token(r.spec.family), params_string(r.spec));
  }
  const IndexReport& g = *r.measured;
  const FormulaReport& c = *r.closed;
  return fmt::format("{},{},{},{},{},{},{},{},{},{},{}", family_token(r.spec.family),
                     params_string(r.spec), g.irr, c.irr, g.irr_t, c.irr_t, to_string(g.variance),
                     to_string(c.variance), to_string(g.mean_degree), to_string(c.mean_degree),
                     r.passed() ? 1 : 0);
}

SweepRecord measure_gap(const Graph& g, const SolverOptions& solver) {
  const DegreeSequence ds = degree_sequence(g);
  const SpectralResult spectral = lambda1_power(g, solver);
  SweepRecord r;
  r.n = g.order();
  r.m = g.size();
  r.variance = degree_variance(ds);
  r.lambda1 = spectral.lambda1;
  r.cs = collatz_sinogowitz(g, spectral.lambda1);
  r.gap = to_double(r.variance) - r.cs;
  r.iterations = spectral.iterations;
  r.residual = spectral.residual;
  r.converged = spectral.converged;
  return r;
}

bool in_conjecture_scope(Family f) noexcept { return is_tube(f) || f == Family::Circumcoronene; }

std::vector<SweepRecord> conjecture_sweep(const FamilySpec& base, Param growing,
                                          std::span<const std::int64_t> values,
                                          const SweepOptions& options) {
  if (!in_conjecture_scope(base.family)) {
    throw Error(ErrorKind::InvalidParams,
                fmt::format("{} is outside the Var - CS conjecture scope", family_token(base.family)));
  }
  if (!uses_param(base.family, growing)) {
    throw Error(ErrorKind::InvalidParams, fmt::format("{} has no parameter {}",
                                                      family_token(base.family), param_name(growing)));
  }
  std::vector<SweepRecord> records;
  for (std::int64_t value : values) {
    FamilySpec spec = base;
    spec.set(growing, value);
    SweepRecord r = measure_gap(generate(spec), options.solver);
    r.spec = spec;
    if (!r.converged && !options.allow_unconverged) {
      throw Error(ErrorKind::NotConverged,
                  fmt::format("{} after {} iterations (residual {:.3g})", label(spec),
                              r.iterations, r.residual));
    }
    records.push_back(r);
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const SweepRecord& a, const SweepRecord& b) { return a.n < b.n; });
  return records;
}

std::vector<SweepPlan> default_sweeps() {
  const std::vector<std::int64_t> rows{4, 8, 16, 32, 64};
  return {
      {tube(Family::Tuc4c8s, 4, 0), Param::Q, rows},
      {tube(Family::Tuc4c8r, 4, 0), Param::Q, rows},
      {tube(Family::Tuhc6, 4, 0), Param::Q, rows},
      {tube(Family::Tuvc6, 4, 0), Param::Q, rows},
      {tube(Family::Tuc4, 0, 12), Param::P, {4, 8, 16, 32, 64}},
      {circumcoronene(0), Param::K, {2, 5, 10, 20, 40, 80}},
  };
}

std::string sweep_csv_header() {
  return "family,p,q,k,d,n,m,var_float,lambda1,cs,gap,iterations,converged";
}

std::string sweep_csv_row(const SweepRecord& r) {
  auto param = [&r](Param which) {
    return uses_param(r.spec.family, which) ? std::to_string(r.spec.get(which)) : std::string();
  };
  return fmt::format("{},{},{},{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{},{}",
                     family_token(r.spec.family), param(Param::P), param(Param::Q), param(Param::K),
                     param(Param::D), r.n, r.m, r.variance_float(), r.lambda1, r.cs, r.gap,
                     r.iterations, r.converged ? 1 : 0);
}

}  // namespace molirr
