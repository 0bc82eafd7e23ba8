#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "molirr/family.hpp"
#include "molirr/formulas.hpp"
#include "molirr/indices.hpp"
#include "molirr/rational.hpp"
#include "molirr/spectral.hpp"

namespace molirr {

/// Values per parameter; only the family's own parameters are read.
struct ParamGrid {
  std::vector<std::int64_t> p, q, k, d, n;

  std::vector<std::int64_t>& values(Param which);
  const std::vector<std::int64_t>& values(Param which) const;
};

/// Cartesian expansion of the family's parameters, in lexicographic order
/// of (p, q), (k, d), k or n.
std::vector<FamilySpec> expand(Family family, const ParamGrid& grid);

/// Full grid: tubes floor..10, dendrimer k in 3..5 and d in 1..4,
/// circumcoronene 1..10, Mycielski 4..30. The quick grid trims each range.
ParamGrid default_grid(Family family, bool quick = false);

enum class FormVariant { Corrected, Printed };

struct FieldMismatch {
  std::string field;
  std::string graph_value;
  std::string closed_value;
  std::string citation;  // errata justification, empty if none applies
};

struct GridPointResult {
  FamilySpec spec;
  std::string error;  // InvalidParams message for a rejected point
  std::optional<IndexReport> measured;
  std::optional<FormulaReport> closed;
  std::vector<FieldMismatch> mismatches;

  bool passed() const { return error.empty() && mismatches.empty(); }
};

/// Exact comparison of irr, irr_t, Var and mean degree between the
/// generated graph and the closed forms, per grid point. Invalid points
/// are recorded, not thrown.
std::vector<GridPointResult> compare_grid(Family family, const ParamGrid& grid,
                                          FormVariant variant = FormVariant::Corrected);

/// CSV, graph value next to closed form per field.
std::string grid_csv_header();
std::string grid_csv_row(const GridPointResult& r);

struct SweepRecord {
  FamilySpec spec;
  std::size_t n = 0;
  std::size_t m = 0;
  Rational variance;
  double lambda1 = 0.0;
  double cs = 0.0;
  double gap = 0.0;  // Var - CS
  std::size_t iterations = 0;
  double residual = 0.0;
  bool converged = false;

  double variance_float() const { return to_double(variance); }
};

struct SweepOptions {
  SolverOptions solver;
  bool allow_unconverged = false;
};

/// Measures Var, lambda1, CS and the gap on an arbitrary connected graph.
SweepRecord measure_gap(const Graph& g, const SolverOptions& solver = {});

/// Families the Var - CS conjecture speaks about: the five tubes and
/// circumcoronene.
bool in_conjecture_scope(Family f) noexcept;

/// Sweeps one parameter of `base` over `values`. Records come back sorted by
/// n. Throws InvalidParams outside the conjecture scope or on an invalid
/// point, and NotConverged for an unconverged point unless allowed.
std::vector<SweepRecord> conjecture_sweep(const FamilySpec& base, Param growing,
                                          std::span<const std::int64_t> values,
                                          const SweepOptions& options = {});

struct SweepPlan {
  FamilySpec base;
  Param growing;
  std::vector<std::int64_t> values;
};

/// Default sweeps: the four row-grown tubes at p = 4 over q in
/// {4, 8, 16, 32, 64}, TUC4 at q = 12 over p in {4, ..., 64} and
/// circumcoronene over k in {2, 5, 10, 20, 40, 80}.
std::vector<SweepPlan> default_sweeps();

/// CSV: family,p,q,k,d,n,m,var_float,lambda1,cs,gap,iterations,converged
std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRecord& r);

}  // namespace molirr
