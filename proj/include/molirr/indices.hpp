#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "molirr/graph.hpp"
#include "molirr/rational.hpp"
#include "molirr/spectral.hpp"

namespace molirr {

/// Albertson irregularity: sum of |deg(u) - deg(v)| over the edges.
std::int64_t albertson_irr(const Graph& g);

/// Total irregularity, half the sum of |d_u - d_v| over ordered vertex
/// pairs, evaluated on the degree histogram in O(#distinct degrees^2).
std::int64_t total_irr(const DegreeSequence& ds);

/// Exact variance of the degree multiset.
Rational degree_variance(const DegreeSequence& ds);

/// Collatz-Sinogowitz index lambda1 - 2m/n. Throws DisconnectedGraph.
double collatz_sinogowitz(const Graph& g, double lambda1);

/// Number of distinct degrees.
std::size_t t_index(const DegreeSequence& ds);

struct IndexReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::int64_t irr = 0;
  std::int64_t irr_t = 0;
  Rational variance;
  Rational mean_degree;
  std::size_t t_index = 0;
  bool connected = false;
  // Empty when the graph is disconnected (CS is refused) or when the
  // spectral part was not requested.
  std::optional<SpectralResult> spectral;

  std::optional<double> lambda1() const;
  std::optional<double> cs() const;
};

/// All measures of one graph. The spectral part runs only for connected
/// graphs and when with_spectral is set.
IndexReport full_report(const Graph& g, const SolverOptions& options = {},
                        bool with_spectral = true);

/// CSV: family,params,n,m,irr,irr_t,var_num,var_den,var_float,lambda1,cs,t_index
std::string index_csv_header();
std::string index_csv_row(const std::string& family, const std::string& params,
                          const IndexReport& report);

}  // namespace molirr
