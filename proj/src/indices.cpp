#include "molirr/indices.hpp"

#include <cstdlib>
#include <vector>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

std::int64_t albertson_irr(const Graph& g) {
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto du = static_cast<std::int64_t>(g.degree(u));
    for (Vertex v : g.neighbors(u)) {
      if (u < v) total += std::abs(du - static_cast<std::int64_t>(g.degree(v)));
    }
  }
  return total;
}

std::int64_t total_irr(const DegreeSequence& ds) {
  std::vector<std::pair<std::int64_t, std::int64_t>> classes;
  for (const auto& [degree, count] : ds.counts) {
    classes.emplace_back(static_cast<std::int64_t>(degree), static_cast<std::int64_t>(count));
  }
  std::int64_t total = 0;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      total += classes[i].second * classes[j].second * (classes[j].first - classes[i].first);
    }
  }
  return total;
}

Rational degree_variance(const DegreeSequence& ds) {
  if (ds.n == 0) throw Error(ErrorKind::EmptyGraph, "variance of an empty degree sequence");
  std::int64_t sum_sq = 0;
  for (const auto& [degree, count] : ds.counts) {
    const auto d = static_cast<std::int64_t>(degree);
    sum_sq += static_cast<std::int64_t>(count) * d * d;
  }
  const auto n = static_cast<std::int64_t>(ds.n);
  const auto sum = static_cast<std::int64_t>(ds.degree_sum);
  // (1/n) sum d^2 - (1/n^2) (sum d)^2
  return Rational(sum_sq, n) - Rational(sum, n) * Rational(sum, n);
}

double collatz_sinogowitz(const Graph& g, double lambda1) {
  if (g.order() == 0) throw Error(ErrorKind::EmptyGraph, "CS of an empty graph");
  if (!is_connected(g)) throw Error(ErrorKind::DisconnectedGraph, "CS needs a connected graph");
  return lambda1 - 2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order());
}

std::size_t t_index(const DegreeSequence& ds) { return ds.counts.size(); }

std::optional<double> IndexReport::lambda1() const {
  if (!spectral) return std::nullopt;
  return spectral->lambda1;
}

std::optional<double> IndexReport::cs() const {
  if (!spectral) return std::nullopt;
  return spectral->lambda1 - to_double(mean_degree);
}

IndexReport full_report(const Graph& g, const SolverOptions& options, bool with_spectral) {
  const DegreeSequence ds = degree_sequence(g);
  IndexReport r;
  r.n = g.order();
  r.m = g.size();
  r.irr = albertson_irr(g);
  r.irr_t = total_irr(ds);
  r.variance = degree_variance(ds);
  r.mean_degree = ds.mean_degree;
  r.t_index = t_index(ds);
  r.connected = is_connected(g);
  if (with_spectral && r.connected) r.spectral = lambda1_power(g, options);
  return r;
}

std::string index_csv_header() {
  return "family,params,n,m,irr,irr_t,var_num,var_den,var_float,lambda1,cs,t_index";
}

std::string index_csv_row(const std::string& family, const std::string& params,
                          const IndexReport& r) {
  const auto lambda1 = r.lambda1();
  const auto cs = r.cs();
  return fmt::format("{},{},{},{},{},{},{},{},{:.17g},{},{},{}", family, params, r.n, r.m, r.irr,
                     r.irr_t, r.variance.numerator(), r.variance.denominator(),
                     to_double(r.variance), lambda1 ? fmt::format("{:.17g}", *lambda1) : "",
                     cs ? fmt::format("{:.17g}", *cs) : "", r.t_index);
}

}  // namespace molirr
