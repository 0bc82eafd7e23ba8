#include "molirr/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

namespace {

// Diagonal shift applied to A. Any positive value makes A + sI primitive on
// a connected graph; 1 keeps the spectrum closest to that of A.
constexpr double kShift = 1.0;

void check_perron_bounds(const Graph& g, const SpectralResult& r) {
  const double n = static_cast<double>(g.order());
  const double mean = 2.0 * static_cast<double>(g.size()) / n;
  const double max_degree = static_cast<double>(g.max_degree());
  // The Rayleigh quotient error is bounded by the 2-norm residual, which is
  // at most sqrt(n) times the reported max-norm residual.
  const double slack = 1e-9 * std::max(1.0, max_degree) + std::sqrt(n) * r.residual;
  if (r.lambda1 < mean - slack || r.lambda1 > max_degree + slack) {
    throw Error(ErrorKind::InternalConsistency,
                fmt::format("lambda1 = {} outside Perron bounds [{}, {}]", r.lambda1, mean,
                            max_degree));
  }
}

}  // namespace

SpectralResult lambda1_power(const Graph& g, const SolverOptions& options) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "spectral radius of an empty graph");
  if (!(options.tol > 0.0)) {
    throw Error(ErrorKind::InvalidParams, fmt::format("tolerance must be positive, got {}", options.tol));
  }
  if (!is_connected(g)) {
    throw Error(ErrorKind::DisconnectedGraph, "the Perron root needs a connected graph");
  }

  std::vector<double> x(n, 1.0);
  std::vector<double> y(n);
  double x_norm2 = static_cast<double>(n);
  double previous = std::numeric_limits<double>::quiet_NaN();
  SpectralResult result;

  for (std::size_t it = 1; it <= options.max_iter; ++it) {
    // y = (A + sI) x, with x . y and max |y| on the fly.
    double xy = 0.0;
    double y_max = 0.0;
    for (Vertex v = 0; v < n; ++v) {
      double sum = kShift * x[v];
      for (Vertex w : g.neighbors(v)) sum += x[w];
      y[v] = sum;
      xy += x[v] * sum;
      y_max = std::max(y_max, std::abs(sum));
    }
    const double rayleigh = xy / x_norm2;

    // Residual of the current (max-normalized) iterate, then normalize y
    // into the next iterate.
    double residual = 0.0;
    double next_norm2 = 0.0;
    const double scale = 1.0 / y_max;
    for (Vertex v = 0; v < n; ++v) {
      residual = std::max(residual, std::abs(y[v] - rayleigh * x[v]));
      const double next = y[v] * scale;
      x[v] = next;
      next_norm2 += next * next;
    }

    result.lambda1 = rayleigh - kShift;
    result.iterations = it;
    result.residual = residual;
    if (std::abs(rayleigh - previous) < options.tol &&
        residual < options.tol * std::max(1.0, result.lambda1)) {
      result.converged = true;
      check_perron_bounds(g, result);
      return result;
    }
    previous = rayleigh;
    x_norm2 = next_norm2;
  }
  return result;
}

double oracle_lambda1(OracleFamily family, std::size_t n) {
  switch (family) {
    case OracleFamily::Cycle:
      if (n < 3) throw Error(ErrorKind::InvalidParams, "cycle needs n >= 3");
      return 2.0;
    case OracleFamily::Path:
      if (n < 1) throw Error(ErrorKind::InvalidParams, "path needs n >= 1");
      return 2.0 * std::cos(std::numbers::pi / static_cast<double>(n + 1));
    case OracleFamily::Complete:
      if (n < 1) throw Error(ErrorKind::InvalidParams, "complete graph needs n >= 1");
      return static_cast<double>(n - 1);
  }
  throw Error(ErrorKind::InvalidParams, "unknown oracle family");
}

}  // namespace molirr
