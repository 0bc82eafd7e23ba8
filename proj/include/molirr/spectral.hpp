#pragma once

#include <cstddef>

#include "molirr/graph.hpp"

namespace molirr {

struct SolverOptions {
  double tol = 1e-10;
  std::size_t max_iter = 5'000'000;
};

struct SpectralResult {
  double lambda1 = 0.0;
  std::size_t iterations = 0;
  // max_v |(A x)_v - lambda1 x_v| for the final iterate with max_v |x_v| = 1.
  double residual = 0.0;
  bool converged = false;
};

/// Spectral radius of the adjacency matrix by power iteration on A + I,
/// started from the all-ones vector. The unit shift makes the iteration
/// converge on bipartite graphs, where A alone has -lambda1 in its spectrum.
///
/// Stops once consecutive Rayleigh quotients differ by less than tol and the
/// residual is below tol * max(1, lambda1). Running out of iterations is
/// not an exception: the best estimate comes back with converged == false.
///
/// Throws DisconnectedGraph, EmptyGraph, or InvalidParams for tol <= 0.
SpectralResult lambda1_power(const Graph& g, const SolverOptions& options = {});

enum class OracleFamily { Cycle, Path, Complete };

/// Closed-form spectral radius: 2 for C_n (n >= 3), 2cos(pi/(n+1)) for P_n,
/// n - 1 for K_n.
double oracle_lambda1(OracleFamily family, std::size_t n);

}  // namespace molirr
