#pragma once

#include <cstddef>
#include <string>

#include "molirr/family.hpp"
#include "molirr/graph.hpp"

namespace molirr {

/// Closed-form structure of one family instance, as counted in the proofs:
/// order, size, the degree histogram and the histogram of edges by the
/// degrees of their endpoints.
struct CountTable {
  std::size_t n = 0;
  std::size_t m = 0;
  std::map<std::size_t, std::size_t> degree_counts;
  EdgeClassCounts edge_classes;
  std::string source;

  /// Edges whose endpoints differ in degree (imbalance > 0).
  std::size_t imbalanced_edges() const;
  /// Balanced edges between vertices of the smallest degree.
  std::size_t balanced_low_edges() const;
  /// Balanced edges between vertices of any larger degree.
  std::size_t balanced_high_edges() const;
};

CountTable count_table(const FamilySpec& spec);

/// Builds the molecular graph of a family instance. Labeling:
///
///  * tubes: row-major, row r of width w occupies r*w .. r*w + w - 1;
///  * tuc4c8r: inside a row, square b holds 4b .. 4b + 3;
///  * tuc4: vertex (i on the path, j on the cycle) is i*q + j;
///  * dendrimer: breadth-first from the root 0, children consecutive;
///  * circumcoronene: by ring (innermost first), then by corner key;
///  * Mycielski: as mycielski().
///
/// The result is checked against count_table() and connectivity before
/// return; a disagreement throws InternalConsistency.
Graph generate(const FamilySpec& spec);

}  // namespace molirr
