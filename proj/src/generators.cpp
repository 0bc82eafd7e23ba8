#include "molirr/generators.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <tuple>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

namespace {

using Count = std::size_t;

class TableBuilder {
 public:
  explicit TableBuilder(std::string source) { table_.source = std::move(source); }

  TableBuilder& order(std::int64_t n) { table_.n = static_cast<Count>(n); return *this; }
  TableBuilder& size(std::int64_t m) { table_.m = static_cast<Count>(m); return *this; }
  TableBuilder& vertices(std::int64_t degree, std::int64_t count) {
    if (count > 0) table_.degree_counts[static_cast<Count>(degree)] += static_cast<Count>(count);
    return *this;
  }
  TableBuilder& edges(std::int64_t a, std::int64_t b, std::int64_t count) {
    auto lo = static_cast<Count>(std::min(a, b));
    auto hi = static_cast<Count>(std::max(a, b));
    if (count > 0) table_.edge_classes[{lo, hi}] += static_cast<Count>(count);
    return *this;
  }
  CountTable done() { return std::move(table_); }

 private:
  CountTable table_;
};

std::int64_t ipow(std::int64_t base, std::int64_t exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

class EdgeSink {
 public:
  explicit EdgeSink(std::size_t reserve) { edges_.reserve(reserve); }
  void add(std::int64_t u, std::int64_t v) {
    edges_.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  Graph build(std::int64_t n) const { return Graph::from_edges(static_cast<std::size_t>(n), edges_); }

 private:
  std::vector<Edge> edges_;
};

// Rows of 4p atoms closed into rings; squares hang between consecutive rows
// off the atoms at positions 0 and 1 (mod 4), each bonded two places along.
Graph build_tuc4c8s(std::int64_t p, std::int64_t q) {
  const std::int64_t width = 4 * p;
  auto at = [width](std::int64_t r, std::int64_t c) { return r * width + c; };
  EdgeSink sink(static_cast<std::size_t>(2 * p * (3 * q - 1)));
  for (std::int64_t r = 0; r < q; ++r) {
    for (std::int64_t c = 0; c < width; ++c) {
      sink.add(at(r, c), at(r, (c + 1) % width));
      if (r + 1 < q && c % 4 < 2) sink.add(at(r, c), at(r + 1, c + 2));
    }
  }
  return sink.build(width * q);
}

// Each row is a ring of p squares (corners s0..s3); corner s2 of one square
// bonds to s0 of the next, and s3 bonds down to s1 of the same square one
// row below.
Graph build_tuc4c8r(std::int64_t p, std::int64_t q) {
  auto at = [p](std::int64_t r, std::int64_t b, std::int64_t s) { return (r * p + b) * 4 + s; };
  EdgeSink sink(static_cast<std::size_t>(p * (6 * q - 1)));
  for (std::int64_t r = 0; r < q; ++r) {
    for (std::int64_t b = 0; b < p; ++b) {
      for (std::int64_t s = 0; s < 4; ++s) sink.add(at(r, b, s), at(r, b, (s + 1) % 4));
      sink.add(at(r, b, 2), at(r, (b + 1) % p, 0));
      if (r + 1 < q) sink.add(at(r, b, 3), at(r + 1, b, 1));
    }
  }
  return sink.build(4 * p * q);
}

// Zig-zag polyhex: rings of 2p atoms; row r bonds down from the columns
// with the same parity as r.
Graph build_tuhc6(std::int64_t p, std::int64_t q) {
  const std::int64_t width = 2 * p;
  auto at = [width](std::int64_t r, std::int64_t c) { return r * width + c; };
  EdgeSink sink(static_cast<std::size_t>(p * (3 * q - 1)));
  for (std::int64_t r = 0; r < q; ++r) {
    for (std::int64_t c = 0; c < width; ++c) {
      sink.add(at(r, c), at(r, (c + 1) % width));
      if (r + 1 < q && c % 2 == r % 2) sink.add(at(r, c), at(r + 1, c));
    }
  }
  return sink.build(width * q);
}

// Armchair polyhex: every atom bonds to the one below it; within a row the
// horizontal bonds pair columns (2t, 2t+1) on even rows and (2t+1, 2t+2)
// on odd rows, the last pair wrapping around the tube.
Graph build_tuvc6(std::int64_t p, std::int64_t q) {
  const std::int64_t width = 2 * p;
  auto at = [width](std::int64_t r, std::int64_t c) { return r * width + c; };
  EdgeSink sink(static_cast<std::size_t>(p * (3 * q - 2)));
  for (std::int64_t r = 0; r < q; ++r) {
    const std::int64_t shift = r % 2;
    for (std::int64_t t = 0; t < p; ++t) {
      sink.add(at(r, 2 * t + shift), at(r, (2 * t + shift + 1) % width));
    }
    if (r + 1 < q) {
      for (std::int64_t c = 0; c < width; ++c) sink.add(at(r, c), at(r + 1, c));
    }
  }
  return sink.build(width * q);
}

Graph build_dendrimer(std::int64_t k, std::int64_t d) {
  const std::int64_t n = (k * ipow(k - 1, d) - 2) / (k - 2);
  EdgeSink sink(static_cast<std::size_t>(n - 1));
  // Level l occupies [level_begin, level_end).
  std::int64_t level_begin = 0, level_end = 1, next = 1;
  for (std::int64_t depth = 0; depth < d; ++depth) {
    for (std::int64_t v = level_begin; v < level_end; ++v) {
      const std::int64_t children = depth == 0 ? k : k - 1;
      for (std::int64_t c = 0; c < children; ++c) sink.add(v, next++);
    }
    level_begin = level_end;
    level_end = next;
  }
  return sink.build(n);
}

// Hexagonal cells in axial coordinates (a, b). A corner of the honeycomb is
// a triangle of three mutually adjacent cells: "up" {(a,b), (a+1,b), (a,b+1)}
// or "down" {(a+1,b), (a,b+1), (a+1,b+1)}.
struct Corner {
  std::int64_t a;
  std::int64_t b;
  int down;

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

std::int64_t hex_distance(std::int64_t a, std::int64_t b) {
  return std::max({std::abs(a), std::abs(b), std::abs(a + b)});
}

// 1 + distance of the closest cell touching the corner.
std::int64_t ring_of(const Corner& c) {
  if (c.down) {
    return 1 + std::min({hex_distance(c.a + 1, c.b), hex_distance(c.a, c.b + 1),
                         hex_distance(c.a + 1, c.b + 1)});
  }
  return 1 + std::min({hex_distance(c.a, c.b), hex_distance(c.a + 1, c.b),
                       hex_distance(c.a, c.b + 1)});
}

// Corners of cell (a, b), walking around it.
std::array<Corner, 6> corners_of(std::int64_t a, std::int64_t b) {
  return {{{a, b, 0}, {a - 1, b, 1}, {a - 1, b, 0}, {a - 1, b - 1, 1}, {a, b - 1, 0}, {a, b - 1, 1}}};
}

Graph build_circumcoronene(std::int64_t k) {
  const std::int64_t radius = k - 1;
  std::vector<std::array<Corner, 6>> cells;
  for (std::int64_t a = -radius; a <= radius; ++a) {
    for (std::int64_t b = -radius; b <= radius; ++b) {
      if (hex_distance(a, b) <= radius) cells.push_back(corners_of(a, b));
    }
  }

  std::vector<std::pair<std::int64_t, Corner>> keyed;
  keyed.reserve(cells.size() * 6);
  for (const auto& ring : cells) {
    for (const Corner& c : ring) keyed.emplace_back(ring_of(c), c);
  }
  std::sort(keyed.begin(), keyed.end());
  keyed.erase(std::unique(keyed.begin(), keyed.end()), keyed.end());

  auto id = [&keyed](const Corner& c) {
    auto it = std::lower_bound(keyed.begin(), keyed.end(), std::make_pair(ring_of(c), c));
    return static_cast<std::int64_t>(it - keyed.begin());
  };

  std::vector<Edge> edges;
  edges.reserve(cells.size() * 6);
  for (const auto& ring : cells) {
    for (std::size_t i = 0; i < 6; ++i) {
      auto u = static_cast<Vertex>(id(ring[i]));
      auto v = static_cast<Vertex>(id(ring[(i + 1) % 6]));
      edges.push_back({std::min(u, v), std::max(u, v)});
    }
  }
  // Bonds shared by two hexagons are listed twice.
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::from_edges(keyed.size(), edges);
}

void check_against_table(const FamilySpec& spec, const Graph& g) {
  const CountTable expected = count_table(spec);
  auto fail = [&](std::string_view what) {
    throw Error(ErrorKind::InternalConsistency,
                fmt::format("{}: generated graph disagrees with {} ({})", label(spec),
                            expected.source, what));
  };
  if (g.order() != expected.n) fail("order");
  if (g.size() != expected.m) fail("size");
  if (degree_sequence(g).counts != expected.degree_counts) fail("degree histogram");
  if (edge_class_counts(g) != expected.edge_classes) fail("edge classes");
  if (!is_connected(g)) fail("connectivity");
}

}  // namespace

std::size_t CountTable::imbalanced_edges() const {
  std::size_t total = 0;
  for (const auto& [key, count] : edge_classes) {
    if (key.first != key.second) total += count;
  }
  return total;
}

std::size_t CountTable::balanced_low_edges() const {
  if (degree_counts.empty()) return 0;
  const auto low = degree_counts.begin()->first;
  auto it = edge_classes.find({low, low});
  return it == edge_classes.end() ? 0 : it->second;
}

std::size_t CountTable::balanced_high_edges() const {
  if (degree_counts.empty()) return 0;
  const auto low = degree_counts.begin()->first;
  std::size_t total = 0;
  for (const auto& [key, count] : edge_classes) {
    if (key.first == key.second && key.first != low) total += count;
  }
  return total;
}

CountTable count_table(const FamilySpec& spec) {
  validate(spec);
  const std::int64_t p = spec.p, q = spec.q, k = spec.k, d = spec.d, n = spec.n;
  switch (spec.family) {
    case Family::Tuc4c8s:
      return TableBuilder("TUC4C8(S) theorem")
          .order(4 * p * q).size(2 * p * (3 * q - 1))
          .vertices(2, 4 * p).vertices(3, 4 * p * (q - 1))
          .edges(2, 3, 4 * p).edges(2, 2, 2 * p).edges(3, 3, 2 * p * (3 * q - 4))
          .done();
    case Family::Tuc4c8r:
      return TableBuilder("TUC4C8(R) theorem")
          .order(4 * p * q).size(p * (6 * q - 1))
          .vertices(2, 2 * p).vertices(3, 2 * p * (2 * q - 1))
          .edges(2, 3, 4 * p).edges(3, 3, p * (6 * q - 5))
          .done();
    case Family::Tuc4:
      return TableBuilder("TUC4 theorem")
          .order(p * q).size(q * (2 * p - 1))
          .vertices(3, 2 * q).vertices(4, (p - 2) * q)
          .edges(3, 4, 2 * q).edges(3, 3, 2 * q).edges(4, 4, q * (2 * p - 5))
          .done();
    case Family::Tuhc6:
      return TableBuilder("TUHC6 theorem")
          .order(2 * p * q).size(p * (3 * q - 1))
          .vertices(2, 2 * p).vertices(3, 2 * p * (q - 1))
          .edges(2, 3, 4 * p).edges(3, 3, p * (3 * q - 5))
          .done();
    case Family::Tuvc6:
      return TableBuilder("TUVC6 theorem")
          .order(2 * p * q).size(p * (3 * q - 2))
          .vertices(2, 4 * p).vertices(3, 2 * p * (q - 2))
          .edges(2, 3, 4 * p).edges(2, 2, 2 * p).edges(3, 3, p * (3 * q - 8))
          .done();
    case Family::Dendrimer: {
      const std::int64_t leaves = k * ipow(k - 1, d - 1);
      const std::int64_t internal = (leaves - 2) / (k - 2);
      const std::int64_t order = leaves + internal;
      return TableBuilder("dendrimer theorem")
          .order(order).size(order - 1)
          .vertices(1, leaves).vertices(k, internal)
          .edges(1, k, leaves).edges(k, k, order - 1 - leaves)
          .done();
    }
    case Family::Circumcoronene:
      return TableBuilder("circumcoronene theorem")
          .order(6 * k * k).size(3 * k * (3 * k - 1))
          .vertices(2, 6 * k).vertices(3, 6 * k * (k - 1))
          .edges(2, 2, 6).edges(2, 3, 12 * (k - 1)).edges(3, 3, 3 * (3 * k - 2) * (k - 1))
          .done();
    case Family::MycielskiCycle:
      // originals 4, shadows 3, apex n
      return TableBuilder("Mycielski M(Cn) theorem")
          .order(2 * n + 1).size(4 * n)
          .vertices(4, n).vertices(3, n).vertices(n, 1)
          .edges(4, 4, n).edges(3, 4, 2 * n).edges(3, n, n)
          .done();
    case Family::MycielskiPath:
      // path ends 2, inner originals 4, end shadows 2, inner shadows 3, apex n
      return TableBuilder("Mycielski M(Pn) theorem")
          .order(2 * n + 1).size(4 * n - 3)
          .vertices(2, 4).vertices(3, n - 2).vertices(4, n - 2).vertices(n, 1)
          .edges(2, 4, 4).edges(4, 4, n - 3).edges(2, 3, 2).edges(3, 4, 2 * n - 6)
          .edges(2, n, 2).edges(3, n, n - 2)
          .done();
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  Graph g;
  switch (spec.family) {
    case Family::Tuc4c8s: g = build_tuc4c8s(spec.p, spec.q); break;
    case Family::Tuc4c8r: g = build_tuc4c8r(spec.p, spec.q); break;
    case Family::Tuc4:
      g = cartesian_product(path_graph(static_cast<std::size_t>(spec.p)),
                            cycle_graph(static_cast<std::size_t>(spec.q)));
      break;
    case Family::Tuhc6: g = build_tuhc6(spec.p, spec.q); break;
    case Family::Tuvc6: g = build_tuvc6(spec.p, spec.q); break;
    case Family::Dendrimer: g = build_dendrimer(spec.k, spec.d); break;
    case Family::Circumcoronene: g = build_circumcoronene(spec.k); break;
    case Family::MycielskiCycle: g = mycielski(cycle_graph(static_cast<std::size_t>(spec.n))); break;
    case Family::MycielskiPath: g = mycielski(path_graph(static_cast<std::size_t>(spec.n))); break;
  }
  check_against_table(spec, g);
  return g;
}

}  // namespace molirr
