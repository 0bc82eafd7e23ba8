#include "molirr/graph.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "molirr/error.hpp"

namespace molirr {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorKind::VertexOutOfRange, fmt::format("{} vertices exceed the index type", n));
  }
  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorKind::VertexOutOfRange,
                  fmt::format("edge ({}, {}) on {} vertices", e.u, e.v, n));
    }
    if (e.u == e.v) throw Error(ErrorKind::SelfLoop, fmt::format("edge ({0}, {0})", e.u));
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];

  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw Error(ErrorKind::DuplicateEdge, fmt::format("edge ({}, {}) repeated", v, *dup));
    }
  }
  g.edge_count_ = edges.size();
  return g;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v) {
    best = std::max(best, offsets_[v + 1] - offsets_[v]);
  }
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeSequence DegreeSequence::from_counts(std::map<std::size_t, std::size_t> counts) {
  std::erase_if(counts, [](const auto& kv) { return kv.second == 0; });
  DegreeSequence ds;
  ds.counts = std::move(counts);
  for (const auto& [degree, count] : ds.counts) {
    ds.n += count;
    ds.degree_sum += degree * count;
    ds.max_degree = std::max(ds.max_degree, degree);
  }
  if (ds.n == 0) throw Error(ErrorKind::EmptyGraph, "degree sequence of an empty graph");
  ds.mean_degree = Rational(static_cast<std::int64_t>(ds.degree_sum),
                            static_cast<std::int64_t>(ds.n));
  return ds;
}

DegreeSequence degree_sequence(const Graph& g) {
  std::map<std::size_t, std::size_t> counts;
  for (Vertex v = 0; v < g.order(); ++v) ++counts[g.degree(v)];
  return DegreeSequence::from_counts(std::move(counts));
}

EdgeClassCounts edge_class_counts(const Graph& g) {
  EdgeClassCounts classes;
  for (const Edge& e : g.edges()) {
    auto a = g.degree(e.u);
    auto b = g.degree(e.v);
    ++classes[{std::min(a, b), std::max(a, b)}];
  }
  return classes;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return false;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (ng == 0 || nh == 0) throw Error(ErrorKind::EmptyGraph, "cartesian product of an empty graph");
  const auto gedges = g.edges();
  const auto hedges = h.edges();
  std::vector<Edge> edges;
  edges.reserve(ng * hedges.size() + nh * gedges.size());
  auto id = [nh](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * nh + j); };
  for (std::size_t i = 0; i < ng; ++i) {
    for (const Edge& e : hedges) edges.push_back({id(i, e.u), id(i, e.v)});
  }
  for (const Edge& e : gedges) {
    for (std::size_t j = 0; j < nh; ++j) edges.push_back({id(e.u, j), id(e.v, j)});
  }
  return Graph::from_edges(ng * nh, edges);
}

Graph mycielski(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(ErrorKind::EmptyGraph, "mycielski of an empty graph");
  const auto base = g.edges();
  std::vector<Edge> edges;
  edges.reserve(3 * base.size() + n);
  const auto shadow = [n](Vertex v) { return static_cast<Vertex>(n + v); };
  const auto apex = static_cast<Vertex>(2 * n);
  for (const Edge& e : base) {
    edges.push_back(e);
    edges.push_back({e.u, shadow(e.v)});
    edges.push_back({shadow(e.u), e.v});
  }
  for (Vertex v = 0; v < n; ++v) edges.push_back({shadow(v), apex});
  return Graph::from_edges(2 * n + 1, edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
  }
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(ErrorKind::InvalidParams, fmt::format("cycle needs n >= 3, got {}", n));
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)});
  }
  return Graph::from_edges(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0 ? 1 : 0)) / 2);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    }
  }
  return Graph::from_edges(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  std::string buffer = fmt::format("{} {}\n", g.order(), g.size());
  for (const Edge& e : g.edges()) fmt::format_to(std::back_inserter(buffer), "{} {}\n", e.u, e.v);
  out << buffer;
}

namespace {

bool read_count(std::istringstream& line, std::uint64_t& value) {
  std::string token;
  if (!(line >> token)) return false;
  if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
        return c >= '0' && c <= '9';
      })) {
    return false;
  }
  try {
    value = std::stoull(token);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string text;
  std::size_t line_no = 0;
  auto next_line = [&](std::istringstream& line) {
    while (std::getline(in, text)) {
      ++line_no;
      if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
      line = std::istringstream(text);
      return true;
    }
    return false;
  };

  std::istringstream line;
  std::uint64_t n = 0, m = 0;
  std::string trailing;
  if (!next_line(line) || !read_count(line, n) || !read_count(line, m) || (line >> trailing)) {
    throw Error(ErrorKind::Parse, "expected header line \"n m\"");
  }
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(ErrorKind::Parse, fmt::format("vertex count {} too large", n));
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
  for (std::uint64_t i = 0; i < m; ++i) {
    std::uint64_t u = 0, v = 0;
    if (!next_line(line) || !read_count(line, u) || !read_count(line, v) || (line >> trailing)) {
      throw Error(ErrorKind::Parse, fmt::format("line {}: expected edge \"u v\"", line_no));
    }
    if (u >= n || v >= n) {
      throw Error(ErrorKind::Parse, fmt::format("line {}: endpoint out of range", line_no));
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::istringstream extra;
  if (next_line(extra)) {
    throw Error(ErrorKind::Parse, fmt::format("line {}: more than {} edges", line_no, m));
  }
  try {
    return Graph::from_edges(static_cast<std::size_t>(n), edges);
  } catch (const Error& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

}  // namespace molirr
