#include <sstream>
#include <vector>

#include "matrix_listing.hpp"
#include "doctest.h"
#include "molirr/error.hpp"
#include "molirr/generators.hpp"
#include "molirr/verify.hpp"
#include "test_support.hpp"

using namespace molirr;

namespace {

using Counts = std::map<std::size_t, std::size_t>;

std::vector<FamilySpec> full_grid() {
  std::vector<FamilySpec> all;
  for (auto f : kAllFamilies) {
    auto pts = expand(f, default_grid(f));
    all.insert(all.end(), pts.begin(), pts.end());
  }
  return all;
}

bool rejects(const FamilySpec& s) {
  try {
    generate(s);
  } catch (const Error& e) {
    return e.kind() == ErrorKind::InvalidParams;
  }
  return false;
}

std::string edge_text(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

}  // namespace

TEST_CASE("generated examples") {
  auto g = generate(tube(Family::Tuc4c8s, 4, 4));
  CHECK(g.order() == 64);
  CHECK(g.size() == 88);
  CHECK(degree_sequence(g).counts == Counts{{2, 16}, {3, 48}});

  g = generate(circumcoronene(1));
  CHECK(g.order() == 6);
  CHECK(g.size() == 6);
  CHECK(degree_sequence(g).counts == Counts{{2, 6}});

  g = generate(dendrimer(3, 1));
  CHECK(degree_sequence(g).counts == Counts{{1, 3}, {3, 1}});

  g = generate(dendrimer(3, 2));
  CHECK(degree_sequence(g).counts == Counts{{1, 6}, {3, 4}});

  g = generate(tube(Family::Tuvc6, 4, 9));
  CHECK(g.order() == 72);
  CHECK(g.size() == 100);
  CHECK(degree_sequence(g).counts == Counts{{2, 16}, {3, 56}});

  g = generate(circumcoronene(2));
  CHECK(g.order() == 24);
  CHECK(g.size() == 30);
  CHECK(degree_sequence(g).counts == Counts{{2, 12}, {3, 12}});
}

TEST_CASE("count table examples") {
  auto t = count_table(tube(Family::Tuc4, 5, 6));
  CHECK(t.n == 30);
  CHECK(t.m == 54);
  CHECK(t.imbalanced_edges() == 12);
  CHECK(t.balanced_low_edges() == 12);
  // q(2p-5); the count 42 does not partition m = 54
  CHECK(t.balanced_high_edges() == 30);
  CHECK(edge_class_counts(generate(tube(Family::Tuc4, 5, 6))) == t.edge_classes);

  t = count_table(tube(Family::Tuhc6, 6, 6));
  CHECK(t.n == 72);
  CHECK(t.m == 102);
  CHECK(t.degree_counts == Counts{{2, 12}, {3, 60}});

  t = count_table(circumcoronene(3));
  CHECK(t.imbalanced_edges() == 24);
  CHECK(t.balanced_low_edges() == 6);
  CHECK(t.balanced_high_edges() == 42);
}

TEST_CASE("every grid point matches its count table and is connected") {
  for (const auto& s : full_grid()) {
    CAPTURE(label(s));
    const auto g = generate(s);
    const auto t = count_table(s);
    CHECK(g.order() == t.n);
    CHECK(g.size() == t.m);
    CHECK(degree_sequence(g).counts == t.degree_counts);
    CHECK(edge_class_counts(g) == t.edge_classes);
    CHECK(t.imbalanced_edges() + t.balanced_low_edges() + t.balanced_high_edges() == t.m);
    CHECK(is_connected(g));
  }
}

TEST_CASE("generation is deterministic") {
  for (const auto& s : full_grid()) {
    CAPTURE(label(s));
    CHECK(edge_text(generate(s)) == edge_text(generate(s)));
  }
}

TEST_CASE("tubes agree with the literal matrix listings") {
  for (std::int64_t p = 2; p <= 7; ++p) {
    for (std::int64_t q = 2; q <= 7; ++q) {
      CAPTURE(p);
      CAPTURE(q);
      CHECK(generate(tube(Family::Tuc4c8s, p, q)) == listing::tuc4c8s(p, q).graph());
      CHECK(generate(tube(Family::Tuc4c8r, p, q)) == listing::tuc4c8r(p, q).graph());
      CHECK(generate(tube(Family::Tuhc6, p, q)) == listing::tuhc6(p, q).graph());
      if (q >= 3) CHECK(generate(tube(Family::Tuvc6, p, q)) == listing::tuvc6(p, q).graph());
      // the listing takes its arguments in the opposite order
      if (p >= 3 && q >= 3) CHECK(generate(tube(Family::Tuc4, p, q)) == listing::tuc4(q, p).graph());
    }
  }
}

TEST_CASE("tuc4 is a path times a cycle") {
  for (std::int64_t p = 3; p <= 8; ++p)
    for (std::int64_t q = 3; q <= 8; ++q)
      CHECK(generate(tube(Family::Tuc4, p, q)) ==
            cartesian_product(path_graph(static_cast<std::size_t>(p)),
                              cycle_graph(static_cast<std::size_t>(q))));
}

TEST_CASE("dendrimer agrees with the listing for depth two and up") {
  for (std::int64_t k = 3; k <= 5; ++k) {
    for (std::int64_t d = 2; d <= 4; ++d) {
      CAPTURE(k);
      CAPTURE(d);
      CHECK(generate(dendrimer(k, d)) == listing::dendrimer(k, d).graph());
    }
    // the listing always emits the second level
    CHECK(listing::dendrimer(k, 1).graph() == generate(dendrimer(k, 2)));
  }
}

TEST_CASE("mycielski families agree with the block-matrix listing") {
  for (std::int64_t n = 4; n <= 20; ++n) {
    const auto [mc, mp] = listing::mycielski_cycle_path(n);
    CHECK(generate(mycielski_cycle(n)) == mc.graph());
    CHECK(generate(mycielski_path(n)) == mp.graph());
  }
}

TEST_CASE("circumcoronene agrees with the listing up to labels") {
  for (std::int64_t k = 1; k <= 7; ++k) {
    CAPTURE(k);
    const auto ours = generate(circumcoronene(k));
    const auto theirs = listing::circumcoronene(k).graph();
    CHECK(ours.order() == theirs.order());
    CHECK(ours.size() == theirs.size());
    CHECK(edge_class_counts(ours) == edge_class_counts(theirs));
    CHECK(testing::girth(ours) == testing::girth(theirs));
  }
}

TEST_CASE("ring structure") {
  for (std::int64_t k = 1; k <= 3; ++k) {
    const auto g = generate(circumcoronene(k));
    CHECK(testing::girth(g) == 6);
    // every 6-cycle of a benzenoid patch bounds a hexagon
    CHECK(testing::count_cycles(g, 6) == static_cast<std::size_t>(3 * k * (k - 1) + 1));
  }
  for (std::int64_t p = 3; p <= 5; ++p) {
    CHECK(testing::girth(generate(tube(Family::Tuhc6, p, 4))) == 6);
    CHECK(testing::girth(generate(tube(Family::Tuvc6, p, 4))) == 6);
    CHECK(testing::girth(generate(tube(Family::Tuc4c8s, p, 3))) == 4);
    CHECK(testing::girth(generate(tube(Family::Tuc4c8r, p, 3))) == 4);
    CHECK(testing::girth(generate(tube(Family::Tuc4, p, 5))) == 4);
  }
  // C4 C8 tubes: 4-cycles are exactly the squares
  CHECK(testing::count_cycles(generate(tube(Family::Tuc4c8r, 3, 3)), 4) == 9);
  for (std::int64_t d = 1; d <= 4; ++d) CHECK(testing::girth(generate(dendrimer(3, d))) == 0);
}

TEST_CASE("invalid parameters") {
  CHECK(rejects(tube(Family::Tuc4, 2, 3)));
  CHECK(rejects(tube(Family::Tuc4, 3, 2)));
  CHECK(rejects(tube(Family::Tuc4c8s, 1, 4)));
  CHECK(rejects(tube(Family::Tuc4c8r, 4, 1)));
  CHECK(rejects(tube(Family::Tuhc6, 1, 2)));
  CHECK(rejects(tube(Family::Tuvc6, 2, 2)));
  CHECK(rejects(dendrimer(2, 3)));
  CHECK(rejects(dendrimer(3, 0)));
  CHECK(rejects(circumcoronene(0)));
  CHECK(rejects(mycielski_cycle(3)));
  CHECK(rejects(mycielski_path(3)));
  auto s = tube(Family::Tuc4c8s, 4, 4);
  s.k = 2;
  CHECK(rejects(s));
  CHECK(rejects(tube(Family::Tuc4c8s, 100000, 100000)));
  CHECK(rejects(circumcoronene(-1)));
}
