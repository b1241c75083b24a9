#include <doctest.h>

#include <set>

#include "brute.hpp"
#include "error.hpp"
#include "graph.hpp"

using namespace rs;

TEST_CASE("out_degree_uniform") {
  CHECK(out_degree_uniform(brute::mg({{0, 0}})) == 2);
  CHECK_FALSE(out_degree_uniform(brute::mg({{1, 0}, {0}})).has_value());
}

TEST_CASE("aperiodicity") {
  CHECK(is_aperiodic(brute::mg({{0}})));
  CHECK_FALSE(is_aperiodic(brute::mg({{1}, {0}})));
  // 2-cycle 0-1 and 3-cycle 0-2-3 sharing vertex 0
  CHECK(is_aperiodic(brute::mg({{1, 2}, {0, 0}, {3, 3}, {0, 0}})));
  CHECK_THROWS_AS(is_aperiodic(brute::mg({{1}, {}})), InvalidInput);
}

TEST_CASE("aperiodicity agrees with simple-cycle enumeration") {
  std::mt19937_64 rng(3);
  for (int it = 0; it < 2000; ++it) {
    int t = 1 + int(rng() % 5), d = 1 + int(rng() % 2);
    auto g = brute::random_graph(rng, t, d);
    CHECK(is_aperiodic(g) == (brute::cycle_gcd(g) == 1));
  }
}

TEST_CASE("admissibility and strong connectivity") {
  CHECK(is_admissible(brute::mg({{0, 0}})));
  CHECK_FALSE(is_admissible(brute::mg({{1, 1}, {0, 0}})));
  CHECK_FALSE(is_admissible(brute::mg({{1, 0}, {0}})));
  CHECK(is_strongly_connected(brute::mg({{0}})));
  CHECK_FALSE(is_strongly_connected(brute::mg({{1}, {1}})));
  CHECK(is_strongly_connected(brute::mg({{1, 2}, {0, 0}, {3, 3}, {0, 0}})));
}

TEST_CASE("distance layers") {
  Multigraph path({{0}, {0}, {1}});
  CHECK(distance_layers(path, 0) == std::vector<int>{0, 1, 2});
  CHECK(distance_layers(path, 2) == std::vector<int>{-1, -1, 0});
  std::mt19937_64 rng(4);
  for (int it = 0; it < 300; ++it) {
    auto g = brute::random_graph(rng, 1 + int(rng() % 7), 2);
    int q = int(rng() % g.vertices());
    auto dist = distance_layers(g, q);
    CHECK(dist[q] == 0);
    for (int v = 0; v < g.vertices(); ++v) {
      if (dist[v] <= 0) continue;
      int best = 1 << 30;
      for (int w : g.out[v])
        if (dist[w] >= 0) best = std::min(best, dist[w]);
      CHECK(best == dist[v] - 1);
    }
    if (is_strongly_connected(g))
      for (int x : dist) CHECK(x >= 0);
  }
}

TEST_CASE("apply_coloring") {
  Multigraph f({{1}, {2}, {0}});
  auto a = apply_coloring(f, identity_coloring(f));
  CHECK(a.next(0, 0) == 1);
  CHECK(a.next(2, 0) == 0);
  Multigraph loops({{0, 0}});
  auto b = apply_coloring(loops, Coloring{{{1, 0}}});
  CHECK(b.next(0, 0) == 0);
  CHECK(b.next(0, 1) == 0);
  CHECK_THROWS_AS(apply_coloring(brute::mg({{0, 0}, {1}}), Coloring{{{0, 1}, {0}}}), InvalidInput);
  CHECK_THROWS_AS(apply_coloring(loops, Coloring{{{0, 0}}}), InvalidInput);
}

TEST_CASE("coloring round trip keeps the transition multiset") {
  std::mt19937_64 rng(6);
  for (int it = 0; it < 200; ++it) {
    auto g = brute::random_graph(rng, 1 + int(rng() % 4), 1 + int(rng() % 3));
    auto n = *coloring_count(g);
    auto c = coloring_at(g, rng() % n);
    auto a = apply_coloring(g, c);
    for (int v = 0; v < g.vertices(); ++v) {
      std::multiset<int> lhs(g.out[v].begin(), g.out[v].end()), rhs;
      for (int l = 0; l < a.letters(); ++l) rhs.insert(a.next(v, l));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("enumerate colorings") {
  CHECK(coloring_count(brute::mg({{1}, {0}})) == 1);
  CHECK(coloring_count(brute::mg({{1, 2}, {0, 2}, {0, 1}})) == 8);
  std::vector<std::vector<int>> sixteen(16, {0, 0});
  CHECK(coloring_count(Multigraph(sixteen)) == 65536);
  // order: vertex 0 most significant, then permutation rank
  Multigraph h({{0, 1}, {1, 0}});
  CHECK(coloring_at(h, 0).letter == std::vector<std::vector<int>>{{0, 1}, {0, 1}});
  CHECK(coloring_at(h, 1).letter == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(coloring_at(h, 2).letter == std::vector<std::vector<int>>{{1, 0}, {0, 1}});
  Multigraph k3({{0, 0, 0}});
  CHECK(coloring_at(k3, 1).letter[0] == std::vector<int>{0, 2, 1});
  CHECK(coloring_at(k3, 5).letter[0] == std::vector<int>{2, 1, 0});

  // exhaustive distinctness for every graph shape with t <= 4 and small degrees
  for (int t = 1; t <= 4; ++t)
    for (int d = 1; d <= 3; ++d) {
      if (t == 4 && d == 3) continue;
      std::vector<std::vector<int>> adj(t, std::vector<int>(d, 0));
      Multigraph m(adj);
      auto n = *coloring_count(m);
      std::uint64_t expect = 1;
      for (int v = 0; v < t; ++v)
        for (int i = 2; i <= d; ++i) expect *= i;
      CHECK(n == expect);
      std::set<std::vector<std::vector<int>>> seen;
      for (std::uint64_t i = 0; i < n; ++i) {
        auto c = coloring_at(m, i);
        check_coloring(m, c);
        seen.insert(c.letter);
      }
      CHECK(seen.size() == n);
    }
  // t = 4, d = 3: 6^4 colorings
  Multigraph m(std::vector<std::vector<int>>(4, std::vector<int>{0, 1, 2}));
  std::set<std::vector<std::vector<int>>> seen;
  for (std::uint64_t i = 0; i < 1296; ++i) seen.insert(coloring_at(m, i).letter);
  CHECK(seen.size() == 1296);
}

TEST_CASE("graph text formats and dot") {
  Multigraph g({{1, 1}, {0, 1}});
  auto text = graph_to_text(g);
  CHECK(text == "graph 2 2\n1 1\n0 1\n");
  CHECK(graph_from_text(text) == g);
  Coloring c{{{1, 0}, {0, 1}}};
  auto ct = colored_graph_to_text(g, c);
  CHECK(ct == "graph 2 2\n1 1\n0 1\ncolors\nb a\na b\n");
  std::optional<Coloring> back;
  CHECK(colored_graph_from_text(ct, &back) == g);
  REQUIRE(back);
  CHECK(*back == c);
  CHECK_THROWS_AS(graph_from_text("graph 2 2\n1 1\n0 5\n"), InvalidInput);
  CHECK_THROWS_AS(graph_from_text("graph 2 2\n1 1\n"), InvalidInput);
  CHECK_THROWS_AS(colored_graph_from_text("graph 1 2\n0 0\ncolors\na a\n", &back), InvalidInput);
  auto dot = graph_to_dot(g, &c);
  CHECK(dot.find("0 -> 1 [label=\"b\"];") != std::string::npos);
  CHECK(dot.find("1 -> 1 [label=\"b\"];") != std::string::npos);
  auto plain = graph_to_dot(g, nullptr);
  CHECK(plain.find("label") == std::string::npos);
}
