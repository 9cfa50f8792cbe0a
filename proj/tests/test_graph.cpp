#include "doctest.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "graphentropy/graph.hpp"
#include "graphentropy/error.hpp"

using namespace graphentropy;

namespace {

// Plain BFS over an adjacency matrix rebuilt from the edge list.
std::vector<std::size_t> oracle_distances(const Graph& g, Node s) {
  const std::size_t n = g.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  std::vector<std::size_t> dist(n, kUnreachable);
  std::deque<Node> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const Node u = queue.front();
    queue.pop_front();
    for (Node v = 0; v < n; ++v) {
      if (adj[u][v] && dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::size_t oracle_diameter(const Graph& g) {
  std::size_t best = 0;
  for (Node s = 0; s < g.size(); ++s) {
    for (const auto d : oracle_distances(g, s)) best = std::max(best, d);
  }
  return best;
}

template <typename Fn>
ErrorCode code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Config;
}

}  // namespace

TEST_CASE("graph construction canonicalizes and validates edges") {
  const Graph g(4, {{2, 1}, {0, 3}, {1, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
  CHECK(g.neighbors(0) == std::vector<Node>{1, 3});
  CHECK(g.has_edge(2, 1));
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK(g.degrees() == std::vector<std::size_t>{2, 2, 1, 1});

  CHECK(code_of([] { Graph(3, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
  CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::NodeOutOfRange);
  CHECK(code_of([] { Graph(0, {}); }) == ErrorCode::InvalidSize);
  CHECK(code_of([&] { (void)g.with_edge(0, 1); }) == ErrorCode::EdgeAlreadyPresent);
  CHECK(g.with_edge(2, 3).edge_count() == 4);
}

TEST_CASE("complete graph") {
  CHECK(make_complete(1).edge_count() == 0);
  CHECK(make_complete(3).edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}});
  for (std::size_t n : {2u, 7u, 20u}) CHECK(make_complete(n).edge_count() == n * (n - 1) / 2);
  CHECK(make_complete(6).density() == doctest::Approx(1.0));
  CHECK(diameter(make_complete(9)) == 1);
  CHECK(bfs_distances(make_complete(4), 2) == std::vector<std::size_t>{1, 1, 0, 1});
}

TEST_CASE("path graph") {
  CHECK(make_path(2).edges() == std::vector<Edge>{{0, 1}});
  const Graph p = make_path(10);
  CHECK(p.edge_count() == 9);
  std::vector<std::size_t> expected(10, 2);
  expected.front() = expected.back() = 1;
  CHECK(p.degrees() == expected);
  CHECK(diameter(make_path(5)) == 4);
  CHECK(diameter(make_path(5)) == oracle_diameter(make_path(5)));
  CHECK(bfs_distances(make_path(5), 0) == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(connected_components(p).size() == 1);
}

TEST_CASE("star graph") {
  const Graph s = make_star(3);
  CHECK(s.size() == 4);
  CHECK(s.degrees() == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK(diameter(s) == 2);
}

TEST_CASE("circulant graphs") {
  const Graph cycle = make_circulant(20, StepSet({1}, 20));
  CHECK(cycle.edge_count() == 20);
  for (const auto d : cycle.degrees()) CHECK(d == 2);
  CHECK(cycle.label() == "C_20({1})");

  const Graph c123 = make_circulant(20, StepSet({1, 2, 3}, 20));
  CHECK(c123.density() == doctest::Approx(6.0 / 19.0));
  CHECK(diameter(c123) == 4);
  CHECK(diameter(cycle) == 10);
  CHECK(diameter(make_circulant(20, StepSet({1, 2}, 20))) == 5);
  CHECK(make_circulant(20, StepSet({1, 2}, 20)).density() == doctest::Approx(4.0 / 19.0));

  const Graph c4 = make_circulant(4, StepSet({1, 2}, 4));
  for (const auto d : c4.degrees()) CHECK(d == 3);
  CHECK(c4 == make_complete(4));
  CHECK(StepSet({1, 2}, 4).degree() == 3);
  CHECK(StepSet({2, 1}, 9).to_string() == "{1,2}");

  CHECK(code_of([] { StepSet({0}, 5); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { StepSet({3}, 5); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { StepSet({1, 1}, 5); }) == ErrorCode::InvalidStep);
  CHECK(code_of([] { StepSet({}, 5); }) == ErrorCode::InvalidStep);
}

TEST_CASE("circulant diameters agree with a BFS oracle") {
  for (std::size_t n : {7u, 12u, 20u}) {
    for (std::size_t a = 1; a <= n / 2; ++a) {
      for (std::size_t b = a + 1; b <= n / 2; ++b) {
        const Graph g = make_circulant(n, StepSet({a, b}, n));
        if (!is_connected(g)) {
          CHECK_THROWS_AS(diameter(g), Error);
          continue;
        }
        CHECK(diameter(g) == oracle_diameter(g));
      }
    }
  }
}

TEST_CASE("erdos-renyi generator") {
  CHECK(make_erdos_renyi(15, 0.0, RngSeed{4}).edge_count() == 0);
  CHECK(make_erdos_renyi(15, 1.0, RngSeed{4}) == make_complete(15));
  const Graph g = make_erdos_renyi(100, 0.1, RngSeed{2024});
  CHECK(g.edge_count() >= 300);
  CHECK(g.edge_count() <= 700);
  CHECK(g == make_erdos_renyi(100, 0.1, RngSeed{2024}));
  CHECK_FALSE(g == make_erdos_renyi(100, 0.1, RngSeed{2025}));
  CHECK(code_of([] { make_erdos_renyi(10, 1.5, RngSeed{1}); }) == ErrorCode::InvalidProbability);
  CHECK(code_of([] { make_erdos_renyi(10, -0.1, RngSeed{1}); }) == ErrorCode::InvalidProbability);

  // Mean edge count over many draws stays near p n(n-1)/2.
  double total = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) total += static_cast<double>(make_erdos_renyi(30, 0.3, RngSeed{s}).edge_count());
  CHECK(total / 200.0 == doctest::Approx(0.3 * 435.0).epsilon(0.03));
}

TEST_CASE("watts-strogatz generator") {
  CHECK(make_watts_strogatz(30, 3, 0.0, RngSeed{9}) == make_circulant(30, consecutive_steps(3, 30)));
  const Graph c = make_circulant(100, consecutive_steps(3, 100));
  for (double p : {0.0, 0.1, 0.5, 1.0}) {
    const Graph g = make_watts_strogatz(100, 3, p, RngSeed{17});
    CHECK(g.edge_count() == 300);
  }
  const Graph rewired = make_watts_strogatz(100, 3, 1.0, RngSeed{17});
  std::set<Edge> a(c.edges().begin(), c.edges().end());
  std::size_t differing = 0;
  for (const auto& e : rewired.edges()) differing += a.count(e) == 0 ? 1 : 0;
  CHECK(differing >= 1);
  CHECK(rewired == make_watts_strogatz(100, 3, 1.0, RngSeed{17}));
  CHECK_THROWS_AS(make_watts_strogatz(6, 3, 0.1, RngSeed{1}), Error);
}

TEST_CASE("connected components and distances") {
  const Graph k5 = make_complete(5);
  CHECK(connected_components(k5) == std::vector<std::vector<Node>>{{0, 1, 2, 3, 4}});
  const Graph triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  const auto parts = connected_components(triangles);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].size() == 3);
  CHECK(parts[1].size() == 3);
  CHECK_FALSE(is_connected(triangles));
  CHECK(bfs_distances(triangles, 0)[4] == kUnreachable);
  CHECK(code_of([&] { (void)diameter(triangles); }) == ErrorCode::DisconnectedGraph);
  CHECK(is_connected(Graph(1, {})));
  CHECK(Graph(3, {{0, 1}}).has_isolated_node());
  CHECK_FALSE(Graph(1, {}).has_isolated_node());

  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = make_erdos_renyi(25, 0.15, RngSeed{s});
    for (Node v : {0u, 7u, 24u}) CHECK(bfs_distances(g, v) == oracle_distances(g, v));
  }
}

TEST_CASE("edge list round trip") {
  const Graph g = make_watts_strogatz(12, 2, 0.3, RngSeed{5});
  std::ostringstream out;
  write_edge_list(out, g);
  std::istringstream in(out.str());
  CHECK(read_edge_list(in) == g);

  std::istringstream commented("# comment\n0 1\n\n1 2  # trailing\n");
  const Graph h = read_edge_list(commented);
  CHECK(h.size() == 3);
  CHECK(h.edge_count() == 2);

  std::istringstream header("n=5\n0 1\n");
  CHECK(read_edge_list(header).size() == 5);

  std::istringstream bad("0 x\n");
  CHECK(code_of([&] { read_edge_list(bad); }) == ErrorCode::Parse);
  std::istringstream loop("2 2\n");
  CHECK(code_of([&] { read_edge_list(loop); }) == ErrorCode::SelfLoop);
}

TEST_CASE("counter-based rng") {
  CounterRng a(RngSeed{11});
  CounterRng b(RngSeed{11});
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  CHECK(derive_seed(RngSeed{1}, 0).value != derive_seed(RngSeed{1}, 1).value);
  CounterRng c(RngSeed{3});
  for (int i = 0; i < 1000; ++i) {
    const double u = c.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(c.uniform_below(7) < 7);
  }
}
