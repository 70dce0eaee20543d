#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "specbound/graph.hpp"
#include "specbound/numeric.hpp"
#include "specbound/random_gen.hpp"
#include "specbound/rng.hpp"
#include "specbound/worked_examples.hpp"

using namespace specbound;

namespace {

Graph star4() { return parse_edge_list("4 3\n1 2\n1 3\n1 4\n"); }

Graph path3() { return parse_edge_list("3 2\n1 2\n2 3\n"); }

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("edge list parsing") {
  const Graph star = star4();
  CHECK(star.order() == 4);
  CHECK(star.degree(0) == 3);
  CHECK(star.degree(1) == 1);

  const Graph k2 = parse_edge_list("2 1\n1 2\n");
  CHECK(k2.order() == 2);
  CHECK(k2.edges().size() == 1);

  const Graph k3 = parse_edge_list("# triangle\n3 3\n1 2\n2 3\n1 3\n");
  CHECK(k3.order() == 3);
  CHECK(k3.degree(0) == 2);

  CHECK_THROWS_AS(parse_edge_list("3 1\n1\n"), Error);          // malformed edge line
  CHECK_THROWS_AS(parse_edge_list("3 1\n1 5\n"), Error);        // out of range
  CHECK_THROWS_AS(parse_edge_list("3 1\n2 2\n"), Error);        // self-loop
  CHECK_THROWS_AS(parse_edge_list("3 2\n1 2\n2 1\n"), Error);   // duplicate
  CHECK_THROWS_AS(parse_edge_list("3\n"), Error);               // bad header
  try {
    parse_edge_list("3 2\n1 2\n2 1\n");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEdge);
    CHECK(e.line() == 3);
  }
}

TEST_CASE("serialization is canonical") {
  const Graph g = parse_edge_list("3 3\n2 3\n1 3\n1 2\n");
  CHECK(serialize_edge_list(g) == "3 3\n1 2\n1 3\n2 3\n");
  // Round trip through the canonical form is the identity.
  CHECK(serialize_edge_list(parse_edge_list(serialize_edge_list(g))) == serialize_edge_list(g));
}

TEST_CASE("all-pairs distances") {
  const DistanceData p3 = apsp(path3());
  CHECK(p3.dist[0] == std::vector<int>{0, 1, 2});
  CHECK(p3.dist[1] == std::vector<int>{1, 0, 1});
  CHECK(p3.dist[2] == std::vector<int>{2, 1, 0});
  CHECK(p3.transmissions == std::vector<long long>{3, 2, 3});
  CHECK(p3.diameter == 2);
  CHECK(p3.connected);

  const DistanceData k4 = apsp(complete(4));
  for (int i = 0; i < 4; ++i) CHECK(k4.transmissions[i] == 3);
  CHECK(k4.diameter == 1);

  const DistanceData star = apsp(star4());
  CHECK(star.transmissions == std::vector<long long>{3, 5, 5, 5});
  CHECK(star.diameter == 2);
  CHECK(star.max_transmission == 5);
  CHECK(star.min_transmission == 3);

  const DistanceData split = apsp(parse_edge_list("4 2\n1 2\n3 4\n"));
  CHECK_FALSE(split.connected);
  CHECK(split.dist[0][2] == -1);
}

TEST_CASE("matrix builders") {
  // The distance matrix of the 4-star is exactly the worked example A1.
  const NonnegMatrix d = build_matrix(star4(), GraphMatrixKind::Distance);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(d(i, j) == example_a1()(i, j));

  // Its adjacency matrix is exactly A2' (hub first).
  const NonnegMatrix a = build_matrix(star4(), GraphMatrixKind::Adjacency);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(a(i, j) == example_a2_permuted()(i, j));

  const NonnegMatrix dk4 = build_matrix(complete(4), GraphMatrixKind::Distance);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(dk4(i, j) == (i == j ? 0.0 : 1.0));

  const NonnegMatrix q = build_matrix(star4(), GraphMatrixKind::SignlessLaplacian);
  CHECK(q(0, 0) == 3.0);
  CHECK(q(1, 1) == 1.0);
  CHECK(q(0, 1) == 1.0);
  CHECK(q(1, 2) == 0.0);

  const NonnegMatrix dq = build_matrix(star4(), GraphMatrixKind::DistanceSignlessLaplacian);
  CHECK(dq(0, 0) == 3.0);
  CHECK(dq(1, 1) == 5.0);
  CHECK(dq(1, 2) == 2.0);

  const NonnegMatrix r = build_matrix(star4(), GraphMatrixKind::ReciprocalDistance);
  CHECK(r(0, 1) == 1.0);
  CHECK(r(1, 2) == 0.5);
  CHECK(r(2, 2) == 0.0);

  CHECK_THROWS_AS(build_matrix(parse_edge_list("4 2\n1 2\n3 4\n"), GraphMatrixKind::Distance),
                  Error);
  CHECK_THROWS_AS(build_matrix(parse_edge_list("3 1\n1 2\n"), GraphMatrixKind::Adjacency), Error);
  try {
    build_matrix(parse_edge_list("3 1\n1 2\n"), GraphMatrixKind::Adjacency);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IsolatedVertex);
  }
}

TEST_CASE("reciprocal transmissions") {
  const ReciprocalStats star = reciprocal_stats(star4());
  CHECK(star.values[0] == doctest::Approx(3.0).epsilon(1e-14));
  for (int i = 1; i < 4; ++i) CHECK(star.values[i] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(star.max_value == doctest::Approx(3.0));
  CHECK(star.min_value == doctest::Approx(2.0));

  const ReciprocalStats k5 = reciprocal_stats(complete(5));
  for (double v : k5.values) CHECK(v == doctest::Approx(4.0).epsilon(1e-14));

  const ReciprocalStats p3 = reciprocal_stats(path3());
  CHECK(p3.values[0] == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(p3.values[1] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(p3.values[2] == doctest::Approx(1.5).epsilon(1e-14));
}

TEST_CASE("distance row sums are the transmissions; adjacency row sums the degrees") {
  SplitMix64 rng(404);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.next_int(3, 9);
    const Graph g = random_connected_graph(rng, n, 0.45);
    const DistanceData dd = apsp(g);
    const auto dist_sums = row_sums(build_matrix(g, GraphMatrixKind::Distance));
    const auto adj_sums = row_sums(build_matrix(g, GraphMatrixKind::Adjacency));
    for (int v = 0; v < n; ++v) {
      CHECK(dist_sums[v] == static_cast<double>(dd.transmissions[v]));
      CHECK(adj_sums[v] == static_cast<double>(g.degree(v)));
    }
  }
}

TEST_CASE("distance matrices are symmetric metrics") {
  SplitMix64 rng(505);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.next_int(3, 9);
    const Graph g = random_connected_graph(rng, n, 0.4);
    const DistanceData dd = apsp(g);
    int max_entry = 0;
    for (int i = 0; i < n; ++i) {
      CHECK(dd.dist[i][i] == 0);
      for (int j = 0; j < n; ++j) {
        CHECK(dd.dist[i][j] == dd.dist[j][i]);
        max_entry = std::max(max_entry, dd.dist[i][j]);
        for (int k = 0; k < n; ++k)
          CHECK(dd.dist[i][j] <= dd.dist[i][k] + dd.dist[k][j]);
      }
    }
    CHECK(dd.diameter == max_entry);
  }
}

TEST_CASE("avg2 of the adjacency matrix matches the neighbor-degree ratio") {
  SplitMix64 rng(808);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.next_int(3, 9);
    const Graph g = random_connected_graph(rng, n, 0.5);
    const auto m = avg_two_row_sums(build_matrix(g, GraphMatrixKind::Adjacency));
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      for (int w : g.neighbors(v)) s += g.degree(w);
      CHECK(relative_difference(m[v], s / g.degree(v)) <= 1e-12);
    }
  }
}

TEST_CASE("signless Laplacian variants add the degree/transmission diagonal") {
  SplitMix64 rng(909);
  const Graph g = random_connected_graph(rng, 7, 0.5);
  const NonnegMatrix a = build_matrix(g, GraphMatrixKind::Adjacency);
  const NonnegMatrix q = build_matrix(g, GraphMatrixKind::SignlessLaplacian);
  const NonnegMatrix d = build_matrix(g, GraphMatrixKind::Distance);
  const NonnegMatrix dq = build_matrix(g, GraphMatrixKind::DistanceSignlessLaplacian);
  const DistanceData dd = apsp(g);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      CHECK(q(i, j) == (i == j ? g.degree(i) : a(i, j)));
      CHECK(dq(i, j) == (i == j ? static_cast<double>(dd.transmissions[i]) : d(i, j)));
      CHECK(q(i, j) == q(j, i));
      CHECK(dq(i, j) == dq(j, i));
    }
}

TEST_CASE("connectivity is irreducibility of the adjacency matrix") {
  SplitMix64 rng(1212);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.next_int(2, 8);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_double() < 0.35) edges.emplace_back(u, v);
    const Graph g(n, std::move(edges));
    bool isolated = false;
    for (int v = 0; v < n; ++v) isolated |= g.degree(v) == 0;
    if (isolated) continue;
    CHECK(apsp(g).connected == is_irreducible(build_matrix(g, GraphMatrixKind::Adjacency)));
  }
}
