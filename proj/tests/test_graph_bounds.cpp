#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "poly_oracle.hpp"
#include "specbound/graph_bounds.hpp"
#include "specbound/numeric.hpp"
#include "specbound/random_gen.hpp"
#include "specbound/rng.hpp"

using namespace specbound;

namespace {

Graph star4() { return parse_edge_list("4 3\n1 2\n1 3\n1 4\n"); }

Graph path3() { return parse_edge_list("3 2\n1 2\n2 3\n"); }

Graph wheel6() { return parse_edge_list("6 10\n1 2\n1 3\n1 4\n1 5\n1 6\n2 3\n3 4\n4 5\n5 6\n2 6\n"); }

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges));
}

constexpr auto kAllKinds = {GraphMatrixKind::Adjacency, GraphMatrixKind::SignlessLaplacian,
                            GraphMatrixKind::Distance, GraphMatrixKind::DistanceSignlessLaplacian,
                            GraphMatrixKind::ReciprocalDistance};

}  // namespace

TEST_CASE("star distance lower bound attains the radius") {
  const GraphBoundReport rep = graph_bound(star4(), GraphMatrixKind::Distance,
                                           BoundDirection::Lower);
  CHECK(rep.value.value == doctest::Approx(2.0 + std::sqrt(7.0)).epsilon(1e-12));
  CHECK(rep.rho.rho == doctest::Approx(2.0 + std::sqrt(7.0)).epsilon(1e-10));
  CHECK(rep.general_certificate.verdict);
  CHECK(*rep.general_certificate.t == 2);
  CHECK(rep.stated_predicate.stated);
  CHECK(rep.stated_predicate.holds);
  REQUIRE(rep.stated_predicate.witness_vertex.has_value());
  CHECK(*rep.stated_predicate.witness_vertex == 0);  // the hub
  REQUIRE(rep.stated_predicate.quantities.size() == 4);
  CHECK(rep.stated_predicate.quantities[0] == 3.0);
  CHECK(rep.stated_predicate.quantities[1] == 5.0);
  CHECK_FALSE(rep.general_instantiation);
  CHECK(rep.parameters.diag_extreme == 0.0);   // S
  CHECK(rep.parameters.offdiag_extreme == 1.0);  // T
  CHECK(rep.parameters.ratio == doctest::Approx(3.0 / 5).epsilon(1e-15));
}

TEST_CASE("regular graphs give a constant adjacency curve equal to the radius") {
  for (const Graph& g : {complete(5), cycle(6)}) {
    const GraphBoundReport rep = graph_bound(g, GraphMatrixKind::Adjacency,
                                             BoundDirection::Upper);
    const double degree = g.degree(0);
    for (double v : rep.curve.values) CHECK(v == doctest::Approx(degree).epsilon(1e-13));
    CHECK(rep.rho.rho == doctest::Approx(degree).epsilon(1e-10));
    CHECK(rep.general_certificate.verdict);
    CHECK(rep.stated_predicate.holds);
    CHECK(rep.stated_predicate.via_uniform_avg2);
  }
}

TEST_CASE("wheel signless Laplacian attains the upper bound past l = 1") {
  const GraphBoundReport rep = graph_bound(wheel6(), GraphMatrixKind::SignlessLaplacian,
                                           BoundDirection::Upper);
  const double rho = 5.0 + std::sqrt(5.0);
  CHECK(rep.curve.values[0] == doctest::Approx(8.0).epsilon(1e-13));
  for (int l = 2; l <= 6; ++l)
    CHECK(rep.curve.values[l - 1] == doctest::Approx(rho).epsilon(1e-12));
  CHECK(rep.rho.rho == doctest::Approx(rho).epsilon(1e-10));
  CHECK(std::abs(rep.rho.rho * rep.rho.rho - 10.0 * rep.rho.rho + 20.0) < 1e-9);
  CHECK(rep.general_certificate.verdict);
  CHECK(*rep.general_certificate.t == 2);
  CHECK(rep.parameters.diag_extreme == 5.0);
  CHECK(rep.parameters.ratio == doctest::Approx(5.0 / 3).epsilon(1e-15));
  // Hub of degree n-1, rim all equal below: the stated predicate holds too,
  // and here it genuinely corresponds to equality.
  CHECK(rep.stated_predicate.holds);
  CHECK(*rep.stated_predicate.witness_vertex == 0);
}

TEST_CASE("star reciprocal upper bound stays strict despite the stated predicate") {
  const GraphBoundReport rep = graph_bound(star4(), GraphMatrixKind::ReciprocalDistance,
                                           BoundDirection::Upper);
  REQUIRE(rep.curve.values.size() == 4);
  for (int l = 1; l <= 3; ++l)
    CHECK(rep.curve.values[l - 1] == doctest::Approx(2.5).epsilon(1e-13));
  CHECK(rep.curve.values[3] ==
        doctest::Approx((0.5 + std::sqrt(21.25)) / 2).epsilon(1e-13));
  CHECK(rep.rho.rho == doctest::Approx((1.0 + std::sqrt(13.0)) / 2).epsilon(1e-10));
  CHECK(rep.stated_predicate.holds);             // R_hub = 3 = n-1 > 2 = R_leaf
  CHECK_FALSE(rep.general_certificate.verdict);  // but equality fails
  CHECK(rep.curve.best_value - rep.rho.rho > 0.1);
}

TEST_CASE("star adjacency upper bound: predicate holds, equality fails") {
  const GraphBoundReport rep = graph_bound(star4(), GraphMatrixKind::Adjacency,
                                           BoundDirection::Upper);
  CHECK(rep.stated_predicate.stated);
  CHECK(rep.stated_predicate.holds);
  CHECK(*rep.stated_predicate.witness_vertex == 0);
  CHECK(rep.curve.best_value == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(rep.rho.rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-10));
  CHECK_FALSE(rep.general_certificate.verdict);
  CHECK(rep.curve.best_value - rep.rho.rho > 0.1);
}

TEST_CASE("lower bounds without a stated theorem are flagged") {
  for (GraphMatrixKind kind : {GraphMatrixKind::Adjacency, GraphMatrixKind::SignlessLaplacian,
                               GraphMatrixKind::ReciprocalDistance}) {
    const GraphBoundReport rep = graph_bound(star4(), kind, BoundDirection::Lower);
    CHECK(rep.general_instantiation);
    CHECK_FALSE(rep.stated_predicate.stated);
    CHECK(rep.value.value <= rep.rho.rho + 1e-8 * std::max(1.0, rep.rho.rho));
  }
  CHECK_FALSE(graph_bound(star4(), GraphMatrixKind::Distance, BoundDirection::Lower)
                  .general_instantiation);
  CHECK_FALSE(graph_bound(star4(), GraphMatrixKind::DistanceSignlessLaplacian,
                          BoundDirection::Lower)
                  .general_instantiation);
}

TEST_CASE("weakened adjacency bound") {
  // Regular graph: m_1 = m_l, both forms give the degree.
  for (int l = 1; l <= 5; ++l)
    CHECK(adjacency_upper_simple(complete(5), l) == doctest::Approx(4.0).epsilon(1e-13));

  // Star, l = 4: every avg2 value above the tail equals m_1, so the weakened
  // form matches the curve at l = 4.
  const GraphBoundReport star =
      graph_bound(star4(), GraphMatrixKind::Adjacency, BoundDirection::Upper);
  CHECK(adjacency_upper_simple(star4(), 4) ==
        doctest::Approx(std::sqrt(22.0) - 1.0).epsilon(1e-13));
  CHECK(adjacency_upper_simple(star4(), 4) ==
        doctest::Approx(star.curve.values[3]).epsilon(1e-13));

  // Path P_3, l = 2: both forms give 2.
  const GraphBoundReport p3 =
      graph_bound(path3(), GraphMatrixKind::Adjacency, BoundDirection::Upper);
  CHECK(adjacency_upper_simple(path3(), 2) == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(adjacency_upper_simple(path3(), 2) == doctest::Approx(p3.curve.values[1]).epsilon(1e-13));

  // Never below the curve, never below the radius.
  SplitMix64 rng(6060);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = random_connected_graph(rng, rng.next_int(3, 8), 0.5);
    const GraphBoundReport rep = graph_bound(g, GraphMatrixKind::Adjacency,
                                             BoundDirection::Upper);
    for (int l = 1; l <= g.order(); ++l) {
      const double weak = adjacency_upper_simple(g, l);
      CHECK(weak >= rep.curve.values[l - 1] - 1e-10);
      CHECK(weak >= rep.rho.rho - 1e-8);
    }
  }
}

TEST_CASE("stated predicates on fixed graphs") {
  // Complete graphs are regular: the uniform branch of every upper kind.
  for (GraphMatrixKind kind : kAllKinds) {
    const StatedPredicate pred = stated_equality_predicate(complete(4), kind,
                                                           BoundDirection::Upper);
    CHECK(pred.stated);
    CHECK(pred.holds);
    CHECK(pred.via_uniform_avg2);
  }

  const StatedPredicate star_low =
      stated_equality_predicate(star4(), GraphMatrixKind::Distance, BoundDirection::Lower);
  CHECK(star_low.holds);
  CHECK(star_low.quantities == std::vector<double>{3, 5, 5, 5});

  // Path: no dominating vertex, avg2 not uniform.
  const StatedPredicate path_up =
      stated_equality_predicate(path3(), GraphMatrixKind::Distance, BoundDirection::Upper);
  CHECK(path_up.stated);
  CHECK_FALSE(path_up.holds);

  CHECK_FALSE(stated_equality_predicate(star4(), GraphMatrixKind::Adjacency,
                                        BoundDirection::Lower)
                  .stated);
  CHECK_THROWS_AS(stated_equality_predicate(parse_edge_list("4 2\n1 2\n3 4\n"),
                                            GraphMatrixKind::Adjacency, BoundDirection::Upper),
                  Error);
}

TEST_CASE("specialized parameters and curves match the general engine") {
  SplitMix64 rng(2468);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.next_int(4, 10);
    const Graph g = random_connected_graph(rng, n, 0.45);
    for (GraphMatrixKind kind : kAllKinds) {
      const NonnegMatrix matrix = build_matrix(g, kind);

      const GraphBoundReport up = graph_bound(g, kind, BoundDirection::Upper);
      const UpperBoundCurve general = phi_curve(matrix);
      REQUIRE(up.curve.values.size() == general.values.size());
      for (size_t k = 0; k < general.values.size(); ++k)
        CHECK(relative_difference(up.curve.values[k], general.values[k]) <= 1e-12);
      CHECK(up.curve.best_l == general.best_l);

      const GraphBoundReport low = graph_bound(g, kind, BoundDirection::Lower);
      CHECK(relative_difference(low.value.value, psi(matrix).value) <= 1e-12);

      // Sandwich for every kind and direction.
      const double rho = up.rho.rho;
      const double eps = 1e-8 * std::max(1.0, rho);
      for (double v : up.curve.values) CHECK(rho <= v + eps);
      CHECK(low.value.value <= rho + eps);

      // Certificate soundness.
      if (up.general_certificate.verdict && up.general_certificate.t)
        CHECK(relative_difference(up.curve.values[*up.general_certificate.t - 1], rho) <= 1e-8);
      if (low.general_certificate.verdict)
        CHECK(relative_difference(low.value.value, rho) <= 1e-8);
    }
  }
}

TEST_CASE("distance upper equality only happens with uniform avg2") {
  SplitMix64 rng(1357);
  int equalities = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.next_int(3, 8);
    const Graph g = random_connected_graph(rng, n, 0.6);
    const GraphBoundReport rep = graph_bound(g, GraphMatrixKind::Distance,
                                             BoundDirection::Upper);
    if (relative_difference(rep.curve.best_value, rep.rho.rho) <= 1e-8) {
      ++equalities;
      bool uniform = true;
      for (size_t i = 1; i < rep.avg2.size(); ++i)
        if (!nearly_equal(rep.avg2[i], rep.avg2[0], 1e-9)) uniform = false;
      CHECK(uniform);
    }
  }
  CHECK(equalities > 0);  // complete graphs and cycles do appear in the sample
}

TEST_CASE("oracle agreement for the built graph matrices") {
  SplitMix64 rng(9753);
  for (int trial = 0; trial < 10; ++trial) {
    const Graph g = random_connected_graph(rng, rng.next_int(3, 6), 0.5);
    for (GraphMatrixKind kind : kAllKinds) {
      const NonnegMatrix matrix = build_matrix(g, kind);
      const double by_iteration = spectral_radius(matrix).rho;
      const double by_oracle = testing::perron_root_oracle(matrix);
      CHECK(relative_difference(by_iteration, by_oracle) <= 1e-8);
    }
  }
}
