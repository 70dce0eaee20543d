#pragma once

#include <optional>
#include <vector>

#include "specbound/bounds.hpp"
#include "specbound/graph.hpp"
#include "specbound/matrix.hpp"

namespace specbound {

/// (M, N, b) for an upper bound, (S, T, c) for a lower bound.
struct BoundParameters {
  double diag_extreme = 0.0;
  double offdiag_extreme = 0.0;
  double ratio = 1.0;
};

/// Graph-level equality condition exactly as stated for the bound family.
/// The distinguished index is read as a dominating vertex: some vertex whose
/// degree/transmission/reciprocal transmission equals n-1 while all the other
/// vertices' values are equal and on the stated side of it. The predicate is
/// reported only; equality claims come from the general certificate.
struct StatedPredicate {
  bool stated = false;  // a theorem states a condition for this kind/direction
  bool holds = false;
  bool via_uniform_avg2 = false;
  std::optional<int> witness_vertex;  // 0-based dominating vertex, when used
  std::vector<double> quantities;     // witness first when present, then the rest
};

struct GraphBoundReport {
  GraphMatrixKind kind = GraphMatrixKind::Adjacency;
  BoundDirection direction = BoundDirection::Upper;
  BoundParameters parameters;
  std::vector<double> avg2;  // per-vertex average 2-quantities for the kind
  UpperBoundCurve curve;     // upper direction
  LowerBoundValue value;     // lower direction
  StatedPredicate stated_predicate;
  EqualityCertificate general_certificate;
  SpectralEstimate rho;
  bool general_instantiation = false;  // no stated theorem; general engine applied
};

/// Whether the bound family states a theorem for this combination (all five
/// upper bounds; lower bounds for the distance and distance signless
/// Laplacian kinds).
bool has_stated_theorem(GraphMatrixKind kind, BoundDirection direction);

/// Per-vertex average 2-quantities (average 2-degrees, signless Laplacian
/// average 2-degrees, average 2-transmissions, ...). `dd` may be null for the
/// two degree-based kinds.
std::vector<double> specialized_avg2(const Graph& g, const DistanceData* dd, GraphMatrixKind kind);

/// The bound for the kind/direction computed from graph quantities with the
/// family's closed-form parameters, plus the oracle value, the general
/// certificate, and the stated predicate.
GraphBoundReport graph_bound(const Graph& g, GraphMatrixKind kind, BoundDirection direction);

/// Weakened adjacency upper bound with (l-1)*(m_1 - m_l) in place of the
/// accumulated surplus; never smaller than the curve value at the same l.
double adjacency_upper_simple(const Graph& g, int l);

StatedPredicate stated_equality_predicate(const Graph& g, GraphMatrixKind kind,
                                          BoundDirection direction);

}  // namespace specbound
