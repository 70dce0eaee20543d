#include "specbound/graph_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "specbound/numeric.hpp"

namespace specbound {

namespace {

bool is_distance_family(GraphMatrixKind kind) {
  return kind == GraphMatrixKind::Distance || kind == GraphMatrixKind::DistanceSignlessLaplacian ||
         kind == GraphMatrixKind::ReciprocalDistance;
}

std::vector<double> degrees_of(const Graph& g) {
  std::vector<double> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  return d;
}

bool uniform_matrix(const NonnegMatrix& a, double diag_value, double offdiag_value) {
  const int n = a.order();
  for (int i = 0; i < n; ++i)
    if (!nearly_equal(a(i, i), diag_value, kCertificateTol)) return false;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !nearly_equal(a(i, j), offdiag_value, kCertificateTol)) return false;
  return true;
}

BoundParameters instantiation_parameters(const Graph& g, const DistanceData* dd,
                                         GraphMatrixKind kind, BoundDirection direction) {
  const int n = g.order();
  double dmin = n, dmax = 0;
  for (int v = 0; v < n; ++v) {
    dmin = std::min<double>(dmin, g.degree(v));
    dmax = std::max<double>(dmax, g.degree(v));
  }
  BoundParameters p;
  if (direction == BoundDirection::Upper) {
    switch (kind) {
      case GraphMatrixKind::Adjacency:
        p = {0.0, 1.0, dmax / dmin};
        break;
      case GraphMatrixKind::SignlessLaplacian:
        p = {dmax, 1.0, dmax / dmin};
        break;
      case GraphMatrixKind::Distance:
        p = {0.0, static_cast<double>(dd->diameter),
             static_cast<double>(dd->max_transmission) / static_cast<double>(dd->min_transmission)};
        break;
      case GraphMatrixKind::DistanceSignlessLaplacian:
        p = {static_cast<double>(dd->max_transmission), static_cast<double>(dd->diameter),
             static_cast<double>(dd->max_transmission) / static_cast<double>(dd->min_transmission)};
        break;
      case GraphMatrixKind::ReciprocalDistance: {
        const ReciprocalStats rs = reciprocal_stats(g);
        p = {0.0, 1.0, rs.max_value / rs.min_value};
        break;
      }
    }
  } else {
    switch (kind) {
      case GraphMatrixKind::Distance:
        p = {0.0, 1.0,
             static_cast<double>(dd->min_transmission) / static_cast<double>(dd->max_transmission)};
        break;
      case GraphMatrixKind::DistanceSignlessLaplacian:
        p = {static_cast<double>(dd->min_transmission), 1.0,
             static_cast<double>(dd->min_transmission) / static_cast<double>(dd->max_transmission)};
        break;
      default:
        throw std::logic_error("no stated lower-bound parameters for this kind");
    }
  }
  return p;
}

}  // namespace

bool has_stated_theorem(GraphMatrixKind kind, BoundDirection direction) {
  if (direction == BoundDirection::Upper) return true;
  return kind == GraphMatrixKind::Distance || kind == GraphMatrixKind::DistanceSignlessLaplacian;
}

std::vector<double> specialized_avg2(const Graph& g, const DistanceData* dd,
                                     GraphMatrixKind kind) {
  const int n = g.order();
  std::vector<double> m(n, 0.0);
  const auto add_degree_ratios = [&] {
    for (int i = 0; i < n; ++i) {
      double s = 0.0;
      for (int j : g.neighbors(i)) s += g.degree(j);
      m[i] += s / g.degree(i);
    }
  };
  switch (kind) {
    case GraphMatrixKind::Adjacency:
      add_degree_ratios();
      break;
    case GraphMatrixKind::SignlessLaplacian:
      for (int i = 0; i < n; ++i) m[i] = g.degree(i);
      add_degree_ratios();
      break;
    case GraphMatrixKind::Distance:
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += dd->dist[i][j] * static_cast<double>(dd->transmissions[j]);
        m[i] = s / static_cast<double>(dd->transmissions[i]);
      }
      break;
    case GraphMatrixKind::DistanceSignlessLaplacian:
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j) s += dd->dist[i][j] * static_cast<double>(dd->transmissions[j]);
        m[i] = static_cast<double>(dd->transmissions[i]) + s / static_cast<double>(dd->transmissions[i]);
      }
      break;
    case GraphMatrixKind::ReciprocalDistance: {
      std::vector<double> r(n, 0.0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j) r[i] += 1.0 / dd->dist[i][j];
      for (int i = 0; i < n; ++i) {
        double s = 0.0;
        for (int j = 0; j < n; ++j)
          if (i != j) s += (1.0 / dd->dist[i][j]) * r[j];
        m[i] = s / r[i];
      }
      break;
    }
  }
  return m;
}

GraphBoundReport graph_bound(const Graph& g, GraphMatrixKind kind, BoundDirection direction) {
  if (g.order() < 2) throw std::invalid_argument("graph bounds require at least two vertices");

  GraphBoundReport rep;
  rep.kind = kind;
  rep.direction = direction;

  const NonnegMatrix matrix = build_matrix(g, kind);  // validates the kind's preconditions
  DistanceData dd;
  if (is_distance_family(kind)) dd = apsp(g);

  const bool stated = has_stated_theorem(kind, direction);
  rep.general_instantiation = !stated;

  if (direction == BoundDirection::Upper) {
    rep.parameters = instantiation_parameters(g, &dd, kind, direction);
    rep.avg2 = specialized_avg2(g, &dd, kind);
    rep.curve = evaluate_upper_curve(
        rep.avg2, rep.parameters.diag_extreme,
        rep.parameters.offdiag_extreme * rep.parameters.ratio,
        uniform_matrix(matrix, rep.parameters.diag_extreme, rep.parameters.offdiag_extreme),
        UpperBoundCurve::Stat::Avg2);
  } else if (stated) {
    rep.parameters = instantiation_parameters(g, &dd, kind, direction);
    rep.avg2 = specialized_avg2(g, &dd, kind);
    rep.value = {evaluate_lower_bound(rep.avg2, rep.parameters.diag_extreme,
                                      rep.parameters.offdiag_extreme * rep.parameters.ratio),
                 LowerBoundValue::Kind::Avg2};
  } else {
    // No stated theorem; the general engine on the built matrix.
    const Profile prof = profile(matrix);
    rep.parameters = {prof.diag_min, prof.offdiag_min.value_or(0.0), prof.ratio_min};
    rep.avg2 = prof.avg2;
    rep.value = psi(matrix);
  }

  rep.rho = spectral_radius(matrix);
  rep.general_certificate = direction == BoundDirection::Upper
                                ? upper_certificate(matrix, matrix.order())
                                : lower_certificate(matrix);
  if (stated) rep.stated_predicate = stated_equality_predicate(g, kind, direction);
  return rep;
}

double adjacency_upper_simple(const Graph& g, int l) {
  const int n = g.order();
  if (n < 2) throw std::invalid_argument("at least two vertices required");
  if (l < 1 || l > n) throw std::invalid_argument("index l out of range");
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0)
      throw Error(ErrorCode::IsolatedVertex, "vertex " + std::to_string(v + 1) + " is isolated");

  std::vector<double> m = specialized_avg2(g, nullptr, GraphMatrixKind::Adjacency);
  std::stable_sort(m.begin(), m.end(), std::greater<double>());
  const std::vector<double> d = degrees_of(g);
  const auto [dmin, dmax] = std::minmax_element(d.begin(), d.end());
  const double b = *dmax / *dmin;
  const double excess = (l - 1) * (m[0] - m[l - 1]);
  return bound_quadratic_root(m[l - 1], 0.0, b, excess);
}

StatedPredicate stated_equality_predicate(const Graph& g, GraphMatrixKind kind,
                                          BoundDirection direction) {
  const int n = g.order();
  const DistanceData dd = apsp(g);
  if (!dd.connected) throw Error(ErrorCode::Disconnected, "graph is disconnected");

  StatedPredicate out;
  out.stated = has_stated_theorem(kind, direction);
  if (!out.stated) return out;

  std::vector<double> quantities;
  switch (kind) {
    case GraphMatrixKind::Adjacency:
    case GraphMatrixKind::SignlessLaplacian:
      quantities = degrees_of(g);
      break;
    case GraphMatrixKind::Distance:
    case GraphMatrixKind::DistanceSignlessLaplacian:
      quantities.assign(dd.transmissions.begin(), dd.transmissions.end());
      break;
    case GraphMatrixKind::ReciprocalDistance:
      quantities = reciprocal_stats(g).values;
      break;
  }
  out.quantities = quantities;

  const std::vector<double> m = specialized_avg2(g, &dd, kind);
  bool uniform = true;
  for (int i = 1; i < n && uniform; ++i)
    if (!nearly_equal(m[i], m[0], kCertificateTol)) uniform = false;
  if (uniform) {
    out.holds = true;
    out.via_uniform_avg2 = true;
    return out;
  }

  // The distance-family upper conditions are uniformity only.
  const bool vertex_form =
      !(direction == BoundDirection::Upper &&
        (kind == GraphMatrixKind::Distance || kind == GraphMatrixKind::DistanceSignlessLaplacian));
  if (!vertex_form) return out;

  for (int v = 0; v < n; ++v) {
    if (!nearly_equal(quantities[v], n - 1.0, kCertificateTol)) continue;
    bool ok = true;
    double other = -1.0;
    for (int u = 0; u < n && ok; ++u) {
      if (u == v) continue;
      if (other < 0.0)
        other = quantities[u];
      else if (!nearly_equal(quantities[u], other, kCertificateTol))
        ok = false;
      const bool strict = direction == BoundDirection::Upper
                              ? quantities[v] - quantities[u] > kCertificateTol
                              : quantities[u] - quantities[v] > kCertificateTol;
      if (!strict) ok = false;
    }
    if (ok) {
      out.holds = true;
      out.witness_vertex = v;
      out.quantities.clear();
      out.quantities.push_back(quantities[v]);
      for (int u = 0; u < n; ++u)
        if (u != v) out.quantities.push_back(quantities[u]);
      return out;
    }
  }
  return out;
}

}  // namespace specbound
