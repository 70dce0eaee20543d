#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "specbound/errors.hpp"
#include "specbound/matrix.hpp"

namespace specbound {

/// Simple undirected graph on vertices 0..n-1 (1-based in text files).
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int order() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u < v, sorted
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adjacency_;
};

/// Text format: first non-comment line is "n m", then m lines "u v" with
/// 1 <= u < v <= n; '#' comment lines allowed. Either endpoint order is
/// accepted and normalized.
Graph parse_edge_list(std::string_view text);

/// Canonical form: "n m" then the sorted edge list, one "u v" per line.
std::string serialize_edge_list(const Graph& g);

/// BFS all-pairs distances. Unreachable pairs hold -1 and clear `connected`;
/// transmissions/diameter are only meaningful for connected graphs.
struct DistanceData {
  std::vector<std::vector<int>> dist;
  std::vector<long long> transmissions;
  int diameter = 0;
  long long max_transmission = 0;
  long long min_transmission = 0;
  bool connected = true;
};

DistanceData apsp(const Graph& g);

enum class GraphMatrixKind {
  Adjacency,
  SignlessLaplacian,
  Distance,
  DistanceSignlessLaplacian,
  ReciprocalDistance,
};

/// CLI tokens: adjacency, signless-laplacian, distance,
/// distance-signless-laplacian, reciprocal.
std::string kind_token(GraphMatrixKind kind);
GraphMatrixKind parse_kind_token(std::string_view token);

/// Adjacency and signless Laplacian require no isolated vertices; the three
/// distance-family kinds require a connected graph.
NonnegMatrix build_matrix(const Graph& g, GraphMatrixKind kind);

/// Row sums of the reciprocal distance matrix.
struct ReciprocalStats {
  std::vector<double> values;
  double max_value = 0.0;
  double min_value = 0.0;
};

ReciprocalStats reciprocal_stats(const Graph& g);

}  // namespace specbound
