#include "specbound/random_gen.hpp"

#include <vector>

namespace specbound {

NonnegMatrix random_irreducible_matrix(SplitMix64& rng, int n, double density) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  NonnegMatrix a = NonnegMatrix::zero(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rng.next_double() < density) a.at(i, j) = 1.0 + static_cast<double>(rng.next_below(2));
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    if (n > 1 && a(i, j) == 0.0) a.at(i, j) = 1.0;
    if (n == 1 && a(0, 0) == 0.0) a.at(0, 0) = 1.0;
  }
  return a;
}

Graph random_connected_graph(SplitMix64& rng, int n, double edge_probability) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  constexpr int kMaxResamples = 200000;
  for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_double() < edge_probability) edges.emplace_back(u, v);
    Graph g(n, std::move(edges));
    if (apsp(g).connected) return g;
  }
  throw Error(ErrorCode::InvariantViolation,
              "could not sample a connected graph; raise the edge probability");
}

}  // namespace specbound
