#pragma once

#include "specbound/graph.hpp"
#include "specbound/matrix.hpp"
#include "specbound/rng.hpp"

namespace specbound {

/// Entries drawn from {1, 2} with probability `density` (0 otherwise), then a
/// directed Hamiltonian cycle of ones overlaid on the zero slots, so the
/// pattern is irreducible and every row sum is positive.
NonnegMatrix random_irreducible_matrix(SplitMix64& rng, int n, double density);

/// Erdos-Renyi G(n, p), resampled until connected.
Graph random_connected_graph(SplitMix64& rng, int n, double edge_probability);

}  // namespace specbound
