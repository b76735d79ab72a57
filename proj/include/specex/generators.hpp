#pragma once

#include <random>
#include <vector>

#include "specex/graph.hpp"

namespace specex {

/// Kneser graph: vertices are the t-subsets of {0..m-1} in lexicographic
/// order, edges join disjoint subsets. Requires m > t >= 1.
/// kneser(2D+1, D) is the Odd graph of diameter D.
Graph kneser(int m, int t);

/// Folded m-cube for odd m >= 3: vertices are the (m-1)-bit strings ordered
/// by value, edges join strings at Hamming distance 1 or m-1. The result is
/// m-regular on 2^(m-1) vertices.
Graph folded_cube(int m);

Graph cycle(int n);                        // n >= 3
Graph complete(int n);                     // n >= 1
Graph complete_bipartite(int a, int b);    // a, b >= 1
Graph hypercube(int m);                    // m >= 1, 2^m vertices
Graph circulant(int n, const std::vector<int>& connections);

/// Uniformish random connected k-regular graph: a deterministic k-regular
/// start mixed by random degree-preserving 2-edge switches, resampled until
/// connected. Requires nk even, 0 <= k < n. Fixture machinery for the
/// randomized identity sweeps.
Graph random_connected_regular(int n, int k, std::mt19937_64& rng);

/// Random labeled connected graph via edge probability + resampling.
Graph random_connected_graph(int n, double edge_prob, std::mt19937_64& rng);

/// Random relabeling of g.
Graph random_relabel(const Graph& g, std::mt19937_64& rng);

}  // namespace specex
