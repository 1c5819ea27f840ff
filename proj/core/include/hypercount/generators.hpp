#pragma once

#include <vector>

#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Random hypergraph whose greedy peeling value at level 0 stays at or below
// the requested bound: every vertex above the first spawns at most that many
// edges, each reaching only backwards. Requires n-1 <= m <= (n-1)*bound;
// duplicate draws are dropped, so the result can have fewer than m edges.
Hypergraph random_bounded_degeneracy(int n, long long m, int rank, int bound,
                                     unsigned long long seed);

// Random hypergraph with up to m distinct edges of arity 2..rank.
Hypergraph random_hypergraph(int n, long long m, int rank,
                             unsigned long long seed);

// Random hypergraph with up to m distinct edges, all of the given arity.
Hypergraph random_uniform_hypergraph(int n, long long m, int arity,
                                     unsigned long long seed);

// Uniform random color per vertex from {0, ..., colors-1}.
std::vector<int> random_coloring(int n, int colors, unsigned long long seed);

}  // namespace hypercount
