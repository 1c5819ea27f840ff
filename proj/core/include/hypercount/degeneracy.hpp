#pragma once

#include <vector>

#include "hypercount/dah.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

struct DegeneracyResult {
  std::vector<int> ordering;  // deletion order v_0..v_{n-1}
  int kappa_l = 0;            // max, over steps, of the deleted vertex's degree
  int max_l_outdegree = 0;    // of the orientation induced by the ordering
};

// Peels minimum-degree vertices from the current trimmed structure, tracking
// per-edge deleted-vertex counters and deduplicating trimmed edges (the copy
// with fewer deletions survives; ties keep the lower edge index; losers stay
// deleted). Arity-1 trimmed edges keep contributing to degrees until their
// counter exceeds l. Ties among minimum-degree vertices go to the lowest
// vertex index.
DegeneracyResult compute_ordering(const Hypergraph& g, long long l);

// Orders the hypergraph by the given permutation (deletion order).
Dah orient(const Hypergraph& g, const std::vector<int>& ordering);

// Maximum out-degree of the ordering's l-skeleton.
int max_l_outdegree(const Dah& d, long long l);

// Exact reference value: maximizes the minimum degree over the induced
// l-trimmed subhypergraphs of all nonempty vertex subsets. Guard: <= 16
// vertices.
int brute_degeneracy(const Hypergraph& g, long long l);

}  // namespace hypercount
