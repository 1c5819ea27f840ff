#pragma once

#include <cstdint>
#include <vector>

#include "hypercount/dah.hpp"
#include "hypercount/digraph.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Canonical key: equal iff the underlying structures are isomorphic.
// Computed by minimizing an edge-set encoding over vertex permutations,
// pruned by iterated degree/arity-profile refinement. Guard: <= 12 vertices.
using CanonicalKey = std::vector<long long>;

CanonicalKey canonical_form(const Hypergraph& h);
// Ordering-aware form: isomorphism must map ordered hyperedges to ordered
// hyperedges position-wise. Two DAHs with the same per-edge orderings are
// identified regardless of how the total order arranges untouched vertices.
CanonicalKey canonical_form(const Dah& d);
CanonicalKey canonical_form(const Digraph& d);

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b);
bool is_isomorphic(const Dah& a, const Dah& b);

// Number of vertex permutations mapping the edge set onto itself.
long long automorphism_count(const Hypergraph& h);

}  // namespace hypercount
