#pragma once

#include <functional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hypercount/dagdecomp.hpp"
#include "hypercount/dah.hpp"
#include "hypercount/digraph.hpp"
#include "hypercount/hashing.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

// A partial homomorphism: (pattern vertex, input vertex) pairs sorted by
// pattern vertex, with distinct pattern vertices.
using PartialHom = std::vector<std::pair<int, int>>;

// Counts keyed by partial homomorphisms. All keys in one table share a
// domain; a missing key means zero.
using CountTable = std::unordered_map<PartialHom, long long, PairVectorHash>;

// Streams every digraph homomorphism from the subgraph of hsk induced by the
// forward reach of the seed set into gsk. Seed images are chosen freely;
// every later vertex only tries out-neighbours of an already placed
// in-neighbour, so the work is bounded by the out-degree of gsk.
void enumerate_skeleton_homs(
    const Digraph& hsk, const std::vector<int>& seeds, const Digraph& gsk,
    const std::function<void(const PartialHom&)>& visit);

std::vector<PartialHom> enumerate_skeleton_homs(const Digraph& hsk,
                                                const std::vector<int>& seeds,
                                                const Digraph& gsk);

// Skeleton homomorphisms over the reach of the bag, filtered so that every
// ordered edge of hd lying fully inside the reach maps position-wise onto an
// ordered edge of gd. The result contains every map that extends to a full
// homomorphism of hd.
std::vector<PartialHom> filtered_homs(const Dah& hd, const std::vector<int>& bag,
                                      const Dah& gd, long long l);

// The table of the recursive dynamic program for the bag at index bag of the
// decomposition: keys are filtered maps over the reach of that bag, values
// count extensions to the reach of the bag's subtree. Values never exceed the
// true extension count and match it whenever the map extends to all of hd.
CountTable homcount_l(const Dah& hd, const Dah& gd, int bag,
                      const DagTreeDecomposition& tree, long long l);

// Exact number of homomorphisms of hd into gd that map every ordered edge
// position-wise onto an ordered edge.
long long count_dah_homs(const Dah& hd, const Dah& gd, long long l);

// Exact number of homomorphisms of the pattern into the input.
long long count_homs(const Hypergraph& input, const Hypergraph& pattern,
                     long long l, int threads = 1);

// Exact number of subhypergraphs of the input isomorphic to the pattern.
long long count_subs(const Hypergraph& input, const Hypergraph& pattern,
                     long long l, int threads = 1);

}  // namespace hypercount
