#pragma once

#include <vector>

#include "hypercount/digraph.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Directed acyclic hypergraph: a hypergraph plus a total vertex ordering.
// Each hyperedge is read as the list of its vertices sorted by the ordering.
class Dah {
 public:
  Dah() = default;
  // order[p] = vertex at rank-position p; must be a permutation of [0, n).
  Dah(Hypergraph hg, std::vector<int> order);

  const Hypergraph& hypergraph() const { return hg_; }
  const std::vector<int>& order() const { return order_; }
  const std::vector<int>& position() const { return position_; }
  // Hyperedges as position-sorted tuples, parallel to hypergraph().edges().
  const std::vector<std::vector<int>>& ordered_edges() const { return ordered_edges_; }
  // Vertices that come first in every hyperedge containing them (this
  // includes vertices in no hyperedge at all).
  const std::vector<int>& sources() const { return sources_; }

 private:
  Hypergraph hg_;
  std::vector<int> order_;
  std::vector<int> position_;
  std::vector<std::vector<int>> ordered_edges_;
  std::vector<int> sources_;
};

// Arcs v_i -> v_j for every ordered hyperedge (v_1..v_a), i <= min(l+1, a),
// i < j <= a; deduplicated.
Digraph l_skeleton(const Dah& d, long long l);

}  // namespace hypercount
