#pragma once

#include <optional>
#include <vector>

#include "hypercount/dah.hpp"
#include "hypercount/digraph.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Vertex set of the digraph; one hyperedge Reach(s) per source, deduplicated.
// Input error on a cyclic digraph.
Hypergraph reachability_hypergraph(const Digraph& d);

struct JoinTree {
  bool exists = false;
  std::vector<int> parent;  // per hyperedge; -1 at the root; empty when none
};

// GYO ear removal: repeatedly strip vertices in exactly one hyperedge, then
// absorb hyperedges contained in others (recording the link). Reduces to a
// single hyperedge iff a join tree exists.
JoinTree gyo_join_tree(const Hypergraph& f);
bool is_alpha_acyclic(const Hypergraph& f);

struct DagTreeDecomposition {
  std::vector<std::vector<int>> bags;  // source subsets
  std::vector<int> parent;             // -1 at the root
  int width() const;
};

// Searches for a rooted tree of source-subset bags of size <= tau_max whose
// reach sets satisfy the connectivity axiom (for any two bags, the
// intersection of their reaches is contained in every bag's reach on the tree
// path between them). Sources with identical reach collapse to one
// representative during the search and re-attach as singleton leaves.
// Guard: at most 12 sources.
std::optional<DagTreeDecomposition> dag_tree_decomposition(const Digraph& d, int tau_max);

// Minimal tau admitting a decomposition.
int dag_treewidth(const Digraph& d);

// Maximum DAG-treewidth of the l-skeleton across all orderings of H,
// deduplicated by their ordered-edge sets. Guard: at most 10 vertices.
int l_dag_treewidth(const Hypergraph& h, long long l);

struct OrientedDecomposition {
  int tau = 0;
  std::vector<int> ordering;  // a maximizing ordering of V(H)
  DagTreeDecomposition decomposition;
};

// As l_dag_treewidth, also reporting one maximizing ordering and its
// decomposition.
OrientedDecomposition l_dag_treewidth_report(const Hypergraph& h, long long l);

}  // namespace hypercount
