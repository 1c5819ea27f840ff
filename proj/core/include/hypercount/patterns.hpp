#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "hypercount/dah.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// One representative ordering per equivalence class of orderings with the
// same per-edge tuples, grouped up to isomorphism. `size` counts the distinct
// per-edge-tuple assignments in the class; counting formulas weight each
// class representative by it.
struct OrientationClass {
  Dah rep;
  long long size = 0;
};

// All acyclic orientations of H up to isomorphism. Guard: <= 10 vertices.
std::vector<Dah> acyclic_orientations(const Hypergraph& h);
std::vector<OrientationClass> orientation_classes(const Hypergraph& h);

struct WeightedPattern {
  Hypergraph hg;
  Rational coeff;
};

// Quotients by partitions whose blocks are connected through shared
// hyperedges, weighted by the number of generating partitions. Satisfies
// Hom(G,H) = sum over entries of coeff * arity-preserving-hom(G, entry).
std::vector<WeightedPattern> contract_set(const Hypergraph& h);

// Quotients by all partitions, weighted by partition-lattice Moebius values
// over |Aut(H)|; zero aggregates are dropped. Satisfies
// Sub(G,H) = sum over entries of coeff * Hom(G, entry).
std::vector<WeightedPattern> quotient_set(const Hypergraph& h);

struct PatternBasis {
  std::vector<WeightedPattern> contract;
  std::vector<WeightedPattern> quotient;
  long long aut_count = 1;
};
PatternBasis pattern_basis(const Hypergraph& h);

// Witness that H itself meets the obstruction conditions for level l: a core
// C of size >= 3 whose l-trimmed induced subhypergraph has no edge of arity
// >= 2, components D_i of the rest (with their touching edge sets E_i) such
// that no E_i spans all of C, and every core vertex c has some E_i covering
// C minus c while avoiding c.
struct ObstructionWitness {
  std::vector<Vertex> core;
  std::vector<std::vector<Vertex>> components;
  std::vector<std::vector<int>> connectors;  // edge indices, parallel to components
  std::vector<int> assignment;               // per core vertex: certifying connector
};

std::optional<ObstructionWitness> is_obstruction(const Hypergraph& h, long long l);

struct ItsFreeResult {
  bool its_free = true;
  std::vector<Vertex> subset;       // offending S in H's ids
  Hypergraph trimmed;               // induced infinity-trimmed subhypergraph on S
  std::vector<Vertex> trimmed_to_h; // dense id of `trimmed` -> vertex of H
  ObstructionWitness witness;       // relative to `trimmed`
};

// Tests every vertex subset's induced infinity-trimmed subhypergraph for the
// obstruction conditions; reports the first hit.
ItsFreeResult is_its_free(const Hypergraph& h, long long l);

// Longest induced cycle length of a graph (rank <= 2); 0 when acyclic.
// Guard: <= 16 vertices.
int licl(const Hypergraph& graph);

struct ClassifyReport {
  bool its_free = false;
  int tau = 0;
  ItsFreeResult detail;
  std::optional<int> licl_value;  // set when l is unbounded
};

// Runs the obstruction search and the treewidth computation, failing loudly
// if they disagree.
ClassifyReport classify(const Hypergraph& h, long long l);

}  // namespace hypercount
