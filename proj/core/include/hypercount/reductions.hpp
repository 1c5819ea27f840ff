#pragma once

#include <functional>
#include <vector>

#include "hypercount/hypergraph.hpp"
#include "hypercount/patterns.hpp"

namespace hypercount {

using HomCounter = std::function<long long(
    const Hypergraph& input, const Hypergraph& pattern, long long l)>;

// Homomorphisms of the pattern into the colored input whose images hit every
// palette color, by inclusion-exclusion over color subsets with the counter
// evaluating each color-restricted induced subhypergraph. The palette must
// have exactly as many colors as the pattern has vertices.
long long colorful_hom_count(const ColoredHypergraph& input,
                             const Hypergraph& pattern, long long l,
                             const HomCounter& counter);

// k+1 vertices with every k-subset as a hyperedge; k >= 2.
Hypergraph build_simplex(int k);

// Recipe for the hardness construction: a witness obstruction inside the
// pattern, a vertex group hanging off each core vertex, the pattern edges
// wired through each group, the part of the pattern outside the witness, and
// the color assignment (core vertex i gets color i, the rest get the colors
// above the core).
struct GadgetSpec {
  Hypergraph pattern;
  std::vector<Vertex> core;                   // witness core, pattern ids
  std::vector<std::vector<Vertex>> groups;    // per core vertex, pattern ids
  std::vector<std::vector<int>> group_edges;  // per core vertex, pattern edge indices
  std::vector<Vertex> external_vertices;      // pattern ids outside the witness
  std::vector<int> external_edges;            // pattern edge indices fully outside
  std::vector<int> pi;                        // pattern vertex -> color
};

// Finds a witness via the obstruction search and derives the grouping; input
// error when the pattern has no witness at this level.
GadgetSpec make_gadget_spec(const Hypergraph& pattern, long long l);

// The colored input built from the recipe: input vertices keep their colors,
// one shared copy of the external part is added, and every colorful input
// edge spawns a fresh copy of the group of its missing color, wired to the
// edge's own vertices at the core positions. Input edges must have arity one
// below the core size; non-colorful edges spawn nothing.
ColoredHypergraph build_gadget(const ColoredHypergraph& input,
                               const GadgetSpec& spec, long long l);

// Degeneracy of a gadget, for confirming it stays flat as the input grows.
long long gadget_degeneracy_check(const ColoredHypergraph& gadget, long long l);

// Vertices V(a) x V(b); for every edge pair, each subset of the cell grid
// that projects onto all of both edges becomes a hyperedge.
Hypergraph tensor_product(const Hypergraph& a, const Hypergraph& b);

// Exact solution of m x = rhs; input error when the shapes disagree or m is
// singular.
std::vector<Rational> solve_linear_system(std::vector<std::vector<Rational>> m,
                                          std::vector<Rational> rhs);

struct BasisFamily {
  std::vector<Hypergraph> blowups;            // one per pattern
  std::vector<std::vector<Rational>> matrix;  // matrix[i][j] = homs of pattern j into blowup i
};

// Assigns small vertex weights to each pattern, searching by total increment
// above all-ones, until the blow-up family has an invertible hom matrix.
// Guard error when the weight budget runs out.
BasisFamily build_basis_family(const std::vector<Hypergraph>& patterns);

// Tensor instances of the input with each blow-up; their sub counts pin down
// the hom counts of the input through the family matrix.
std::vector<Hypergraph> build_sub_to_hom_instances(
    const Hypergraph& input, const std::vector<Hypergraph>& patterns,
    const BasisFamily& family);

// Randomized simplex detection demo: repeatedly color the input uniformly
// with k+1 colors and test the gadget of a core-obstruction pattern for a
// colorful copy. One-sided: a true result is certain; a false result errs
// with probability at most (1 - (k+1)^-(k+1))^trials.
bool color_coding_simplex(const Hypergraph& input, int k, int trials,
                          unsigned long long seed = 1);

}  // namespace hypercount
