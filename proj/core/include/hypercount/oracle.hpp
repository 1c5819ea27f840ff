#pragma once

#include <cstdint>

#include "hypercount/dah.hpp"
#include "hypercount/hypergraph.hpp"

namespace hypercount {

// Size limits for the exhaustive reference counters. Exceeding any of them
// raises a guard error instead of silently running forever.
struct OracleGuard {
  int max_pattern_vertices = 6;
  int max_input_vertices = 10;
  std::int64_t max_maps = 100000000;
};

// Number of maps V(pattern) -> V(input) sending every pattern edge onto an
// input edge as a vertex set (the image may collapse vertices).
std::int64_t brute_hom_count(const Hypergraph& input, const Hypergraph& pattern,
                             const OracleGuard& guard = {});

// As brute_hom_count, but the image of each edge must keep its arity.
std::int64_t brute_arity_hom_count(const Hypergraph& input, const Hypergraph& pattern,
                                   const OracleGuard& guard = {});

// Number of subhypergraph copies: injective edge-preserving maps divided by
// the pattern's automorphism count.
std::int64_t brute_sub_count(const Hypergraph& input, const Hypergraph& pattern,
                             const OracleGuard& guard = {});

// Homomorphisms that map every pattern vertex to a different input color.
std::int64_t brute_colorful_hom_count(const ColoredHypergraph& input,
                                      const Hypergraph& pattern,
                                      const OracleGuard& guard = {});

// Number of (k+1)-subsets of the input whose every k-subset is a hyperedge.
std::int64_t brute_simplex_count(const Hypergraph& input, int k,
                                 const OracleGuard& guard = {});

// True when some k vertices with k distinct colors have every (k-1)-subset
// present as a hyperedge.
bool brute_colorful_simplex_exists(const ColoredHypergraph& input, int k,
                                   const OracleGuard& guard = {});

// Position-wise maps of the pattern's ordered edges onto the input's.
std::int64_t brute_dah_hom_count(const Dah& input, const Dah& pattern,
                                 const OracleGuard& guard = {});

}  // namespace hypercount
