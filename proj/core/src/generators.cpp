#include "hypercount/generators.hpp"

#include <algorithm>
#include <random>

#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

// Draws `count` distinct vertices below `limit`, appending to `edge`.
// `rng() % n` is used throughout instead of a distribution so that the same
// seed reproduces the same instance on every platform.
void draw_backwards(std::mt19937_64& rng, int limit, int count, Edge& edge) {
  while (count > 0) {
    int v = static_cast<int>(rng() % limit);
    if (std::find(edge.begin(), edge.end(), v) != edge.end()) continue;
    edge.push_back(v);
    --count;
  }
}

Hypergraph dedup_edges(int n, std::vector<Edge> edges) {
  for (Edge& e : edges) std::sort(e.begin(), e.end());
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(n, std::move(edges));
}

}  // namespace

Hypergraph random_bounded_degeneracy(int n, long long m, int rank, int bound,
                                     unsigned long long seed) {
  if (n < 2) throw input_error("bounded-degeneracy instance needs at least two vertices");
  if (rank < 2) throw input_error("rank must be at least 2");
  if (bound < 1) throw input_error("degeneracy bound must be at least 1");
  if (m < n - 1 || m > static_cast<long long>(n - 1) * bound)
    throw input_error("edge count out of range for the degeneracy bound");
  std::mt19937_64 rng(seed);
  std::vector<int> spawner;
  spawner.reserve(m);
  for (int v = 1; v < n; ++v) spawner.push_back(v);
  std::vector<int> slots;
  slots.reserve(static_cast<std::size_t>(n - 1) * (bound - 1));
  for (int v = 1; v < n; ++v)
    for (int s = 1; s < bound; ++s) slots.push_back(v);
  for (std::size_t i = slots.size(); i > 1; --i)
    std::swap(slots[i - 1], slots[rng() % i]);
  for (long long extra = 0; extra < m - (n - 1); ++extra)
    spawner.push_back(slots[extra]);
  std::vector<Edge> edges;
  edges.reserve(spawner.size());
  for (int v : spawner) {
    int cap = std::min(rank, v + 1);
    int arity = 2 + static_cast<int>(rng() % (cap - 1));
    Edge e{v};
    draw_backwards(rng, v, arity - 1, e);
    edges.push_back(std::move(e));
  }
  return dedup_edges(n, std::move(edges));
}

Hypergraph random_hypergraph(int n, long long m, int rank,
                             unsigned long long seed) {
  if (n < 2) throw input_error("random instance needs at least two vertices");
  if (rank < 2) throw input_error("rank must be at least 2");
  if (m < 0) throw input_error("edge count must be non-negative");
  std::mt19937_64 rng(seed);
  int cap = std::min(rank, n);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    int arity = 2 + static_cast<int>(rng() % (cap - 1));
    Edge e;
    draw_backwards(rng, n, arity, e);
    edges.push_back(std::move(e));
  }
  return dedup_edges(n, std::move(edges));
}

Hypergraph random_uniform_hypergraph(int n, long long m, int arity,
                                     unsigned long long seed) {
  if (arity < 2 || arity > n) throw input_error("arity out of range for the vertex count");
  if (m < 0) throw input_error("edge count must be non-negative");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (long long i = 0; i < m; ++i) {
    Edge e;
    draw_backwards(rng, n, arity, e);
    edges.push_back(std::move(e));
  }
  return dedup_edges(n, std::move(edges));
}

std::vector<int> random_coloring(int n, int colors, unsigned long long seed) {
  if (colors < 1) throw input_error("coloring needs at least one color");
  std::mt19937_64 rng(seed);
  std::vector<int> out(n);
  for (int& c : out) c = static_cast<int>(rng() % colors);
  return out;
}

}  // namespace hypercount
