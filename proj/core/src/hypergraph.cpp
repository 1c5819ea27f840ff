#include "hypercount/hypergraph.hpp"

#include <algorithm>
#include <numeric>

#include "hypercount/errors.hpp"

namespace hypercount {

Hypergraph::Hypergraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw input_error("hypergraph vertex count must be non-negative");
  for (auto& e : edges) {
    if (e.empty()) throw input_error("hyperedges must have arity >= 1");
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.front() < 0 || e.back() >= n_)
      throw input_error("hyperedge mentions a vertex outside [0, n)");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& e : edges_) rank_ = std::max(rank_, static_cast<int>(e.size()));
  incidence_.assign(n_, {});
  for (int i = 0; i < edge_count(); ++i)
    for (Vertex v : edges_[i]) incidence_[v].push_back(i);
}

bool Hypergraph::has_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> Hypergraph::degrees() const {
  std::vector<int> deg(n_, 0);
  for (int v = 0; v < n_; ++v) deg[v] = static_cast<int>(incidence_[v].size());
  return deg;
}

InducedTrimmed induced_trimmed(const Hypergraph& g, const std::vector<Vertex>& s,
                               const TrimConfig& cfg) {
  std::vector<Vertex> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.vertex_count()))
    throw input_error("trim subset mentions an unknown vertex");

  std::vector<int> dense(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) dense[sorted[i]] = i;

  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    Edge inside;
    long long outside = 0;
    for (Vertex v : e) {
      if (dense[v] >= 0)
        inside.push_back(dense[v]);
      else
        ++outside;
    }
    if (inside.empty() || outside > cfg.l) continue;
    if (!cfg.keep_arity_one && inside.size() == 1) continue;
    kept.push_back(std::move(inside));
  }
  return {Hypergraph(static_cast<int>(sorted.size()), std::move(kept)), std::move(sorted)};
}

Hypergraph clique_completion(const Hypergraph& h) {
  std::vector<Edge> pairs;
  for (const auto& e : h.edges())
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) pairs.push_back({e[i], e[j]});
  return Hypergraph(h.vertex_count(), std::move(pairs));
}

Components connected_components(const Hypergraph& h) {
  std::vector<int> parent(h.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const auto& e : h.edges())
    for (size_t i = 1; i < e.size(); ++i) parent[find(e[0])] = find(e[i]);

  Components comps;
  comps.id.assign(h.vertex_count(), -1);
  for (int v = 0; v < h.vertex_count(); ++v) {
    int root = find(v);
    if (comps.id[root] < 0) comps.id[root] = comps.count++;
    comps.id[v] = comps.id[root];
  }
  return comps;
}

}  // namespace hypercount
