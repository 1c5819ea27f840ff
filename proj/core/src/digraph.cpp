#include "hypercount/digraph.hpp"

#include <algorithm>

#include "hypercount/errors.hpp"

namespace hypercount {

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
  if (n < 0) throw input_error("digraph vertex count must be non-negative");
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      throw input_error("arc mentions a vertex outside [0, n)");
    if (u == v) throw input_error("self-arcs are not allowed");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  out_.resize(n_);
  in_.resize(n_);
  std::vector<int> odeg(n_, 0), ideg(n_, 0);
  for (auto [u, v] : arcs_) {
    ++odeg[u];
    ++ideg[v];
  }
  for (int v = 0; v < n_; ++v) {
    out_[v].reserve(odeg[v]);
    in_[v].reserve(ideg[v]);
  }
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
  }
}

bool Digraph::has_arc(int u, int v) const {
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

int Digraph::max_out_degree() const {
  size_t best = 0;
  for (const auto& a : out_) best = std::max(best, a.size());
  return static_cast<int>(best);
}

std::vector<int> Digraph::source_vertices() const {
  std::vector<int> srcs;
  for (int v = 0; v < n_; ++v)
    if (in_[v].empty()) srcs.push_back(v);
  return srcs;
}

bool Digraph::is_acyclic() const {
  std::vector<int> indeg(n_, 0);
  for (auto [u, v] : arcs_) ++indeg[v];
  std::vector<int> queue;
  for (int v = 0; v < n_; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  size_t seen = 0;
  while (seen < queue.size()) {
    int u = queue[seen++];
    for (int v : out_[u])
      if (--indeg[v] == 0) queue.push_back(v);
  }
  return static_cast<int>(queue.size()) == n_;
}

std::vector<int> reach_set(const Digraph& d, const std::vector<int>& s) {
  std::vector<char> seen(d.vertex_count(), 0);
  std::vector<int> stack;
  for (int v : s) {
    if (v < 0 || v >= d.vertex_count()) throw input_error("reach set seed outside [0, n)");
    if (!seen[v]) {
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : d.out()[u])
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
  }
  std::vector<int> result;
  for (int v = 0; v < d.vertex_count(); ++v)
    if (seen[v]) result.push_back(v);
  return result;
}

}  // namespace hypercount
