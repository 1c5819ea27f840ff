#pragma once

#include <utility>
#include <vector>

namespace hypercount {

// Immutable simple digraph over dense vertex ids [0, n); no self-arcs.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<std::pair<int, int>> arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<std::vector<int>>& out() const { return out_; }
  const std::vector<std::vector<int>>& in() const { return in_; }

  bool has_arc(int u, int v) const;  // binary search in out_[u]
  int max_out_degree() const;
  std::vector<int> source_vertices() const;  // in-degree zero
  bool is_acyclic() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

// Forward closure of S (S itself included), sorted.
std::vector<int> reach_set(const Digraph& d, const std::vector<int>& s);

}  // namespace hypercount
