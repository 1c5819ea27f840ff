#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace hypercount {

using Vertex = int;
// A hyperedge: sorted, duplicate-free vertex list (set semantics).
using Edge = std::vector<Vertex>;

// Trimming level; kLInf means "no limit on vertices outside the kept set".
inline constexpr long long kLInf = std::numeric_limits<long long>::max() / 4;

// Immutable hypergraph over dense vertex ids [0, n). Hyperedges are
// deduplicated sets of arity >= 1 (arity-1 edges arise internally from
// trimming and quotients; input files reject them).
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int rank() const { return rank_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }
  // Edge indices containing each vertex.
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  bool has_edge(Edge e) const;  // normalizes e, then binary-searches
  std::vector<int> degrees() const;
  bool operator==(const Hypergraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  int rank_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

// Vertex-colored hypergraph; every vertex carries exactly one color.
struct ColoredHypergraph {
  Hypergraph hg;
  std::vector<int> color;  // size == hg.vertex_count()
};

struct TrimConfig {
  long long l = kLInf;
  bool keep_arity_one = true;
};

// Induced l-trimmed subhypergraph on S: keeps the restriction of e to S for
// every edge with at most l vertices outside S and nonempty intersection. The
// result lives on dense ids [0, |S|); vertex_map[i] is the original id.
struct InducedTrimmed {
  Hypergraph hg;
  std::vector<Vertex> vertex_map;  // sorted original ids
};
InducedTrimmed induced_trimmed(const Hypergraph& g, const std::vector<Vertex>& s,
                               const TrimConfig& cfg);

// Replaces every hyperedge by the clique on its vertices (rank <= 2 output).
Hypergraph clique_completion(const Hypergraph& h);

// Connected components induced by the edges (arity-1 edges connect nothing).
// Returns component id per vertex plus the number of components; isolated
// vertices form singleton components.
struct Components {
  std::vector<int> id;  // per vertex
  int count = 0;
};
Components connected_components(const Hypergraph& h);

}  // namespace hypercount
