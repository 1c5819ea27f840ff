#include "hypercount/dah.hpp"

#include <algorithm>

#include "hypercount/errors.hpp"

namespace hypercount {

Dah::Dah(Hypergraph hg, std::vector<int> order) : hg_(std::move(hg)), order_(std::move(order)) {
  const int n = hg_.vertex_count();
  if (static_cast<int>(order_.size()) != n)
    throw input_error("ordering must cover exactly the vertex set");
  position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int v = order_[p];
    if (v < 0 || v >= n || position_[v] != -1)
      throw input_error("ordering must be a bijection over the vertex set");
    position_[v] = p;
  }
  ordered_edges_.reserve(hg_.edge_count());
  for (const auto& e : hg_.edges()) {
    std::vector<int> t = e;
    std::sort(t.begin(), t.end(), [&](int a, int b) { return position_[a] < position_[b]; });
    ordered_edges_.push_back(std::move(t));
  }
  std::vector<char> first_everywhere(n, 1);
  for (const auto& t : ordered_edges_)
    for (size_t i = 1; i < t.size(); ++i) first_everywhere[t[i]] = 0;
  for (int v = 0; v < n; ++v)
    if (first_everywhere[v]) sources_.push_back(v);
}

Digraph l_skeleton(const Dah& d, long long l) {
  std::vector<std::pair<int, int>> arcs;
  for (const auto& t : d.ordered_edges()) {
    const long long a = static_cast<long long>(t.size());
    const long long heads = std::min(l + 1, a);
    for (long long i = 0; i < heads; ++i)
      for (long long j = i + 1; j < a; ++j) arcs.emplace_back(t[i], t[j]);
  }
  return Digraph(d.hypergraph().vertex_count(), std::move(arcs));
}

}  // namespace hypercount
