#include "hypercount/dagdecomp.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>

#include "hypercount/canonical.hpp"
#include "hypercount/errors.hpp"

namespace hypercount {
namespace {

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<int> intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// GYO ear removal over a raw (possibly duplicated) list of sorted sets.
// Reduces to at most one live set iff a join tree exists; absorption links
// form the tree, with parent -1 at the surviving root.
JoinTree raw_gyo(std::vector<std::vector<int>> sets) {
  const int m = static_cast<int>(sets.size());
  JoinTree tree;
  tree.parent.assign(m, -1);
  std::vector<char> live(m, 1);
  int live_count = m;

  bool changed = true;
  while (changed) {
    changed = false;
    std::map<int, int> occurrences;
    for (int i = 0; i < m; ++i)
      if (live[i])
        for (int v : sets[i]) ++occurrences[v];
    for (int i = 0; i < m; ++i) {
      if (!live[i]) continue;
      auto& s = sets[i];
      size_t kept = 0;
      for (int v : s)
        if (occurrences[v] != 1) s[kept++] = v;
      if (kept != s.size()) {
        s.resize(kept);
        changed = true;
      }
    }
    for (int i = 0; i < m && live_count > 1; ++i) {
      if (!live[i]) continue;
      for (int j = 0; j < m; ++j) {
        if (j == i || !live[j]) continue;
        if (subset_of(sets[i], sets[j])) {
          tree.parent[i] = j;
          live[i] = 0;
          --live_count;
          changed = true;
          break;
        }
      }
    }
  }
  tree.exists = live_count <= 1;
  if (!tree.exists) tree.parent.clear();
  return tree;
}

// Direct check of the connectivity axiom: for every bag pair, the
// intersection of their reaches is contained in the reach of every bag on
// the tree path between them.
bool connectivity_holds(const std::vector<std::vector<int>>& reaches,
                        const std::vector<int>& parent) {
  const int t = static_cast<int>(reaches.size());
  std::vector<int> depth(t, 0);
  for (int i = 0; i < t; ++i) {
    int d = 0;
    for (int at = i; parent[at] != -1; at = parent[at]) ++d;
    depth[i] = d;
  }
  for (int a = 0; a < t; ++a) {
    for (int b = a + 1; b < t; ++b) {
      std::vector<int> shared = intersection(reaches[a], reaches[b]);
      if (shared.empty()) continue;
      int x = a, y = b;
      while (x != y) {
        int& lower = depth[x] >= depth[y] ? x : y;
        if (!subset_of(shared, reaches[lower])) return false;
        lower = parent[lower];
      }
      if (!subset_of(shared, reaches[x])) return false;
    }
  }
  return true;
}

struct SourceLayout {
  std::vector<int> sources;
  std::vector<int> reps;                      // one source per distinct reach
  std::vector<std::vector<int>> rep_reach;    // parallel to reps
  std::vector<std::pair<int, int>> dups;      // (duplicate source, rep index)
};

SourceLayout analyze_sources(const Digraph& d) {
  SourceLayout layout;
  layout.sources = d.source_vertices();
  std::map<std::vector<int>, int> seen;
  for (int s : layout.sources) {
    std::vector<int> reach = reach_set(d, {s});
    auto it = seen.find(reach);
    if (it == seen.end()) {
      seen.emplace(reach, static_cast<int>(layout.reps.size()));
      layout.reps.push_back(s);
      layout.rep_reach.push_back(std::move(reach));
    } else {
      layout.dups.emplace_back(s, it->second);
    }
  }
  return layout;
}

struct BagSearch {
  const SourceLayout& layout;
  std::vector<unsigned> candidates;           // masks over rep indices
  std::vector<std::vector<int>> candidate_reach;
  std::vector<unsigned> chosen;
  unsigned full = 0;

  explicit BagSearch(const SourceLayout& lay, int tau_max) : layout(lay) {
    const int r = static_cast<int>(lay.reps.size());
    full = r == 32 ? ~0u : (1u << r) - 1;
    for (unsigned mask = 1; mask <= full; ++mask)
      if (std::popcount(mask) <= tau_max) candidates.push_back(mask);
    std::sort(candidates.begin(), candidates.end(), [](unsigned a, unsigned b) {
      int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    candidate_reach.reserve(candidates.size());
    for (unsigned mask : candidates) {
      std::vector<int> reach;
      for (int i = 0; i < r; ++i)
        if (mask & (1u << i)) {
          std::vector<int> merged;
          std::set_union(reach.begin(), reach.end(), lay.rep_reach[i].begin(),
                         lay.rep_reach[i].end(), std::back_inserter(merged));
          reach = std::move(merged);
        }
      candidate_reach.push_back(std::move(reach));
    }
  }

  std::optional<DagTreeDecomposition> search(unsigned covered) {
    if (covered == full) return finish();
    int next_rep = std::countr_one(covered);
    for (size_t c = 0; c < candidates.size(); ++c) {
      if (!(candidates[c] & (1u << next_rep))) continue;
      chosen.push_back(static_cast<unsigned>(c));
      auto found = search(covered | candidates[c]);
      if (found) return found;
      chosen.pop_back();
    }
    return std::nullopt;
  }

  std::optional<DagTreeDecomposition> finish() {
    std::vector<std::vector<int>> reaches;
    reaches.reserve(chosen.size());
    for (unsigned c : chosen) reaches.push_back(candidate_reach[c]);
    JoinTree tree = raw_gyo(reaches);
    if (!tree.exists) return std::nullopt;

    DagTreeDecomposition dec;
    dec.parent = tree.parent;
    const int r = static_cast<int>(layout.reps.size());
    for (unsigned c : chosen) {
      std::vector<int> bag;
      for (int i = 0; i < r; ++i)
        if (candidates[c] & (1u << i)) bag.push_back(layout.reps[i]);
      dec.bags.push_back(std::move(bag));
    }
    for (auto [dup, rep] : layout.dups) {
      int host = -1;
      for (size_t b = 0; b < chosen.size() && host < 0; ++b)
        if (candidates[chosen[b]] & (1u << rep)) host = static_cast<int>(b);
      dec.bags.push_back({dup});
      dec.parent.push_back(host);
      reaches.push_back(layout.rep_reach[rep]);
    }
    if (!connectivity_holds(reaches, dec.parent))
      throw internal_error("decomposition violates the connectivity axiom");
    return dec;
  }
};

}  // namespace

Hypergraph reachability_hypergraph(const Digraph& d) {
  if (!d.is_acyclic()) throw input_error("reachability requires an acyclic digraph");
  std::vector<Edge> edges;
  for (int s : d.source_vertices()) edges.push_back(reach_set(d, {s}));
  return Hypergraph(d.vertex_count(), std::move(edges));
}

JoinTree gyo_join_tree(const Hypergraph& f) { return raw_gyo(f.edges()); }

bool is_alpha_acyclic(const Hypergraph& f) { return gyo_join_tree(f).exists; }

int DagTreeDecomposition::width() const {
  int w = 0;
  for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()));
  return w;
}

std::optional<DagTreeDecomposition> dag_tree_decomposition(const Digraph& d, int tau_max) {
  if (!d.is_acyclic()) throw input_error("decomposition requires an acyclic digraph");
  SourceLayout layout = analyze_sources(d);
  if (layout.sources.size() > 12)
    throw guard_error("decomposition search limited to 12 sources");
  if (layout.sources.empty()) return DagTreeDecomposition{};
  if (tau_max < 1) return std::nullopt;
  BagSearch search(layout, tau_max);
  return search.search(0);
}

int dag_treewidth(const Digraph& d) {
  for (int tau = 1;; ++tau)
    if (dag_tree_decomposition(d, tau)) return tau;
}

namespace {

int memoized_dtw(const Digraph& skeleton) {
  static std::map<CanonicalKey, int> memo;
  static std::mutex lock;
  CanonicalKey key = canonical_form(skeleton);
  {
    std::lock_guard<std::mutex> hold(lock);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
  }
  int tau = dag_treewidth(skeleton);
  std::lock_guard<std::mutex> hold(lock);
  memo.emplace(std::move(key), tau);
  return tau;
}

}  // namespace

OrientedDecomposition l_dag_treewidth_report(const Hypergraph& h, long long l) {
  const int n = h.vertex_count();
  if (n > 10) throw guard_error("treewidth over orderings limited to 10 vertices");

  OrientedDecomposition best;
  std::map<std::vector<Edge>, char> seen;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Dah oriented(h, perm);
    std::vector<Edge> key = oriented.ordered_edges();
    std::sort(key.begin(), key.end());
    if (!seen.emplace(std::move(key), 1).second) continue;
    int tau = memoized_dtw(l_skeleton(oriented, l));
    if (tau > best.tau) {
      best.tau = tau;
      best.ordering = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  Dah oriented(h, best.ordering);
  auto dec = dag_tree_decomposition(l_skeleton(oriented, l), best.tau);
  if (!dec) throw internal_error("maximizing ordering lost its decomposition");
  best.decomposition = std::move(*dec);
  return best;
}

int l_dag_treewidth(const Hypergraph& h, long long l) {
  return l_dag_treewidth_report(h, l).tau;
}

}  // namespace hypercount
